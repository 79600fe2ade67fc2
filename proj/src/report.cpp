#include "symci/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace symci::report {

BoundCheck make_bound_check_raw(const std::string& name, const BigInt& D, const BigInt& delta,
                                const BigRat& main_term, const BigRat& bound,
                                const BigRat& observed, const BigRat& deviation,
                                bool hypothesis_met) {
  BoundCheck c;
  c.name = name;
  c.D = D;
  c.delta = delta;
  c.main_term = main_term;
  c.bound = bound;
  c.observed = observed;
  c.deviation = deviation;
  c.pass = deviation <= bound;
  c.vacuous = bound >= main_term;
  c.hypothesis_met = hypothesis_met;
  c.slack = deviation == 0 ? "inf" : rat_to_decimal(bound / deviation, 6);
  return c;
}

BoundCheck make_bound_check(const std::string& name, const BigInt& D, const BigInt& delta,
                            const BigRat& main_term, const BigRat& bound, const BigRat& observed,
                            bool hypothesis_met) {
  return make_bound_check_raw(name, D, delta, main_term, bound, observed,
                              abs(observed - main_term), hypothesis_met);
}

std::string rat_str(const BigRat& x) {
  BigInt num = numerator(x), den = denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

void atomic_write(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write to " + tmp + " failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename " + tmp + " -> " + path + " failed");
}

}  // namespace symci::report
