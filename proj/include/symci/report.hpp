#pragma once

#include <string>

#include "symci/bigs.hpp"

namespace symci::report {

// One explicit inequality, evaluated exactly. `observed` is the measured
// statistic, `main_term` the predicted center, and pass means
// deviation <= bound with every quantity exact (interval endpoints already
// folded in by the caller where transcendentals are involved).
struct BoundCheck {
  std::string name;
  BigInt D = 0;
  BigInt delta = 1;
  BigRat main_term = 0;
  BigRat bound = 0;
  BigRat observed = 0;
  BigRat deviation = 0;
  bool pass = false;
  bool vacuous = false;         // bound >= main term: inequality carries no content
  bool hypothesis_met = true;   // the theorem's range assumptions hold here
  std::string slack;            // bound/deviation, decimal; "inf" when deviation = 0
};

BoundCheck make_bound_check(const std::string& name, const BigInt& D, const BigInt& delta,
                            const BigRat& main_term, const BigRat& bound, const BigRat& observed,
                            bool hypothesis_met = true);

// Same, for checks whose deviation was computed against an interval endpoint.
BoundCheck make_bound_check_raw(const std::string& name, const BigInt& D, const BigInt& delta,
                                const BigRat& main_term, const BigRat& bound,
                                const BigRat& observed, const BigRat& deviation,
                                bool hypothesis_met = true);

std::string rat_str(const BigRat& x);  // "17/5", integers without "/1"

// Write-then-rename so readers never see a torn report.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace symci::report
