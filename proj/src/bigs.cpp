#include "symci/bigs.hpp"

#include <stdexcept>

namespace symci {

BigInt int_pow(const BigInt& base, std::uint64_t e) {
  BigInt acc = 1, b = base;
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

BigInt factorial(std::uint64_t n) {
  BigInt acc = 1;
  for (std::uint64_t i = 2; i <= n; ++i) acc *= i;
  return acc;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc *= BigInt(n - k + i);
    acc /= i;  // exact at every step
  }
  return acc;
}

std::string rat_to_decimal(const BigRat& x, unsigned digits) {
  BigInt num = numerator(x), den = denominator(x);
  bool neg = num < 0;
  if (neg) num = -num;
  BigInt scale = int_pow(10, digits);
  BigInt scaled = num * scale;
  BigInt q = scaled / den, r = scaled % den;
  if (2 * r >= den) ++q;
  BigInt ip = q / scale, fp = q % scale;
  std::string frac = fp.str();
  frac.insert(0, digits - frac.size(), '0');
  std::string out = (neg ? "-" : "") + ip.str();
  if (digits > 0) out += "." + frac;
  return out;
}

BigRat abs_dist_upper(const BigRat& c, const RatInterval& I) {
  BigRat a = abs(c - I.lo), b = abs(c - I.hi);
  return a > b ? a : b;
}

RatInterval sqrt_interval(std::uint64_t n) {
  // isqrt of n*10^2d gives d correct decimal digits either side.
  const unsigned d = 24;
  BigInt scaled = BigInt(n) * int_pow(10, 2 * d);
  BigInt lo = sqrt(scaled);              // floor square root
  BigInt denom = int_pow(10, d);
  return {BigRat(lo, denom), BigRat(lo + 1, denom)};
}

RatInterval exp_interval(const RatInterval& x) {
  if (x.lo < 0) throw std::invalid_argument("exp_interval requires x >= 0");
  // Taylor partial sums: S_K(t) <= e^t; tail at t bounded by last term times
  // a geometric series with ratio t/(K+1) < 1 once K+1 > t.
  auto lower = [](const BigRat& t) {
    BigRat sum = 1, term = 1;
    for (unsigned k = 1; k <= 48; ++k) {
      term *= t;
      term /= k;
      sum += term;
    }
    return sum;
  };
  auto upper = [](const BigRat& t) {
    BigRat sum = 1, term = 1;
    unsigned K = 48;
    for (unsigned k = 1; k <= K; ++k) {
      term *= t;
      term /= k;
      sum += term;
    }
    BigRat ratio = t / BigRat(K + 1);
    if (ratio >= 1) throw std::invalid_argument("exp_interval argument too large");
    sum += term * ratio / (1 - ratio);
    return sum;
  };
  return {lower(x.lo), upper(x.hi)};
}

RatInterval e_interval() { return exp_interval(RatInterval::point(1)); }

RatInterval inv_2e_interval() {
  RatInterval e = e_interval();
  return {BigRat(1) / (2 * e.hi), BigRat(1) / (2 * e.lo)};
}

}  // namespace symci
