#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace symci {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt int_pow(const BigInt& base, std::uint64_t e);
BigInt factorial(std::uint64_t n);
BigInt binomial(std::uint64_t n, std::uint64_t k);

// Fixed-point decimal rendering of an exact rational, round-to-nearest on the
// last digit. Used for slack ratios in reports; never fed back into math.
std::string rat_to_decimal(const BigRat& x, unsigned digits = 6);

// Closed rational interval [lo, hi]; endpoints exact. Enclosure arithmetic
// keeps lo <= true value <= hi under every operation below.
struct RatInterval {
  BigRat lo, hi;

  static RatInterval point(const BigRat& x) { return {x, x}; }
  RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
  RatInterval operator*(const BigRat& c) const {
    return c >= 0 ? RatInterval{lo * c, hi * c} : RatInterval{hi * c, lo * c};
  }
};

// |c - I| for exact c: the largest possible absolute deviation over the interval.
BigRat abs_dist_upper(const BigRat& c, const RatInterval& I);

RatInterval sqrt_interval(std::uint64_t n);        // encloses sqrt(n)
RatInterval exp_interval(const RatInterval& x);    // encloses e^x, x >= 0
RatInterval e_interval();                          // encloses e
RatInterval inv_2e_interval();                     // encloses 1/(2e)

}  // namespace symci
