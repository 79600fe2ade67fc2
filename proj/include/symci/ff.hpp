#pragma once

#include <cstdint>
#include <vector>

#include "symci/errors.hpp"

namespace symci::ff {

// Field element, encoded as sum c_h * p^h with digits c_h in [0, p).
// Elements are meaningless without their FieldCtx; all ops go through it.
using Fq = std::uint32_t;

// Arithmetic context for F_{p^k}. For k > 1 the modulus is the monic
// irreducible of degree k over F_p whose non-leading coefficient vector has
// the least base-p encoding; this pins every derived object (conjugates,
// normal elements, conversion matrices) to one deterministic choice.
class FieldCtx {
 public:
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint64_t q = 0;
  std::vector<std::uint32_t> modulus;  // k+1 digits, low-to-high, monic

  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const;
  Fq neg(Fq a) const;
  Fq mul(Fq a, Fq b) const;
  Fq inv(Fq a) const;  // a != 0
  Fq pow(Fq a, std::uint64_t e) const;
  Fq frobenius(Fq a, std::uint64_t e = 1) const;  // a^(p^e); e = k is identity

  std::uint32_t digit(Fq a, std::uint32_t h) const;
  Fq from_digits(const std::vector<std::uint32_t>& d) const;

  // Scalar c of the prime subfield, as an element here.
  Fq from_base(std::uint32_t c) const { return c % p; }
  bool in_prime_subfield(Fq a) const { return a < p; }

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

 private:
  FieldCtx() = default;
  friend const FieldCtx& build_field(std::uint32_t, std::uint32_t);

  Fq raw_add(Fq a, Fq b) const;
  Fq raw_sub(Fq a, Fq b) const;
  Fq raw_mul(Fq a, Fq b) const;

  bool tabled_ = false;
  std::vector<Fq> add_tab_, mul_tab_, inv_tab_;
  std::vector<std::vector<std::uint32_t>> red_;  // T^i mod modulus, i in [k, 2k-2]
};

bool is_prime(std::uint64_t n);

// Contexts are cached per (p, k) for the process lifetime; the returned
// reference stays valid. Throws NonPrime for composite p.
const FieldCtx& build_field(std::uint32_t p, std::uint32_t k);

// First element theta (in encoding order) whose Frobenius orbit
// theta, theta^p, ..., theta^(p^(k-1)) has full rank over F_p.
Fq find_normal_element(const FieldCtx& F);

}  // namespace symci::ff
