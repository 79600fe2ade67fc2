#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "symci/errors.hpp"
#include "symci/ff.hpp"

namespace symci::upoly {

// Dense univariate polynomial over one FieldCtx, coefficients low-to-high,
// never any trailing zero; the zero polynomial has an empty vector.
class UPoly {
 public:
  UPoly() = default;
  static UPoly make(const ff::FieldCtx& F, std::vector<ff::Fq> coeffs);
  static UPoly zero(const ff::FieldCtx& F) { return make(F, {}); }
  static UPoly constant(const ff::FieldCtx& F, ff::Fq c) { return make(F, {c}); }
  static UPoly monomial(const ff::FieldCtx& F, std::uint32_t deg, ff::Fq c = 1);
  static UPoly from_roots(const ff::FieldCtx& F, const std::vector<ff::Fq>& roots);

  const ff::FieldCtx& field() const { return *F_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  ff::Fq coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  ff::Fq leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<ff::Fq>& coeffs() const { return c_; }

  ff::Fq eval(ff::Fq x) const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  std::string to_string() const;  // human-readable, highest degree first

 private:
  const ff::FieldCtx* F_ = nullptr;
  std::vector<ff::Fq> c_;
};

UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly scalar_mul(ff::Fq c, const UPoly& a);

struct DivRem {
  UPoly quot, rem;
};
// Euclidean division, any nonzero divisor. Throws DivisionByZeroPoly.
DivRem poly_divrem(const UPoly& f, const UPoly& g);

UPoly gcd_monic(UPoly a, UPoly b);  // monic gcd; gcd(0,0) = 0
UPoly derivative(const UPoly& f);
UPoly pow_mod(UPoly base, std::uint64_t e, const UPoly& mod);
UPoly make_monic(const UPoly& f);

// gcd(f, f') test with the char-p branch: f' == 0 means f is a p-th power,
// hence not squarefree (degree >= 1). Constants count as squarefree, the
// zero polynomial does not.
bool is_squarefree(const UPoly& f);

// f = prod g_e^e with each g_e monic squarefree, pairwise coprime.
std::vector<std::pair<UPoly, std::uint32_t>> squarefree_decomposition(const UPoly& f);

// Multiset of irreducible-factor degrees, as multiplicity counts:
// counts[i-1] = number of degree-i factors of f counted with multiplicity.
struct FactPattern {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> counts;

  bool operator==(const FactPattern& o) const { return n == o.n && counts == o.counts; }
  bool operator<(const FactPattern& o) const { return counts < o.counts; }
  std::string to_string() const;  // e.g. "1^2 3^1"
};

FactPattern pattern_of_counts(std::vector<std::uint32_t> counts);

// Degree pattern of monic f via squarefree decomposition plus distinct-degree
// splitting. Factors are never recovered. Throws NotMonic.
FactPattern factorization_pattern(const UPoly& f);

}  // namespace symci::upoly
