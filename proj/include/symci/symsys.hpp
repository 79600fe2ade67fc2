#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "symci/errors.hpp"
#include "symci/ff.hpp"

namespace symci::symsys {

// Exponent vector, one entry per variable Y_1..Y_s.
using Exp = std::vector<std::uint32_t>;

// Graded reverse lexicographic: lower total degree first; ties broken so that
// of two equal-degree monomials, the one with the larger exponent in the
// rightmost differing position comes first (is smaller).
struct GrevlexLess {
  bool operator()(const Exp& a, const Exp& b) const;
};

// Sparse multivariate polynomial over a fixed field, canonical term order
// grevlex, no explicit zero coefficients ever stored. Variable Y_j carries
// weight j (1-based), which grades everything downstream.
class MPoly {
 public:
  MPoly() = default;
  MPoly(const ff::FieldCtx& F, std::uint32_t s) : F_(&F), s_(s) {}

  static MPoly constant(const ff::FieldCtx& F, std::uint32_t s, ff::Fq c);
  static MPoly variable(const ff::FieldCtx& F, std::uint32_t s, std::uint32_t j);

  const ff::FieldCtx& field() const { return *F_; }
  std::uint32_t nvars() const { return s_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exp& e, ff::Fq c);  // accumulates, erases on cancel
  ff::Fq coeff_at(const Exp& e) const;
  const std::map<Exp, ff::Fq, GrevlexLess>& terms() const { return terms_; }

  std::uint64_t total_degree() const;
  std::uint64_t weight() const;  // max term weight; 0 for the zero polynomial
  bool is_weight_homogeneous() const;
  MPoly highest_weight_component() const;  // throws ZeroPolynomial
  MPoly derivative(std::uint32_t j) const;  // d/dY_j, termwise, char-p aware

  // Evaluation over E, which is either the coefficient field itself or an
  // extension of a prime coefficient field (scalars embed as constants).
  ff::Fq eval(const std::vector<ff::Fq>& y, const ff::FieldCtx& E) const;

  bool operator==(const MPoly& o) const { return s_ == o.s_ && terms_ == o.terms_; }

  // Canonical text: terms in descending grevlex, "c*Y1^2*Y3" style, " + "
  // separators, bare coefficient for the constant term. parse accepts the
  // same grammar with arbitrary spacing; emit(parse(emit(p))) == emit(p).
  std::string emit() const;
  static MPoly parse(const ff::FieldCtx& F, std::uint32_t s, const std::string& text);

 private:
  const ff::FieldCtx* F_ = nullptr;
  std::uint32_t s_ = 0;
  std::map<Exp, ff::Fq, GrevlexLess> terms_;
};

MPoly add(const MPoly& a, const MPoly& b);
MPoly sub(const MPoly& a, const MPoly& b);
MPoly mul(const MPoly& a, const MPoly& b);
MPoly scalar_mul(ff::Fq c, const MPoly& a);

// First s elementary symmetric functions of x, by the truncated product
// prod (T + x_i); O(|x| * s) field ops. Result[j] = Pi_{j+1}(x).
std::vector<ff::Fq> elem_sym_eval(const ff::FieldCtx& E, const std::vector<ff::Fq>& x,
                                  std::uint32_t s);

// m polynomials S_1..S_m in Y_1..Y_s, composed with Pi_1..Pi_s of r
// variables. The composition R_i = S_i(Pi_1..Pi_s) is never expanded; d_i is
// its degree, equal to the weight of S_i.
struct SymSystem {
  const ff::FieldCtx* F = nullptr;  // prime base field
  std::uint32_t s = 0, r = 0, m = 0;
  std::vector<MPoly> S;
  std::vector<std::uint32_t> d;
  bool in_theorem_range = false;  // m <= s <= r - m - 2
};

// enforce_range=true (the default) rejects systems outside the range
// m <= s <= r-m-2; the relaxed path still requires 1 <= m <= s <= r, a prime
// base field, and nonconstant polynomials, and records in_theorem_range.
SymSystem make_system(const ff::FieldCtx& F, std::vector<MPoly> polys, std::uint32_t r,
                      bool enforce_range = true);

// Values S_1..S_m at Pi(x) for x in E^r. Throws DimensionMismatch.
std::vector<ff::Fq> system_eval(const SymSystem& sys, const std::vector<ff::Fq>& x,
                                const ff::FieldCtx& E);

// Rank of (dS_i/dY_j)(y) over E.
std::uint32_t jacobian_rank_at(const std::vector<MPoly>& polys, const std::vector<ff::Fq>& y,
                               const ff::FieldCtx& E);

// At one point x in E^r, checks both closed forms of the Pi Jacobian:
// the factorization (dPi/dX) = B_r * A_r (B_r lower triangular in the Pi's,
// A_r the Vandermonde of x) and det(dPi/dX) = (-1)^(r(r-1)/2) * prod_{i<j}
// (x_j - x_i). The left side is computed independently via omit-one
// evaluations dPi_i/dX_j = Pi_{i-1}(x without x_j).
bool vandermonde_factorization_check(const ff::FieldCtx& E, const std::vector<ff::Fq>& x);

// Confirms, at one sample x, that the top homogeneous part of each R_i agrees
// with S_i^wt(Pi(x)): interpolates R_i(t*x) at d_i + 1 scalars t from the
// base field. Throws InsufficientScalars when q <= d_i.
bool leading_component_identity_check(const SymSystem& sys, const std::vector<ff::Fq>& x);

struct ExtensionSample {
  std::uint32_t degree = 0;    // extension degree over the base field
  std::uint64_t zeros = 0;     // points of the zero set scanned
  std::uint64_t failure_count = 0;
  std::vector<std::vector<ff::Fq>> failures;  // first witnesses where rank < m
};

struct HypothesisReport {
  std::uint64_t q = 0;
  std::uint32_t s = 0, m = 0, max_ext = 0;
  std::vector<ExtensionSample> system_samples;   // S itself
  std::vector<ExtensionSample> leading_samples;  // S^wt
  std::uint64_t work = 0;
  bool pass = false;
  std::string summary() const;  // "sampled up to degree e" vocabulary
};

// Enumerates the zero set of S (and of S^wt) over F_{q^j}, j = 1..max_ext,
// and checks Jacobian rank m at every zero. A sampling procedure, not a
// proof; the report says so. Throws WorkCeilingExceeded before enumerating.
HypothesisReport hypothesis_check(const SymSystem& sys, std::uint32_t max_ext,
                                  std::uint64_t work_ceiling);

}  // namespace symci::symsys
