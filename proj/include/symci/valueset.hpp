#pragma once

#include <cstdint>
#include <vector>

#include "symci/bigs.hpp"
#include "symci/census.hpp"
#include "symci/ff.hpp"
#include "symci/report.hpp"
#include "symci/symsys.hpp"
#include "symci/upoly.hpp"

namespace symci::valueset {

// H tables and R_j polynomials live in the Pi_1..Pi_r variables; structurally
// they are MPolys whose Y_k slot is read as Pi_k.
using PiPoly = symsys::MPoly;

// The fixed high coefficient window (a_{n-1}, ..., a_{n-s}) of
// f_a = T^n + a_{n-1} T^{n-1} + ... + a_{n-s} T^{n-s}. Members of the family
// are f_a + (arbitrary tail of degree <= n-s-1).
struct CoeffWindow {
  const ff::FieldCtx* F = nullptr;  // prime field
  std::uint32_t n = 0;
  std::uint32_t s = 0;
  std::vector<ff::Fq> a;  // a[t] = a_{n-1-t}, so a.front() = a_{n-1}, a.back() = a_{n-s}
};

// Requires a prime base field and 1 <= s <= n-2 (s = n-1 would leave only the
// constant term free, which shifts every member's value set identically).
// Throws NonPrime / DimensionMismatch.
CoeffWindow make_window(const ff::FieldCtx& F, std::uint32_t n, std::uint32_t s,
                        const std::vector<ff::Fq>& a);

// f_a itself (all tail coefficients zero).
upoly::UPoly window_poly(const CoeffWindow& win);

// f_a + b_{n-s-1} T^{n-s-1} + ... + b_0, with b given low-to-high,
// b.size() == n - s.
upoly::UPoly completed_member(const CoeffWindow& win, const std::vector<ff::Fq>& b);

// |{f(c) : c in F_q}| by full evaluation into a presence table.
std::uint64_t value_set_cardinality(const upoly::UPoly& f);

// Average of value_set_cardinality over all q^(n-s) completions of the
// window, as an exact rational. Work is q^(n-s+1) evaluation units.
BigRat average_value_set_direct(const CoeffWindow& win,
                                std::uint64_t work_ceiling = census::kDefaultWorkCeiling,
                                unsigned workers = 1);

// Reduction table for powers of T modulo prod_{k=1}^r (T - X_k):
// T^j == sum_{i=0}^{r-1} H[j][i] (Pi(X)) * T^i. Valid entries are
// H[j][i] for r <= j <= n, 0 <= i <= r-1 (rows below j = r are left empty);
// every H[j][i] is weight-homogeneous of weight j - i. Requires 1 <= r <= n.
std::vector<std::vector<PiPoly>> build_H_table(const ff::FieldCtx& F, std::uint32_t r,
                                               std::uint32_t n);

// The m = r-n+s reduction polynomials R_j^a = a_j + sum_{i=r}^n a_i H[i][j]
// (a_n = 1; indices outside the window contribute 0), for n-s <= j <= r-1,
// packaged as a symmetric system in r coordinates. R_j^a is monic of degree
// one in Pi_{n-j}, so the system is triangular in the top variables.
// Requires n-s+1 <= r <= n (HypothesisRangeViolation otherwise).
symsys::SymSystem build_Rj_system(const CoeffWindow& win, std::uint32_t r);

enum class ChiMethod { subsets, pointcount };

// Number of r-subsets X of F_q such that f_a is congruent to a polynomial of
// degree <= n-s-1 modulo prod_{x in X} (T - x). subsets enumerates the
// subsets directly (C(q,r) work units); pointcount counts the distinct-
// coordinate zeros of build_Rj_system via the census and divides by r!
// (NonDivisibleCount if the tally ever fails that, which would be a bug).
std::uint64_t chi(const CoeffWindow& win, std::uint32_t r,
                  ChiMethod method = ChiMethod::subsets,
                  std::uint64_t work_ceiling = census::kDefaultWorkCeiling,
                  unsigned workers = 1);

// The same average through the inclusion-exclusion formula
//   sum_{r=1}^{n-s} (-1)^(r-1) C(q,r) q^(1-r)
//     + q^(1-(n-s)) * sum_{r=n-s+1}^{n} (-1)^(r-1) chi(a,r).
// Must agree exactly with average_value_set_direct.
BigRat average_value_set_via_chi(const CoeffWindow& win,
                                 ChiMethod method = ChiMethod::subsets,
                                 std::uint64_t work_ceiling = census::kDefaultWorkCeiling,
                                 unsigned workers = 1);

// mu_n = sum_{r=1}^n (-1)^(r-1) / r!, the degree-n truncation of 1 - 1/e.
BigRat mu(std::uint32_t n);

// Enclosure of (n-2)^5 e^(2 sqrt(n)) / 2^(n-2), the q-free envelope of the
// final average bound. Requires n >= 2.
RatInterval final_bound_envelope(std::uint32_t n);

// Three layers of checks for one window, all exact (interval endpoints are
// folded in where e or sqrt(n) appear, and a check passes only against the
// unfavorable endpoint):
//   chi[r=..]      |chi(a,r) - q^(n-s)/r!| against the per-r estimate,
//                  one row per r in [n-s+1, n];
//   avg-corollary  |V(n,s,a) - mu_n q - 1/(2e)| against the summed estimate;
//   avg-final      the same deviation against the closed-form envelope.
// Requires 2(s+1) <= n (HypothesisRangeViolation otherwise).
std::vector<report::BoundCheck> verify_value_set_bounds(
    const CoeffWindow& win, std::uint64_t work_ceiling = census::kDefaultWorkCeiling,
    unsigned workers = 1);

}  // namespace symci::valueset
