#pragma once

// Brute-force reference implementations for cross-checking. Deliberately
// independent of the library's enumeration strategies: subset products
// instead of the truncated-product recurrence, full cartesian scans instead
// of multiset orbits, trial division instead of distinct-degree splitting.

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "symci/ff.hpp"
#include "symci/symsys.hpp"
#include "symci/upoly.hpp"

namespace oracle {

using symci::ff::FieldCtx;
using symci::ff::Fq;

// Pi_1..Pi_s of x by summing over all k-subsets.
inline std::vector<Fq> esym_subsets(const FieldCtx& E, const std::vector<Fq>& x,
                                    std::uint32_t s) {
  const std::uint32_t r = static_cast<std::uint32_t>(x.size());
  std::vector<Fq> pi(s, 0);
  for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
    std::uint32_t bits = __builtin_popcount(mask);
    if (bits > s) continue;
    Fq prod = 1;
    for (std::uint32_t i = 0; i < r; ++i)
      if (mask & (1u << i)) prod = E.mul(prod, x[i]);
    pi[bits - 1] = E.add(pi[bits - 1], prod);
  }
  return pi;
}

struct NaiveCounts {
  std::uint64_t affine = 0;
  std::uint64_t satisfying = 0;  // zeros that also meet every inequality pair
};

// Full q^r scan. Pairs are 1-based (i, j) with x_i != x_j required.
inline NaiveCounts naive_count(const symci::symsys::SymSystem& sys,
                               const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs) {
  const FieldCtx& F = *sys.F;
  NaiveCounts out;
  std::vector<Fq> x(sys.r, 0);
  for (;;) {
    auto pi = esym_subsets(F, x, sys.s);
    bool zero = true;
    for (const auto& S : sys.S)
      if (S.eval(pi, F) != 0) {
        zero = false;
        break;
      }
    if (zero) {
      ++out.affine;
      bool ok = true;
      for (auto [i, j] : pairs)
        if (x[i - 1] == x[j - 1]) {
          ok = false;
          break;
        }
      if (ok) ++out.satisfying;
    }
    std::uint32_t pos = 0;
    while (pos < sys.r && x[pos] + 1 == F.q) x[pos++] = 0;
    if (pos == sys.r) break;
    ++x[pos];
  }
  return out;
}

// All monic irreducibles of degree exactly d, by trial division against
// lower-degree tables. Memoized per (p, k, d); fields from build_field are
// cached for the process lifetime, so the stored polynomials stay valid.
inline const std::vector<symci::upoly::UPoly>& monic_irreducibles(const FieldCtx& F,
                                                                  std::uint32_t d) {
  using symci::upoly::UPoly;
  static std::map<std::array<std::uint64_t, 3>, std::vector<UPoly>> cache;
  std::array<std::uint64_t, 3> key{F.p, F.k, d};
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  std::vector<const std::vector<UPoly>*> lower;
  for (std::uint32_t e = 1; 2 * e <= d; ++e) lower.push_back(&monic_irreducibles(F, e));

  std::vector<UPoly> out;
  std::vector<Fq> coeffs(d + 1, 0);
  coeffs[d] = 1;
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < d; ++i) total *= F.q;
  for (std::uint64_t enc = 0; enc < total; ++enc) {
    std::uint64_t v = enc;
    for (std::uint32_t i = 0; i < d; ++i) {
      coeffs[i] = static_cast<Fq>(v % F.q);
      v /= F.q;
    }
    UPoly f = UPoly::make(F, coeffs);
    bool irred = true;
    for (const auto* tbl : lower) {
      for (const auto& p : *tbl)
        if (symci::upoly::poly_divrem(f, p).rem.is_zero()) {
          irred = false;
          break;
        }
      if (!irred) break;
    }
    if (irred) out.push_back(std::move(f));
  }
  return cache.emplace(key, std::move(out)).first->second;
}

// Factor-degree pattern by repeated trial division, smallest degree first.
// Once every factor of degree <= deg(rest)/2 is gone, rest is irreducible.
inline symci::upoly::FactPattern pattern_by_trial_division(const symci::upoly::UPoly& f) {
  using symci::upoly::UPoly;
  const FieldCtx& F = f.field();
  const std::uint32_t n = static_cast<std::uint32_t>(f.degree());
  std::vector<std::uint32_t> counts(n, 0);
  UPoly rest = symci::upoly::make_monic(f);
  for (std::uint32_t d = 1; rest.degree() > 0 && 2 * d <= static_cast<std::uint32_t>(rest.degree());
       ++d) {
    for (const auto& p : monic_irreducibles(F, d)) {
      for (;;) {
        auto dr = symci::upoly::poly_divrem(rest, p);
        if (!dr.rem.is_zero()) break;
        ++counts[d - 1];
        rest = dr.quot;
      }
      if (rest.degree() == 0) break;
    }
  }
  if (rest.degree() > 0) ++counts[rest.degree() - 1];
  counts.resize(n, 0);
  return symci::upoly::pattern_of_counts(counts);
}

}  // namespace oracle
