#include "symci/valueset.hpp"

#include <string>
#include <thread>
#include <utility>

#include "symci/errors.hpp"

namespace symci::valueset {

using ff::Fq;
using symsys::MPoly;
using upoly::UPoly;

namespace {

// Coefficient a_i of f_a, with a_n = 1 and indices below the window reading
// as 0 (the tail slots belong to the completion b, not to a).
Fq window_coeff(const CoeffWindow& win, std::uint32_t i) {
  if (i == win.n) return 1;
  if (i + win.s >= win.n && i < win.n) return win.a[win.n - 1 - i];
  return 0;
}

void check_units(const BigInt& units, std::uint64_t ceiling, const std::string& what) {
  if (units > BigInt(ceiling)) {
    throw WorkCeilingExceeded(what + " needs " + units.str() + " units, ceiling " +
                              std::to_string(ceiling));
  }
}

Fq sign_of(std::uint32_t parity, const ff::FieldCtx& F) {
  return parity % 2 == 0 ? Fq{1} : F.neg(1);
}

// Copies P into new_s variable slots; dropping a slot that carries a nonzero
// exponent would change the polynomial, so that is an internal error.
MPoly resize_vars(const MPoly& P, std::uint32_t new_s) {
  MPoly out(P.field(), new_s);
  for (const auto& [e, c] : P.terms()) {
    symsys::Exp e2(new_s, 0);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (v >= new_s) throw Error("reduction polynomial uses a variable beyond Pi_s (internal invariant)");
      e2[v] = e[v];
    }
    out.add_term(e2, c);
  }
  return out;
}

}  // namespace

CoeffWindow make_window(const ff::FieldCtx& F, std::uint32_t n, std::uint32_t s,
                        const std::vector<Fq>& a) {
  if (F.k != 1) throw NonPrime("coefficient windows live over a prime field, got q = " + std::to_string(F.q));
  if (s < 1 || s + 2 > n) {
    throw DimensionMismatch("window length must satisfy 1 <= s <= n-2, got s = " +
                            std::to_string(s) + ", n = " + std::to_string(n));
  }
  if (a.size() != s) {
    throw DimensionMismatch("window of length " + std::to_string(s) + " given " +
                            std::to_string(a.size()) + " coefficients");
  }
  for (Fq c : a) {
    if (c >= F.q) throw DimensionMismatch("window coefficient " + std::to_string(c) + " not reduced mod q");
  }
  return CoeffWindow{&F, n, s, a};
}

UPoly window_poly(const CoeffWindow& win) {
  std::vector<Fq> coeffs(win.n + 1, 0);
  for (std::uint32_t i = win.n - win.s; i <= win.n; ++i) coeffs[i] = window_coeff(win, i);
  return UPoly::make(*win.F, std::move(coeffs));
}

UPoly completed_member(const CoeffWindow& win, const std::vector<Fq>& b) {
  const std::uint32_t tail = win.n - win.s;
  if (b.size() != tail) {
    throw DimensionMismatch("completion needs " + std::to_string(tail) + " coefficients, got " +
                            std::to_string(b.size()));
  }
  std::vector<Fq> coeffs(win.n + 1, 0);
  for (std::uint32_t i = 0; i < tail; ++i) {
    if (b[i] >= win.F->q) throw DimensionMismatch("completion coefficient not reduced mod q");
    coeffs[i] = b[i];
  }
  for (std::uint32_t i = tail; i <= win.n; ++i) coeffs[i] = window_coeff(win, i);
  return UPoly::make(*win.F, std::move(coeffs));
}

std::uint64_t value_set_cardinality(const UPoly& f) {
  const ff::FieldCtx& F = f.field();
  std::vector<char> seen(F.q, 0);
  std::uint64_t count = 0;
  for (Fq c = 0; c < F.q; ++c) {
    Fq v = f.eval(c);
    if (!seen[v]) {
      seen[v] = 1;
      ++count;
    }
  }
  return count;
}

BigRat average_value_set_direct(const CoeffWindow& win, std::uint64_t work_ceiling,
                                unsigned workers) {
  const ff::FieldCtx& F = *win.F;
  const std::uint32_t tail = win.n - win.s;
  check_units(int_pow(BigInt(F.q), tail + 1), work_ceiling, "value set average");

  auto scan_share = [&](unsigned t, unsigned stride) {
    std::uint64_t sum = 0;
    std::vector<Fq> b(tail, 0);
    for (Fq first = t; first < F.q; first += stride) {
      b.assign(tail, 0);
      b[0] = first;
      for (;;) {
        sum += value_set_cardinality(completed_member(win, b));
        std::uint32_t i = 1;
        while (i < tail && b[i] + 1 == F.q) b[i++] = 0;
        if (i == tail) break;
        ++b[i];
      }
    }
    return sum;
  };

  const unsigned W = std::max(1u, std::min<unsigned>(workers, F.q));
  std::uint64_t total = 0;
  if (W == 1) {
    total = scan_share(0, 1);
  } else {
    std::vector<std::uint64_t> parts(W, 0);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < W; ++t)
      pool.emplace_back([&, t] { parts[t] = scan_share(t, W); });
    for (auto& th : pool) th.join();
    for (std::uint64_t p : parts) total += p;
  }
  return BigRat(BigInt(total), int_pow(BigInt(F.q), tail));
}

std::vector<std::vector<PiPoly>> build_H_table(const ff::FieldCtx& F, std::uint32_t r,
                                               std::uint32_t n) {
  if (r < 1 || r > n) {
    throw DimensionMismatch("H table needs 1 <= r <= n, got r = " + std::to_string(r) +
                            ", n = " + std::to_string(n));
  }
  std::vector<std::vector<PiPoly>> H(n + 1);
  H[r].resize(r);
  for (std::uint32_t t = 0; t < r; ++t)
    H[r][r - 1 - t] = symsys::scalar_mul(sign_of(t, F), MPoly::variable(F, r, t + 1));
  for (std::uint32_t j = r; j < n; ++j) {
    const MPoly& top = H[j][r - 1];
    H[j + 1].resize(r);
    H[j + 1][0] = symsys::scalar_mul(sign_of(r - 1, F), symsys::mul(MPoly::variable(F, r, r), top));
    for (std::uint32_t k = 1; k < r; ++k) {
      MPoly shifted = symsys::scalar_mul(sign_of(r - 1 - k, F),
                                         symsys::mul(MPoly::variable(F, r, r - k), top));
      H[j + 1][k] = symsys::add(shifted, H[j][k - 1]);
    }
  }
  for (std::uint32_t j = r; j <= n; ++j)
    for (std::uint32_t i = 0; i < r; ++i)
      if (H[j][i].is_zero() || !H[j][i].is_weight_homogeneous() || H[j][i].weight() != j - i)
        throw Error("H table entry lost weight homogeneity (internal invariant)");
  return H;
}

symsys::SymSystem build_Rj_system(const CoeffWindow& win, std::uint32_t r) {
  const std::uint32_t n = win.n, s = win.s;
  if (r + s < n + 1 || r > n) {
    throw HypothesisRangeViolation("reduction system needs n-s+1 <= r <= n, got r = " +
                                   std::to_string(r) + ", n = " + std::to_string(n) +
                                   ", s = " + std::to_string(s));
  }
  const ff::FieldCtx& F = *win.F;
  auto H = build_H_table(F, r, n);
  std::vector<MPoly> polys;
  for (std::uint32_t j = n - s; j < r; ++j) {
    MPoly S = MPoly::constant(F, r, window_coeff(win, j));
    for (std::uint32_t i = r; i <= n; ++i) {
      Fq ai = window_coeff(win, i);
      if (ai != 0) S = symsys::add(S, symsys::scalar_mul(ai, H[i][j]));
    }
    polys.push_back(resize_vars(S, s));
  }
  return symsys::make_system(F, std::move(polys), r, /*enforce_range=*/false);
}

std::uint64_t chi(const CoeffWindow& win, std::uint32_t r, ChiMethod method,
                  std::uint64_t work_ceiling, unsigned workers) {
  const ff::FieldCtx& F = *win.F;
  if (method == ChiMethod::pointcount) {
    auto sys = build_Rj_system(win, r);
    auto rep = census::count_points(sys, census::IneqSet::all_pairs(r), work_ceiling, workers);
    const BigInt rf = factorial(r);
    BigInt dc(rep.distinct_count);
    if (dc % rf != 0) {
      throw NonDivisibleCount("distinct zero count " + dc.str() + " not divisible by r! = " +
                              rf.str());
    }
    return (dc / rf).convert_to<std::uint64_t>();
  }

  if (r == 0 || r > F.q) return 0;
  check_units(binomial(F.q, r), work_ceiling, "chi subset scan");
  const UPoly fa = window_poly(win);
  const int max_deg = static_cast<int>(win.n - win.s) - 1;

  // Subsets ordered by least element; worker t owns least elements t, t+W, ...
  auto scan_share = [&](unsigned t, unsigned stride) {
    std::uint64_t count = 0;
    std::vector<Fq> idx(r);
    for (std::uint32_t first = t; first + r <= F.q; first += stride) {
      for (std::uint32_t h = 0; h < r; ++h) idx[h] = first + h;
      for (;;) {
        UPoly rem = upoly::poly_divrem(fa, UPoly::from_roots(F, idx)).rem;
        if (rem.degree() <= max_deg) ++count;
        std::uint32_t pos = r - 1;
        while (pos >= 1 && idx[pos] == F.q - r + pos) --pos;
        if (pos == 0) break;
        ++idx[pos];
        for (std::uint32_t h = pos + 1; h < r; ++h) idx[h] = idx[h - 1] + 1;
      }
    }
    return count;
  };

  const unsigned W = std::max(1u, std::min<unsigned>(workers, F.q));
  if (W == 1) return scan_share(0, 1);
  std::vector<std::uint64_t> parts(W, 0);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < W; ++t)
    pool.emplace_back([&, t] { parts[t] = scan_share(t, W); });
  for (auto& th : pool) th.join();
  std::uint64_t total = 0;
  for (std::uint64_t p : parts) total += p;
  return total;
}

namespace {

// sum_{r=1}^{n-s} (-1)^(r-1) C(q,r) q^(1-r), the full-interpolation head of
// the average formula.
BigRat head_sum(std::uint64_t q, std::uint32_t n, std::uint32_t s) {
  BigRat head = 0;
  for (std::uint32_t r = 1; r + s <= n; ++r) {
    BigRat term(binomial(q, r), int_pow(BigInt(q), r - 1));
    head += (r % 2 == 1) ? term : -term;
  }
  return head;
}

}  // namespace

BigRat average_value_set_via_chi(const CoeffWindow& win, ChiMethod method,
                                 std::uint64_t work_ceiling, unsigned workers) {
  const std::uint64_t q = win.F->q;
  BigRat tail = 0;
  for (std::uint32_t r = win.n - win.s + 1; r <= win.n; ++r) {
    BigRat term(chi(win, r, method, work_ceiling, workers));
    tail += (r % 2 == 1) ? term : -term;
  }
  return head_sum(q, win.n, win.s) + tail / BigRat(int_pow(BigInt(q), win.n - win.s - 1));
}

BigRat mu(std::uint32_t n) {
  BigRat acc = 0;
  for (std::uint32_t r = 1; r <= n; ++r) {
    BigRat term(1, factorial(r));
    acc += (r % 2 == 1) ? term : -term;
  }
  return acc;
}

RatInterval final_bound_envelope(std::uint32_t n) {
  if (n < 2) throw DimensionMismatch("bound envelope needs n >= 2, got n = " + std::to_string(n));
  BigRat factor(int_pow(BigInt(n - 2), 5), int_pow(BigInt(2), n - 2));
  return exp_interval(sqrt_interval(n) * BigRat(2)) * factor;
}

std::vector<report::BoundCheck> verify_value_set_bounds(const CoeffWindow& win,
                                                        std::uint64_t work_ceiling,
                                                        unsigned workers) {
  const std::uint32_t n = win.n, s = win.s;
  if (2 * (s + 1) > n) {
    throw HypothesisRangeViolation("average bounds need 2(s+1) <= n, got n = " +
                                   std::to_string(n) + ", s = " + std::to_string(s));
  }
  const std::uint64_t q = win.F->q;
  const BigInt qB(q);

  std::vector<report::BoundCheck> checks;
  BigRat tail = 0;       // alternating chi sum, feeds the exact average
  BigRat cor_terms = 0;  // per-r contributions to the corollary bound
  for (std::uint32_t r = n - s + 1; r <= n; ++r) {
    const std::uint64_t chi_r = chi(win, r, ChiMethod::subsets, work_ceiling, workers);
    BigInt D = 0, delta = 1;
    for (std::uint32_t j = n - r + 1; j <= s; ++j) {
      D += j - 1;
      delta *= j;
    }
    const BigInt rf = factorial(r);
    const BigInt pairs = BigInt(r) * (r - 1);  // twice C(r,2)
    const BigInt core = 14 * D * D * D * delta * delta;
    BigRat main(int_pow(qB, n - s), rf);
    BigRat bound = BigRat(pairs * delta * int_pow(qB, n - s - 1), 2 * rf) +
                   BigRat(core * (qB + 1) * int_pow(qB, n - s - 2), rf);
    checks.push_back(report::make_bound_check("chi[r=" + std::to_string(r) + "]", D, delta,
                                              main, bound, BigRat(chi_r)));
    cor_terms += BigRat(pairs * delta, 2 * rf) + BigRat(core * (qB + 1), rf * qB);
    BigRat signed_chi(chi_r);
    tail += (r % 2 == 1) ? signed_chi : -signed_chi;
  }

  const BigRat V = head_sum(q, n, s) + tail / BigRat(int_pow(qB, n - s - 1));
  const BigRat main_avg = mu(n) * BigRat(q);
  // The center is mu_n q + 1/(2e); the deviation is measured against the
  // unfavorable endpoint of the 1/(2e) enclosure.
  const BigRat dev = abs_dist_upper(V - main_avg, inv_2e_interval());

  const BigRat cor_bound = BigRat(1, 2 * factorial(n - s - 1)) + BigRat(7, qB) + cor_terms;
  checks.push_back(report::make_bound_check_raw("avg-corollary", 0, 1, main_avg, cor_bound, V, dev));

  const RatInterval env = final_bound_envelope(n);
  const BigRat final_bound = env.lo + BigRat(7, qB);
  checks.push_back(report::make_bound_check_raw("avg-final", 0, 1, main_avg, final_bound, V, dev));
  return checks;
}

}  // namespace symci::valueset
