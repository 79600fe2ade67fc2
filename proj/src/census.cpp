#include "symci/census.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <thread>

namespace symci::census {

using ff::FieldCtx;
using ff::Fq;
using symsys::SymSystem;

IneqSet IneqSet::all_pairs(std::uint32_t r) {
  IneqSet s;
  for (std::uint32_t i = 1; i <= r; ++i)
    for (std::uint32_t j = i + 1; j <= r; ++j) s.pairs.emplace_back(i, j);
  return s;
}

IneqSet IneqSet::from_pairs(std::vector<std::pair<std::uint32_t, std::uint32_t>> raw,
                            std::uint32_t r) {
  for (auto& [i, j] : raw) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > r || i == j)
      throw Error("inequality pair (" + std::to_string(i) + "," + std::to_string(j) +
                  ") out of range for r = " + std::to_string(r));
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  IneqSet s;
  s.pairs = std::move(raw);
  return s;
}

bool IneqSet::is_all(std::uint32_t r) const {
  return pairs.size() == static_cast<std::size_t>(r) * (r - 1) / 2;
}

std::string IneqSet::to_string(std::uint32_t r) const {
  if (pairs.empty()) return "none";
  if (is_all(r)) return "all";
  std::ostringstream os;
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    if (t) os << ";";
    os << pairs[t].first << "-" << pairs[t].second;
  }
  return os.str();
}

namespace {

const std::uint32_t kMaxR = 20;  // r! must fit in uint64

std::uint64_t factorial_u64(std::uint32_t n) {
  std::uint64_t f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

struct Tally {
  std::uint64_t affine = 0, distinct = 0, points = 0;
};

// Non-decreasing tuples over [0, q) with a fixed first value. The system is
// symmetric, so one representative per multiset suffices; the orbit size is
// r!/prod(multiplicity!).
template <typename Fn>
void for_each_multiset_with_first(std::uint64_t q, std::uint32_t r, Fq first, Fn&& fn) {
  std::vector<Fq> x(r, first);
  for (;;) {
    fn(x);
    std::size_t pos = r - 1;
    while (pos >= 1) {
      if (static_cast<std::uint64_t>(x[pos]) + 1 < q) {
        ++x[pos];
        for (std::size_t t = pos + 1; t < r; ++t) x[t] = x[pos];
        break;
      }
      --pos;
    }
    if (pos == 0) break;  // first value is fixed; done
  }
}

bool is_zero_point(const SymSystem& sys, const std::vector<Fq>& x, const FieldCtx& F) {
  auto pi = symsys::elem_sym_eval(F, x, sys.s);
  for (auto& P : sys.S)
    if (P.eval(pi, F) != 0) return false;
  return true;
}

Tally run_multiset_partition(const SymSystem& sys, const std::vector<Fq>& firsts,
                             bool want_distinct) {
  const FieldCtx& F = *sys.F;
  const std::uint32_t r = sys.r;
  const std::uint64_t rfact = factorial_u64(r);
  Tally t;
  for (Fq c : firsts) {
    for_each_multiset_with_first(F.q, r, c, [&](const std::vector<Fq>& x) {
      ++t.points;
      if (!is_zero_point(sys, x, F)) return;
      // orbit size from the run lengths of the sorted tuple
      std::uint64_t weight = rfact;
      std::size_t i = 0;
      bool all_distinct = true;
      while (i < x.size()) {
        std::size_t j = i;
        while (j < x.size() && x[j] == x[i]) ++j;
        if (j - i > 1) {
          all_distinct = false;
          weight /= factorial_u64(static_cast<std::uint32_t>(j - i));
        }
        i = j;
      }
      t.affine += weight;
      if (want_distinct && all_distinct) t.distinct += rfact;
    });
  }
  return t;
}

Tally run_naive_partition(const SymSystem& sys, const std::vector<Fq>& firsts,
                          const IneqSet& ineq) {
  const FieldCtx& F = *sys.F;
  const std::uint32_t r = sys.r;
  Tally t;
  std::vector<Fq> x(r, 0);
  for (Fq c : firsts) {
    x.assign(r, 0);
    x[0] = c;
    for (;;) {
      ++t.points;
      if (is_zero_point(sys, x, F)) {
        ++t.affine;
        bool ok = true;
        for (auto& [i, j] : ineq.pairs)
          if (x[i - 1] == x[j - 1]) {
            ok = false;
            break;
          }
        if (ok) ++t.distinct;
      }
      std::size_t pos = r - 1;
      for (;;) {
        if (pos == 0) break;  // first coordinate fixed
        if (static_cast<std::uint64_t>(x[pos]) + 1 < F.q) {
          ++x[pos];
          break;
        }
        x[pos--] = 0;
      }
      if (pos == 0) break;
    }
  }
  return t;
}

Tally run_partitioned(const SymSystem& sys, bool naive, const IneqSet& ineq, bool want_distinct,
                      std::uint32_t workers) {
  const std::uint64_t q = sys.F->q;
  workers = std::max<std::uint32_t>(1, std::min<std::uint32_t>(workers, static_cast<std::uint32_t>(q)));
  std::vector<std::vector<Fq>> parts(workers);
  for (std::uint64_t c = 0; c < q; ++c) parts[c % workers].push_back(static_cast<Fq>(c));

  std::vector<Tally> results(workers);
  if (workers == 1) {
    results[0] = naive ? run_naive_partition(sys, parts[0], ineq)
                       : run_multiset_partition(sys, parts[0], want_distinct);
  } else {
    std::vector<std::thread> pool;
    for (std::uint32_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        results[w] = naive ? run_naive_partition(sys, parts[w], ineq)
                           : run_multiset_partition(sys, parts[w], want_distinct);
      });
    for (auto& th : pool) th.join();
  }
  Tally total;
  for (auto& t : results) {
    total.affine += t.affine;
    total.distinct += t.distinct;
    total.points += t.points;
  }
  return total;
}

void check_ceiling(const SymSystem& sys, bool naive, std::uint64_t work_ceiling) {
  BigInt points = naive ? int_pow(BigInt(sys.F->q), sys.r)
                        : binomial(static_cast<std::uint64_t>(sys.F->q) + sys.r - 1, sys.r);
  BigInt units = points * sys.r;
  if (units > BigInt(work_ceiling))
    throw WorkCeilingExceeded("enumeration needs " + units.str() + " units, ceiling " +
                              std::to_string(work_ceiling));
}

}  // namespace

CountReport count_points(const SymSystem& sys, const IneqSet& ineq, std::uint64_t work_ceiling,
                         std::uint32_t workers) {
  if (sys.r > kMaxR) throw Error("r > " + std::to_string(kMaxR) + " not supported");
  for (auto& [i, j] : ineq.pairs)
    if (j > sys.r) throw DimensionMismatch("inequality pair index exceeds r");

  const bool full = ineq.is_all(sys.r);
  const bool naive = !ineq.empty() && !full;  // partial sets break the orbit reduction
  check_ceiling(sys, naive, work_ceiling);

  auto t0 = std::chrono::steady_clock::now();
  Tally t = run_partitioned(sys, naive, ineq, full, workers);

  CountReport rep;
  rep.q = sys.F->q;
  rep.r = sys.r;
  rep.m = sys.m;
  rep.s = sys.s;
  rep.d = sys.d;
  rep.ineq = ineq;
  rep.affine_count = t.affine;
  rep.distinct_count = naive ? t.distinct : (full ? t.distinct : t.affine);
  rep.work = t.points * sys.r;
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::uint64_t count_infinity(const SymSystem& sys, std::uint64_t work_ceiling,
                             std::uint32_t workers) {
  if (sys.r > kMaxR) throw Error("r > " + std::to_string(kMaxR) + " not supported");
  std::vector<symsys::MPoly> wt;
  wt.reserve(sys.m);
  for (auto& P : sys.S) {
    symsys::MPoly W = P.highest_weight_component();
    if (!W.is_weight_homogeneous())
      throw NonHomogeneousLeadingPart("top-weight part is not weight-homogeneous");
    wt.push_back(std::move(W));
  }
  SymSystem cone = symsys::make_system(*sys.F, std::move(wt), sys.r, false);
  check_ceiling(cone, false, work_ceiling);
  Tally t = run_partitioned(cone, false, IneqSet::none(), false, workers);

  const std::uint64_t q = sys.F->q;
  // the cone is stable under scaling, so cone size = 1 + (q-1) * projective
  if ((t.affine - 1) % (q - 1) != 0)
    throw Error("cone count " + std::to_string(t.affine) + " not 1 mod q-1 (internal invariant)");
  return (t.affine - 1) / (q - 1);
}

void attach_infinity(CountReport& rep, const SymSystem& sys, std::uint64_t work_ceiling,
                     std::uint32_t workers) {
  rep.infinity_count = count_infinity(sys, work_ceiling, workers);
  rep.has_infinity = true;
}

std::vector<report::BoundCheck> verify_estimate(const CountReport& rep, const SymSystem& sys) {
  if (rep.q != sys.F->q || rep.r != sys.r || rep.m != sys.m || rep.s != sys.s || rep.d != sys.d)
    throw InvalidPairing("count report does not match this system");
  if (!sys.in_theorem_range)
    throw StandingAssumptionViolation(
        "estimate checks need m <= s <= r-m-2 (m=" + std::to_string(sys.m) +
        ", s=" + std::to_string(sys.s) + ", r=" + std::to_string(sys.r) + ")");

  BigInt D = 0, delta = 1;
  for (auto di : sys.d) {
    D += BigInt(di) - 1;
    delta *= di;
  }
  const BigInt q = rep.q;
  const std::uint32_t rm = sys.r - sys.m;  // >= s + 2 >= 3
  BigInt q_rm = int_pow(q, rm);
  BigInt q_rm1 = int_pow(q, rm - 1);
  BigInt q_rm2 = int_pow(q, rm - 2);
  BigInt core = 14 * D * D * D * delta * delta;

  std::vector<report::BoundCheck> out;
  out.push_back(report::make_bound_check("affine", D, delta, BigRat(q_rm),
                                         BigRat(core * (q + 1) * q_rm2),
                                         BigRat(rep.affine_count)));
  out.push_back(report::make_bound_check(
      "distinct", D, delta, BigRat(q_rm),
      BigRat(core * (q + 1) * q_rm2 + BigInt(rep.ineq.pairs.size()) * delta * q_rm1),
      BigRat(rep.distinct_count)));
  if (rep.has_infinity) {
    BigRat p_rm1((q_rm - 1) / (q - 1));  // 1 + q + ... + q^(r-m-1)
    out.push_back(report::make_bound_check("infinity", D, delta, p_rm1, BigRat(core * q_rm2),
                                           BigRat(rep.infinity_count)));
  }
  return out;
}

}  // namespace symci::census
