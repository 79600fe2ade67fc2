#include "symci/factpat.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace symci::factpat {

using ff::FieldCtx;
using ff::Fq;
using upoly::FactPattern;
using upoly::UPoly;

namespace {

void validate_pattern(const FactPattern& lam) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < lam.counts.size(); ++i)
    total += (i + 1) * static_cast<std::uint64_t>(lam.counts[i]);
  if (total != lam.n || lam.counts.size() != lam.n)
    throw InvalidPattern("multiplicities sum to " + std::to_string(total) + ", want n = " +
                         std::to_string(lam.n));
}

}  // namespace

PatternConstants pattern_constants(const FactPattern& lam) {
  validate_pattern(lam);
  BigInt w = 1;
  for (std::size_t i = 0; i < lam.counts.size(); ++i) {
    w *= int_pow(BigInt(i + 1), lam.counts[i]);
    w *= factorial(lam.counts[i]);
  }
  return {w, BigRat(1) / BigRat(w)};
}

std::vector<FactPattern> enumerate_patterns(std::uint32_t n) {
  if (n < 1) throw InvalidPattern("patterns need n >= 1");
  std::vector<FactPattern> out;
  std::vector<std::uint32_t> counts(n, 0);
  // largest part first, so n^1 comes first and 1^n last
  auto rec = [&](auto&& self, std::uint32_t part, std::uint32_t rem) -> void {
    if (part == 1) {
      counts[0] = rem;
      out.push_back(upoly::pattern_of_counts(counts));
      counts[0] = 0;
      return;
    }
    for (std::uint32_t c = rem / part + 1; c-- > 0;) {
      counts[part - 1] = c;
      self(self, part - 1, rem - c * part);
    }
    counts[part - 1] = 0;
  };
  rec(rec, n, n);

  BigRat total = 0;
  for (auto& lam : out) total += pattern_constants(lam).T;
  if (total != 1)
    throw Error("pattern proportions sum to " + report::rat_str(total) + ", not 1 (internal invariant)");
  return out;
}

BigInt LinearFamily::D() const {
  BigInt v = 0;
  for (auto i : pivots) v += BigInt(i) - 1;
  return v;
}

BigInt LinearFamily::delta() const {
  BigInt v = 1;
  for (auto i : pivots) v *= i;
  return v;
}

namespace {

// constraints in the Z-coordinates: zrow[k-1] is the coefficient of
// Z_k = (-1)^k a_{n-k}, zrow[s] the constant term
std::vector<std::vector<Fq>> to_z_rows(const FieldCtx& F, const std::vector<std::vector<Fq>>& L,
                                       const std::vector<Fq>& alpha) {
  const std::size_t m = L.size(), s = L[0].size();
  std::vector<std::vector<Fq>> z(m, std::vector<Fq>(s + 1, 0));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 1; k <= s; ++k) {
      Fq c = L[j][s - k];  // column of a_{n-k}
      z[j][k - 1] = (k % 2 == 0) ? c : F.neg(c);
    }
    z[j][s] = alpha[j];
  }
  return z;
}

}  // namespace

LinearFamily make_family(const FieldCtx& F, std::uint32_t n, std::vector<std::vector<Fq>> rows,
                         std::vector<Fq> alpha) {
  if (F.k != 1)
    throw NonPrime("linear families are built over a prime field, got q = " + std::to_string(F.q));
  if (F.q <= n)
    throw HypothesisRangeViolation("families require q > n, got q = " + std::to_string(F.q) +
                                   ", n = " + std::to_string(n));
  if (rows.empty() || rows[0].empty()) throw DimensionMismatch("family needs at least one constraint");
  const std::uint32_t m = static_cast<std::uint32_t>(rows.size());
  const std::uint32_t s = static_cast<std::uint32_t>(rows[0].size());
  if (alpha.size() != m) throw DimensionMismatch("alpha length does not match the constraint count");
  if (s > n) throw DimensionMismatch("window length s = " + std::to_string(s) + " exceeds n = " +
                                     std::to_string(n));
  for (auto& row : rows) {
    if (row.size() != s) throw DimensionMismatch("ragged constraint matrix");
    for (Fq c : row)
      if (c >= F.q) throw DimensionMismatch("coefficient not reduced mod q");
  }
  for (Fq c : alpha)
    if (c >= F.q) throw DimensionMismatch("coefficient not reduced mod q");

  // eliminate from the rightmost Z-column down, so each surviving row ends
  // at its pivot and the pivots come out lower triangular
  auto z = to_z_rows(F, rows, alpha);
  std::vector<std::uint32_t> pivots_desc;
  std::uint32_t used = 0;
  for (std::uint32_t col = s; col >= 1 && used < m; --col) {
    std::uint32_t sel = used;
    while (sel < m && z[sel][col - 1] == 0) ++sel;
    if (sel == m) continue;
    std::swap(z[used], z[sel]);
    Fq inv = F.inv(z[used][col - 1]);
    for (auto& v : z[used]) v = F.mul(v, inv);
    for (std::uint32_t other = 0; other < m; ++other) {
      if (other == used || z[other][col - 1] == 0) continue;
      Fq factor = z[other][col - 1];
      for (std::uint32_t t = 0; t <= s; ++t)
        z[other][t] = F.sub(z[other][t], F.mul(factor, z[used][t]));
    }
    pivots_desc.push_back(col);
    ++used;
  }
  if (used < m) {
    for (std::uint32_t j = used; j < m; ++j)
      if (z[j][s] != 0)
        throw InconsistentSystem("constraints have no common solution");
    throw Error("constraint rows are linearly dependent");
  }

  LinearFamily fam;
  fam.F = &F;
  fam.n = n;
  fam.s = s;
  fam.m = m;
  fam.pivots.assign(pivots_desc.rbegin(), pivots_desc.rend());
  std::reverse(z.begin(), z.end());  // ascending pivot order
  fam.L.assign(m, std::vector<Fq>(s, 0));
  fam.alpha.assign(m, 0);
  for (std::uint32_t j = 0; j < m; ++j) {
    for (std::uint32_t k = 1; k <= s; ++k) {
      Fq c = z[j][k - 1];
      fam.L[j][s - k] = (k % 2 == 0) ? c : F.neg(c);
    }
    fam.alpha[j] = z[j][s];
  }
  fam.in_theorem_range = m <= s && s + m + 2 <= n;
  return fam;
}

LinearFamily load_family(const FieldCtx& F, std::uint32_t n, const std::string& text) {
  std::vector<std::vector<Fq>> rows;
  std::vector<Fq> alpha;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto reduce = [&](long long v) -> Fq {
    long long q = static_cast<long long>(F.q);
    return static_cast<Fq>(((v % q) + q) % q);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto bar = line.find('|');
    if (bar == std::string::npos || line.find('|', bar + 1) != std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": want 'c_1 ... c_s | alpha'");
    std::istringstream left(line.substr(0, bar)), right(line.substr(bar + 1));
    std::vector<Fq> row;
    long long v;
    while (left >> v) row.push_back(reduce(v));
    if (!left.eof()) throw ParseError("line " + std::to_string(lineno) + ": bad coefficient");
    long long a;
    if (!(right >> a)) throw ParseError("line " + std::to_string(lineno) + ": missing alpha");
    std::string tail;
    if (right >> tail) throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
    if (row.empty()) throw ParseError("line " + std::to_string(lineno) + ": empty constraint");
    if (!rows.empty() && row.size() != rows[0].size())
      throw ParseError("line " + std::to_string(lineno) + ": inconsistent column count");
    rows.push_back(std::move(row));
    alpha.push_back(reduce(a));
  }
  if (rows.empty()) throw ParseError("family file has no constraints");
  return make_family(F, n, std::move(rows), std::move(alpha));
}

bool family_contains(const LinearFamily& fam, const UPoly& f) {
  if (f.degree() != static_cast<int>(fam.n) || !f.is_monic()) return false;
  const FieldCtx& F = *fam.F;
  for (std::uint32_t j = 0; j < fam.m; ++j) {
    Fq acc = fam.alpha[j];
    for (std::uint32_t t = 0; t < fam.s; ++t)
      acc = F.add(acc, F.mul(fam.L[j][t], f.coeff(fam.n - fam.s + t)));
    if (acc != 0) return false;
  }
  return true;
}

namespace {

// digits: first s-m entries fill the free Z-columns (ascending), the rest
// are a_0..a_{n-s-1}; pivot Z-values are solved from the reduced rows
UPoly member_from_digits(const LinearFamily& fam, const std::vector<Fq>& digits,
                         const std::vector<std::uint32_t>& free_z) {
  const FieldCtx& F = *fam.F;
  std::vector<Fq> Z(fam.s + 1, 0);  // 1-based
  for (std::size_t t = 0; t < free_z.size(); ++t) Z[free_z[t]] = digits[t];
  for (std::uint32_t j = 0; j < fam.m; ++j) {
    Fq acc = fam.alpha[j];
    for (std::uint32_t k : free_z) {
      Fq c = fam.L[j][fam.s - k];
      acc = F.add(acc, F.mul((k % 2 == 0) ? c : F.neg(c), Z[k]));
    }
    Z[fam.pivots[j]] = F.neg(acc);
  }
  std::vector<Fq> coeffs(fam.n + 1, 0);
  coeffs[fam.n] = 1;
  for (std::uint32_t k = 1; k <= fam.s; ++k)
    coeffs[fam.n - k] = (k % 2 == 0) ? Z[k] : F.neg(Z[k]);
  for (std::uint32_t t = 0; t + fam.s < fam.n; ++t) coeffs[t] = digits[free_z.size() + t];
  return UPoly::make(F, std::move(coeffs));
}

std::vector<std::uint32_t> free_z_columns(const LinearFamily& fam) {
  std::vector<std::uint32_t> free_z;
  for (std::uint32_t k = 1; k <= fam.s; ++k)
    if (!std::binary_search(fam.pivots.begin(), fam.pivots.end(), k)) free_z.push_back(k);
  return free_z;
}

// Enumerates all digit vectors with digits[0] drawn from `firsts` (all values
// when dims == 0 is a single empty vector and firsts must contain 0).
template <typename Fn>
void scan_digits(std::uint64_t q, std::uint32_t dims, const std::vector<Fq>& firsts, Fn&& fn) {
  if (dims == 0) {
    if (!firsts.empty() && firsts[0] == 0) fn(std::vector<Fq>{});
    return;
  }
  std::vector<Fq> digits(dims, 0);
  for (Fq c : firsts) {
    std::fill(digits.begin(), digits.end(), 0);
    digits[0] = c;
    for (;;) {
      fn(digits);
      std::size_t pos = dims - 1;
      for (;;) {
        if (pos == 0) break;
        if (static_cast<std::uint64_t>(digits[pos]) + 1 < q) {
          ++digits[pos];
          break;
        }
        digits[pos--] = 0;
      }
      if (pos == 0) break;
    }
  }
}

std::vector<std::vector<Fq>> split_first_digit(std::uint64_t q, std::uint32_t workers) {
  std::vector<std::vector<Fq>> parts(workers);
  for (std::uint64_t c = 0; c < q; ++c) parts[c % workers].push_back(static_cast<Fq>(c));
  return parts;
}

void check_family_ceiling(std::uint64_t q, std::uint32_t dims, std::uint32_t n,
                          std::uint64_t work_ceiling) {
  BigInt units = int_pow(BigInt(q), dims) * n;
  if (units > BigInt(work_ceiling))
    throw WorkCeilingExceeded("enumeration needs " + units.str() + " units, ceiling " +
                              std::to_string(work_ceiling));
}

}  // namespace

Census family_census(const LinearFamily& fam, std::uint64_t work_ceiling, std::uint32_t workers) {
  const FieldCtx& F = *fam.F;
  const std::uint32_t dims = fam.n - fam.m;
  check_family_ceiling(F.q, dims, fam.n, work_ceiling);
  const auto free_z = free_z_columns(fam);

  workers = std::max<std::uint32_t>(
      1, std::min<std::uint32_t>(workers, dims == 0 ? 1 : static_cast<std::uint32_t>(F.q)));
  auto parts = split_first_digit(F.q, workers);

  std::vector<std::map<FactPattern, CensusTally>> results(workers);
  std::vector<std::uint64_t> scanned(workers, 0);
  auto run = [&](std::uint32_t w) {
    scan_digits(F.q, dims, parts[w], [&](const std::vector<Fq>& digits) {
      UPoly f = member_from_digits(fam, digits, free_z);
      auto& tally = results[w][upoly::factorization_pattern(f)];
      ++tally.total;
      if (upoly::is_squarefree(f)) ++tally.squarefree;
      ++scanned[w];
    });
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::uint32_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }

  Census census;
  census.family = fam;
  std::uint64_t members = 0;
  for (std::uint32_t w = 0; w < workers; ++w) {
    members += scanned[w];
    for (auto& [lam, tally] : results[w]) {
      auto& dst = census.tallies[lam];
      dst.total += tally.total;
      dst.squarefree += tally.squarefree;
    }
  }
  census.work = members * fam.n;
  BigInt expect = int_pow(BigInt(F.q), dims);
  if (BigInt(members) != expect)
    throw Error("census saw " + std::to_string(members) + " members, want " + expect.str() +
                " (internal invariant)");
  return census;
}

namespace {

BigRat q_power(std::uint64_t q, std::int64_t e) {
  if (e >= 0) return BigRat(int_pow(BigInt(q), static_cast<std::uint64_t>(e)));
  return BigRat(1) / BigRat(int_pow(BigInt(q), static_cast<std::uint64_t>(-e)));
}

}  // namespace

std::vector<report::BoundCheck> verify_pattern_bounds(const Census& census) {
  const LinearFamily& fam = census.family;
  const BigInt D = fam.D(), delta = fam.delta();
  const BigInt n2 = BigInt(fam.n) * fam.n;
  const BigRat q_nm = q_power(fam.F->q, static_cast<std::int64_t>(fam.n) - fam.m);
  const BigRat q_nm1 = q_power(fam.F->q, static_cast<std::int64_t>(fam.n) - fam.m - 1);
  const BigRat core = BigRat(21 * D * D * D * delta * delta + n2 * delta);

  std::vector<report::BoundCheck> out;
  for (auto& lam : enumerate_patterns(fam.n)) {
    auto [w, T] = pattern_constants(lam);
    CensusTally tally;
    if (auto it = census.tallies.find(lam); it != census.tallies.end()) tally = it->second;
    const std::string tag = "[" + lam.to_string() + "]";

    out.push_back(report::make_bound_check("sq" + tag, D, delta, T * q_nm, T * core * q_nm1,
                                           BigRat(tally.squarefree), fam.in_theorem_range));
    out.push_back(report::make_bound_check("total" + tag, D, delta, T * q_nm,
                                           (T * core + BigRat(n2)) * q_nm1, BigRat(tally.total),
                                           fam.in_theorem_range));
    // discriminant-locus cap; an upper bound only, so vacuity does not apply
    auto nsq = report::make_bound_check_raw(
        "nsq" + tag, D, delta, BigRat(0), BigRat(BigInt(fam.n) * (fam.n - 1)) * q_nm1,
        BigRat(tally.total - tally.squarefree), BigRat(tally.total - tally.squarefree),
        fam.in_theorem_range);
    nsq.vacuous = false;
    out.push_back(std::move(nsq));
  }
  return out;
}

RootEncoding build_root_encoding(const FieldCtx& F, const FactPattern& lam) {
  validate_pattern(lam);
  if (F.k != 1)
    throw NonPrime("root encodings are built over a prime field, got q = " + std::to_string(F.q));
  if (F.q <= lam.n)
    throw HypothesisRangeViolation("root encodings require q > n, got q = " +
                                   std::to_string(F.q) + ", n = " + std::to_string(lam.n));

  RootEncoding enc;
  enc.base = &F;
  enc.n = lam.n;
  enc.lambda = lam;
  std::uint32_t prefix = 0;  // sum_{k<i} k*lambda_k
  for (std::uint32_t i = 1; i <= lam.n; ++i) {
    for (std::uint32_t j = 1; j <= lam.counts[i - 1]; ++j)
      enc.blocks.push_back({i, j, prefix + (j - 1) * i});
    prefix += i * lam.counts[i - 1];

    if (lam.counts[i - 1] == 0) continue;
    RootEncoding::DegreeData deg;
    deg.ext = &ff::build_field(F.p, i);
    deg.theta = ff::find_normal_element(*deg.ext);
    std::vector<Fq> conj(i);
    for (std::uint32_t h = 0; h < i; ++h) conj[h] = deg.ext->frobenius(deg.theta, h);
    deg.A.assign(i, std::vector<Fq>(i));
    for (std::uint32_t t = 0; t < i; ++t)
      for (std::uint32_t h = 0; h < i; ++h) deg.A[t][h] = conj[(t + h) % i];

    // rank check over F_{q^i}; normality of theta makes failure unreachable
    auto M = deg.A;
    for (std::uint32_t col = 0; col < i; ++col) {
      std::uint32_t sel = col;
      while (sel < i && M[sel][col] == 0) ++sel;
      if (sel == i) throw Error("normal-basis matrix is singular (internal invariant)");
      std::swap(M[col], M[sel]);
      Fq inv = deg.ext->inv(M[col][col]);
      for (auto& v : M[col]) v = deg.ext->mul(v, inv);
      for (std::uint32_t r2 = 0; r2 < i; ++r2) {
        if (r2 == col || M[r2][col] == 0) continue;
        Fq factor = M[r2][col];
        for (std::uint32_t t = 0; t < i; ++t)
          M[r2][t] = deg.ext->sub(M[r2][t], deg.ext->mul(factor, M[col][t]));
      }
    }
    enc.degrees.emplace(i, std::move(deg));
  }
  return enc;
}

Fq block_root(const RootEncoding& enc, const std::vector<Fq>& x, std::size_t b) {
  const RootBlock& blk = enc.blocks.at(b);
  const auto& deg = enc.degrees.at(blk.i);
  Fq acc = 0;
  for (std::uint32_t h = 0; h < blk.i; ++h)
    acc = deg.ext->add(acc, deg.ext->mul(x[blk.offset + h], deg.A[0][h]));
  return acc;
}

UPoly evaluate_G(const RootEncoding& enc, const std::vector<Fq>& x) {
  if (x.size() != enc.n) throw DimensionMismatch("x must have n coordinates");
  const FieldCtx& F = *enc.base;
  for (Fq c : x)
    if (c >= F.q) throw DimensionMismatch("coordinate not reduced mod q");

  UPoly f = UPoly::constant(F, 1);
  for (std::size_t b = 0; b < enc.blocks.size(); ++b) {
    const RootBlock& blk = enc.blocks[b];
    if (blk.i == 1) {
      f = upoly::mul(f, UPoly::make(F, {F.neg(x[blk.offset]), 1}));
      continue;
    }
    const auto& deg = enc.degrees.at(blk.i);
    Fq alpha = block_root(enc, x, b);
    std::vector<Fq> conjugates(blk.i);
    for (std::uint32_t t = 0; t < blk.i; ++t) conjugates[t] = deg.ext->frobenius(alpha, t);
    UPoly g = UPoly::from_roots(*deg.ext, conjugates);
    std::vector<Fq> down(g.coeffs());
    for (Fq c : down)
      if (!deg.ext->in_prime_subfield(c))
        throw CoefficientNotRational("block (" + std::to_string(blk.i) + "," +
                                     std::to_string(blk.j) + ") coefficient outside F_q");
    f = upoly::mul(f, UPoly::make(F, std::move(down)));
  }
  return f;
}

namespace {

bool rotation_fixes(const std::vector<Fq>& v, std::uint32_t t) {
  const std::size_t i = v.size();
  for (std::size_t h = 0; h < i; ++h)
    if (v[h] != v[(h + t) % i]) return false;
  return true;
}

bool is_rotation(const std::vector<Fq>& a, const std::vector<Fq>& b) {
  for (std::uint32_t t = 0; t < a.size(); ++t) {
    bool eq = true;
    for (std::size_t h = 0; h < a.size() && eq; ++h) eq = a[(h + t) % a.size()] == b[h];
    if (eq) return true;
  }
  return false;
}

std::vector<Fq> block_slice(const RootBlock& blk, const std::vector<Fq>& x) {
  return {x.begin() + blk.offset, x.begin() + blk.offset + blk.i};
}

}  // namespace

bool is_type_lambda(const RootEncoding& enc, const std::vector<Fq>& x) {
  if (x.size() != enc.n) throw DimensionMismatch("x must have n coordinates");
  for (const auto& blk : enc.blocks) {
    auto v = block_slice(blk, x);
    for (std::uint32_t t = 1; t < blk.i; ++t)
      if (rotation_fixes(v, t)) return false;
  }
  return true;
}

bool blocks_squarefree(const RootEncoding& enc, const std::vector<Fq>& x) {
  if (!is_type_lambda(enc, x)) return false;
  for (std::size_t a = 0; a < enc.blocks.size(); ++a)
    for (std::size_t b = a + 1; b < enc.blocks.size(); ++b) {
      if (enc.blocks[a].i != enc.blocks[b].i) continue;
      if (is_rotation(block_slice(enc.blocks[a], x), block_slice(enc.blocks[b], x))) return false;
    }
  return true;
}

std::string CorrespondenceReport::summary() const {
  std::ostringstream os;
  os << "pattern " << lambda.to_string() << " over F_" << q << ": " << members_pattern
     << " family members (" << squarefree_members << " squarefree)";
  if (pass) {
    os << "; every squarefree member has " << w.str() << " preimages and the distinct-root count "
       << distinct_points << " matches w * |A^sq|";
  } else {
    os << "; FAILED:";
    if (members_pattern != census_total || squarefree_members != census_squarefree)
      os << " census mismatch (" << census_total << "/" << census_squarefree << ")";
    if (BigInt(distinct_points) != distinct_expected)
      os << " distinct-root count " << distinct_points << " != " << distinct_expected.str();
    for (auto& v : violations) os << " [" << v << "]";
  }
  return os.str();
}

CorrespondenceReport correspondence_check(const LinearFamily& fam, const FactPattern& lam,
                                          std::uint64_t work_ceiling, std::uint32_t workers) {
  if (lam.n != fam.n)
    throw InvalidPattern("pattern degree " + std::to_string(lam.n) + " does not match family n = " +
                         std::to_string(fam.n));
  const FieldCtx& F = *fam.F;
  // the q^n scan plus the census behind it
  BigInt units = int_pow(BigInt(F.q), fam.n) * fam.n + int_pow(BigInt(F.q), fam.n - fam.m) * fam.n;
  if (units > BigInt(work_ceiling))
    throw WorkCeilingExceeded("correspondence scan needs " + units.str() + " units, ceiling " +
                              std::to_string(work_ceiling));

  RootEncoding enc = build_root_encoding(F, lam);
  Census census = family_census(fam, work_ceiling, workers);

  struct Shard {
    std::map<std::vector<Fq>, std::uint64_t> fiber;  // member coeffs -> #preimages
    std::uint64_t distinct = 0;
    std::uint64_t scanned = 0;
  };
  workers = std::max<std::uint32_t>(1, std::min<std::uint32_t>(workers, static_cast<std::uint32_t>(F.q)));
  auto parts = split_first_digit(F.q, workers);
  std::vector<Shard> shards(workers);
  auto run = [&](std::uint32_t w) {
    scan_digits(F.q, fam.n, parts[w], [&](const std::vector<Fq>& x) {
      ++shards[w].scanned;
      UPoly f = evaluate_G(enc, x);
      if (!family_contains(fam, f)) return;
      ++shards[w].fiber[f.coeffs()];
      if (blocks_squarefree(enc, x)) ++shards[w].distinct;
    });
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::uint32_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }

  CorrespondenceReport rep;
  rep.q = F.q;
  rep.n = fam.n;
  rep.lambda = lam;
  rep.w = pattern_constants(lam).w;
  if (auto it = census.tallies.find(lam); it != census.tallies.end()) {
    rep.census_total = it->second.total;
    rep.census_squarefree = it->second.squarefree;
  }

  std::map<std::vector<Fq>, std::uint64_t> fiber;
  for (auto& shard : shards) {
    rep.points_scanned += shard.scanned;
    rep.distinct_points += shard.distinct;
    for (auto& [coeffs, cnt] : shard.fiber) fiber[coeffs] += cnt;
  }
  rep.work = rep.points_scanned * fam.n + census.work;

  bool preimages_ok = true;
  for (auto& [coeffs, cnt] : fiber) {
    UPoly f = UPoly::make(F, std::vector<Fq>(coeffs));
    if (!(upoly::factorization_pattern(f) == lam)) continue;
    ++rep.members_pattern;
    if (!upoly::is_squarefree(f)) continue;
    ++rep.squarefree_members;
    if (BigInt(cnt) != rep.w) {
      preimages_ok = false;
      if (rep.violations.size() < 8)
        rep.violations.push_back(f.to_string() + " has " + std::to_string(cnt) + " preimages");
    }
  }
  rep.distinct_expected = rep.w * rep.squarefree_members;
  rep.pass = preimages_ok && rep.members_pattern == rep.census_total &&
             rep.squarefree_members == rep.census_squarefree &&
             BigInt(rep.distinct_points) == rep.distinct_expected;
  return rep;
}

}  // namespace symci::factpat
