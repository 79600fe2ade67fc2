#include "symci/ff.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

namespace symci::ff {

namespace {

constexpr std::uint64_t kTableMax = 1024;   // add/mul tables up to q^2 entries
constexpr std::uint64_t kFieldMax = 1u << 26;

// Dense polynomial helpers over F_p, digits low-to-high. Only used for
// modulus discovery; everything after runs on encoded elements.
using PVec = std::vector<std::uint32_t>;

void ptrim(PVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmul(const PVec& a, const PVec& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PVec c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<std::uint32_t>(
          (c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  ptrim(c);
  return c;
}

// Remainder of a by monic f.
PVec pmod(PVec a, const PVec& f, std::uint32_t p) {
  ptrim(a);
  std::size_t df = f.size() - 1;
  while (a.size() > df) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - 1 - df;
    if (lead) {
      for (std::size_t i = 0; i <= df; ++i) {
        std::uint64_t sub = static_cast<std::uint64_t>(lead) * f[i] % p;
        std::uint32_t& tgt = a[shift + i];
        tgt = static_cast<std::uint32_t>((tgt + p - sub) % p);
      }
    }
    a.pop_back();
    ptrim(a);
    if (a.size() <= df) break;
  }
  return a;
}

PVec ppow_mod(PVec base, std::uint64_t e, const PVec& f, std::uint32_t p) {
  PVec acc{1};
  base = pmod(std::move(base), f, p);
  while (e) {
    if (e & 1) acc = pmod(pmul(acc, base, p), f, p);
    base = pmod(pmul(base, base, p), f, p);
    e >>= 1;
  }
  return acc;
}

PVec pgcd(PVec a, PVec b, std::uint32_t p) {
  auto minv = [p](std::uint32_t x) {
    std::uint64_t r = 1, bse = x, e = p - 2;
    while (e) {
      if (e & 1) r = r * bse % p;
      bse = bse * bse % p;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  };
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    std::uint32_t il = minv(b.back());
    PVec bm = b;
    for (auto& c : bm) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * il % p);
    a = pmod(std::move(a), bm, p);
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(const PVec& f, std::uint32_t p) {
  std::size_t k = f.size() - 1;
  PVec x{0, 1};
  // x^(p^k) == x mod f, and x^(p^(k/t)) fixes no proper subextension.
  PVec u = x;
  for (std::size_t j = 0; j < k; ++j) u = ppow_mod(std::move(u), p, f, p);
  if (pmod(u, f, p) != pmod(x, f, p)) return false;

  std::vector<std::size_t> primes;
  std::size_t rem = k;
  for (std::size_t t = 2; t * t <= rem; ++t) {
    if (rem % t) continue;
    primes.push_back(t);
    while (rem % t == 0) rem /= t;
  }
  if (rem > 1) primes.push_back(rem);

  for (std::size_t t : primes) {
    PVec v = x;
    for (std::size_t j = 0; j < k / t; ++j) v = ppow_mod(std::move(v), p, f, p);
    PVec d = v;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = (d[1] + p - 1) % p;
    ptrim(d);
    if (pgcd(d, f, p).size() != 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t FieldCtx::digit(Fq a, std::uint32_t h) const {
  for (std::uint32_t i = 0; i < h; ++i) a /= p;
  return a % p;
}

Fq FieldCtx::from_digits(const std::vector<std::uint32_t>& d) const {
  Fq v = 0;
  for (std::size_t h = d.size(); h-- > 0;) v = v * p + d[h] % p;
  return v;
}

Fq FieldCtx::raw_add(Fq a, Fq b) const {
  if (k == 1) return (a + b) % p;
  Fq v = 0, mult = 1;
  for (std::uint32_t h = 0; h < k; ++h) {
    v += (a % p + b % p) % p * mult;
    a /= p;
    b /= p;
    mult *= p;
  }
  return v;
}

Fq FieldCtx::raw_sub(Fq a, Fq b) const {
  if (k == 1) return (a + p - b) % p;
  Fq v = 0, mult = 1;
  for (std::uint32_t h = 0; h < k; ++h) {
    v += (a % p + p - b % p) % p * mult;
    a /= p;
    b /= p;
    mult *= p;
  }
  return v;
}

Fq FieldCtx::raw_mul(Fq a, Fq b) const {
  if (k == 1)
    return static_cast<Fq>(static_cast<std::uint64_t>(a) * b % p);
  std::vector<std::uint64_t> prod(2 * k - 1, 0);
  std::vector<std::uint32_t> da(k), db(k);
  for (std::uint32_t h = 0; h < k; ++h, a /= p) da[h] = a % p;
  for (std::uint32_t h = 0; h < k; ++h, b /= p) db[h] = b % p;
  for (std::uint32_t i = 0; i < k; ++i) {
    if (!da[i]) continue;
    for (std::uint32_t j = 0; j < k; ++j)
      prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p;
  }
  for (std::uint32_t i = 2 * k - 2; i >= k; --i) {
    std::uint64_t c = prod[i];
    if (c) {
      const auto& row = red_[i - k];
      for (std::uint32_t j = 0; j < k; ++j)
        prod[j] = (prod[j] + c * row[j]) % p;
    }
    if (i == k) break;
  }
  Fq v = 0;
  for (std::uint32_t h = k; h-- > 0;)
    v = v * p + static_cast<Fq>(prod[h]);
  return v;
}

Fq FieldCtx::add(Fq a, Fq b) const {
  return tabled_ ? add_tab_[static_cast<std::size_t>(a) * q + b] : raw_add(a, b);
}

Fq FieldCtx::sub(Fq a, Fq b) const { return tabled_ ? add(a, neg(b)) : raw_sub(a, b); }

Fq FieldCtx::neg(Fq a) const { return raw_sub(0, a); }

Fq FieldCtx::mul(Fq a, Fq b) const {
  return tabled_ ? mul_tab_[static_cast<std::size_t>(a) * q + b] : raw_mul(a, b);
}

Fq FieldCtx::pow(Fq a, std::uint64_t e) const {
  Fq acc = 1;
  while (e) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

Fq FieldCtx::inv(Fq a) const {
  if (a == 0) throw Error("inverse of zero in F_" + std::to_string(q));
  if (tabled_) return inv_tab_[a];
  return pow(a, q - 2);
}

Fq FieldCtx::frobenius(Fq a, std::uint64_t e) const {
  e %= k;
  std::uint64_t pe = 1;
  for (std::uint64_t i = 0; i < e; ++i) pe *= p;
  return pow(a, pe);
}

const FieldCtx& build_field(std::uint32_t p, std::uint32_t k) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<FieldCtx>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, k);
  if (auto it = cache.find(key); it != cache.end()) return *it->second;

  if (!is_prime(p)) throw NonPrime("base characteristic must be prime, got " + std::to_string(p));
  if (k < 1) throw Error("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kFieldMax) throw Error("field cardinality exceeds enumeration ceiling");
  }

  auto ctx = std::unique_ptr<FieldCtx>(new FieldCtx());
  ctx->p = p;
  ctx->k = k;
  ctx->q = q;

  if (k == 1) {
    ctx->modulus = {0, 1};  // placeholder T; prime fields reduce mod p directly
  } else {
    bool found = false;
    for (std::uint64_t c = 0; c < q; ++c) {
      PVec f(k + 1, 0);
      f[k] = 1;
      std::uint64_t v = c;
      for (std::uint32_t h = 0; h < k; ++h, v /= p) f[h] = static_cast<std::uint32_t>(v % p);
      if (is_irreducible(f, p)) {
        ctx->modulus = f;
        found = true;
        break;
      }
    }
    if (!found)
      throw NoIrreducibleFound("no monic irreducible of degree " + std::to_string(k) +
                               " over F_" + std::to_string(p));
    ctx->red_.resize(k - 1);
    // T^k mod f = -(low part of f); higher rows by shift-and-reduce.
    PVec cur(k, 0);
    for (std::uint32_t j = 0; j < k; ++j) cur[j] = (p - ctx->modulus[j]) % p;
    ctx->red_[0] = cur;
    for (std::uint32_t i = 1; i + 1 < k; ++i) {
      PVec nxt(k, 0);
      std::uint32_t top = cur[k - 1];
      for (std::uint32_t j = k - 1; j >= 1; --j) nxt[j] = cur[j - 1];
      nxt[0] = 0;
      if (top)
        for (std::uint32_t j = 0; j < k; ++j)
          nxt[j] = static_cast<std::uint32_t>(
              (nxt[j] + static_cast<std::uint64_t>(top) * ctx->red_[0][j]) % p);
      ctx->red_[i] = nxt;
      cur = std::move(nxt);
    }
  }

  if (q <= kTableMax) {
    ctx->add_tab_.resize(q * q);
    ctx->mul_tab_.resize(q * q);
    for (std::uint64_t a = 0; a < q; ++a)
      for (std::uint64_t b = 0; b < q; ++b) {
        ctx->add_tab_[a * q + b] = ctx->raw_add(static_cast<Fq>(a), static_cast<Fq>(b));
        ctx->mul_tab_[a * q + b] = ctx->raw_mul(static_cast<Fq>(a), static_cast<Fq>(b));
      }
    ctx->inv_tab_.assign(q, 0);
    ctx->tabled_ = true;
    for (std::uint64_t a = 1; a < q; ++a) ctx->inv_tab_[a] = ctx->pow(static_cast<Fq>(a), q - 2);
  }

  auto [it, ok] = cache.emplace(key, std::move(ctx));
  (void)ok;
  return *it->second;
}

Fq find_normal_element(const FieldCtx& F) {
  const std::uint32_t i = F.k, p = F.p;
  for (std::uint64_t cand = 0; cand < F.q; ++cand) {
    // Rows: digit vectors of cand^(p^h), h = 0..i-1. Full rank over F_p
    // means the Frobenius orbit is a basis.
    std::vector<std::vector<std::uint32_t>> rows(i, std::vector<std::uint32_t>(i));
    Fq x = static_cast<Fq>(cand);
    for (std::uint32_t h = 0; h < i; ++h) {
      for (std::uint32_t d = 0; d < i; ++d) rows[h][d] = F.digit(x, d);
      x = F.frobenius(x, 1);
    }
    std::uint32_t rank = 0;
    for (std::uint32_t col = 0; col < i && rank < i; ++col) {
      std::uint32_t piv = rank;
      while (piv < i && rows[piv][col] == 0) ++piv;
      if (piv == i) continue;
      std::swap(rows[rank], rows[piv]);
      std::uint64_t ir = 1, bse = rows[rank][col], e = p - 2;
      while (e) {
        if (e & 1) ir = ir * bse % p;
        bse = bse * bse % p;
        e >>= 1;
      }
      for (std::uint32_t c2 = col; c2 < i; ++c2)
        rows[rank][c2] = static_cast<std::uint32_t>(rows[rank][c2] * ir % p);
      for (std::uint32_t r2 = 0; r2 < i; ++r2) {
        if (r2 == rank || rows[r2][col] == 0) continue;
        std::uint64_t f = rows[r2][col];
        for (std::uint32_t c2 = col; c2 < i; ++c2)
          rows[r2][c2] = static_cast<std::uint32_t>(
              (rows[r2][c2] + static_cast<std::uint64_t>(p - 1) * f % p * rows[rank][c2]) % p);
      }
      ++rank;
    }
    if (rank == i) return static_cast<Fq>(cand);
  }
  throw Error("no normal element found (unreachable for valid fields)");
}

}  // namespace symci::ff
