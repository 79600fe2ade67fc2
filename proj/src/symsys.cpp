#include "symci/symsys.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "symci/bigs.hpp"

namespace symci::symsys {

using ff::FieldCtx;
using ff::Fq;

bool GrevlexLess::operator()(const Exp& a, const Exp& b) const {
  std::uint64_t da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

MPoly MPoly::constant(const FieldCtx& F, std::uint32_t s, Fq c) {
  MPoly p(F, s);
  p.add_term(Exp(s, 0), c);
  return p;
}

MPoly MPoly::variable(const FieldCtx& F, std::uint32_t s, std::uint32_t j) {
  if (j < 1 || j > s) throw Error("variable index out of range");
  MPoly p(F, s);
  Exp e(s, 0);
  e[j - 1] = 1;
  p.add_term(e, 1);
  return p;
}

void MPoly::add_term(const Exp& e, Fq c) {
  if (e.size() != s_) throw DimensionMismatch("exponent vector length != variable count");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second = F_->add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Fq MPoly::coeff_at(const Exp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

std::uint64_t MPoly::total_degree() const {
  std::uint64_t d = 0;
  for (auto& [e, c] : terms_) {
    std::uint64_t t = 0;
    for (auto x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

static std::uint64_t term_weight(const Exp& e) {
  std::uint64_t w = 0;
  for (std::size_t j = 0; j < e.size(); ++j) w += static_cast<std::uint64_t>(j + 1) * e[j];
  return w;
}

std::uint64_t MPoly::weight() const {
  std::uint64_t w = 0;
  for (auto& [e, c] : terms_) w = std::max(w, term_weight(e));
  return w;
}

bool MPoly::is_weight_homogeneous() const {
  if (terms_.empty()) return true;
  std::uint64_t w = term_weight(terms_.begin()->first);
  for (auto& [e, c] : terms_)
    if (term_weight(e) != w) return false;
  return true;
}

MPoly MPoly::highest_weight_component() const {
  if (terms_.empty())
    throw ZeroPolynomial("highest weight component of the zero polynomial");
  std::uint64_t w = weight();
  MPoly out(*F_, s_);
  for (auto& [e, c] : terms_)
    if (term_weight(e) == w) out.add_term(e, c);
  return out;
}

MPoly MPoly::derivative(std::uint32_t j) const {
  if (j < 1 || j > s_) throw Error("variable index out of range");
  MPoly out(*F_, s_);
  for (auto& [e, c] : terms_) {
    if (e[j - 1] == 0) continue;
    Fq mult = F_->from_base(e[j - 1] % F_->p);  // exponent reduces mod p
    if (mult == 0) continue;
    Exp d = e;
    --d[j - 1];
    out.add_term(d, F_->mul(c, mult));
  }
  return out;
}

static void check_eval_field(const FieldCtx* F, const FieldCtx& E) {
  if (F == &E) return;
  if (F->k == 1 && E.p == F->p) return;  // prime subfield embedding
  throw Error("evaluation field is not an extension of the coefficient field");
}

Fq MPoly::eval(const std::vector<Fq>& y, const FieldCtx& E) const {
  if (y.size() != s_) throw DimensionMismatch("point length != variable count");
  check_eval_field(F_, E);
  Fq acc = 0;
  for (auto& [e, c] : terms_) {
    Fq t = c;  // scalar embeds as the constant digit
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j]) t = E.mul(t, E.pow(y[j], e[j]));
    acc = E.add(acc, t);
  }
  return acc;
}

MPoly add(const MPoly& a, const MPoly& b) {
  MPoly out = a;
  for (auto& [e, c] : b.terms()) out.add_term(e, c);
  return out;
}

MPoly sub(const MPoly& a, const MPoly& b) {
  MPoly out = a;
  const FieldCtx& F = a.field();
  for (auto& [e, c] : b.terms()) out.add_term(e, F.neg(c));
  return out;
}

MPoly mul(const MPoly& a, const MPoly& b) {
  MPoly out(a.field(), a.nvars());
  const FieldCtx& F = a.field();
  for (auto& [ea, ca] : a.terms())
    for (auto& [eb, cb] : b.terms()) {
      Exp e = ea;
      for (std::size_t j = 0; j < e.size(); ++j) e[j] += eb[j];
      out.add_term(e, F.mul(ca, cb));
    }
  return out;
}

MPoly scalar_mul(Fq c, const MPoly& a) {
  MPoly out(a.field(), a.nvars());
  const FieldCtx& F = a.field();
  for (auto& [e, t] : a.terms()) out.add_term(e, F.mul(c, t));
  return out;
}

std::string MPoly::emit() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    const auto& [e, c] = *it;
    bool any_var = std::any_of(e.begin(), e.end(), [](std::uint32_t x) { return x > 0; });
    if (!any_var) {
      os << c;
      continue;
    }
    os << c;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (!e[j]) continue;
      os << "*Y" << (j + 1);
      if (e[j] > 1) os << "^" << e[j];
    }
  }
  return os.str();
}

MPoly MPoly::parse(const FieldCtx& F, std::uint32_t s, const std::string& text) {
  MPoly out(F, s);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_uint = [&]() -> std::uint64_t {
    std::size_t start = pos;
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > (1ull << 62)) throw ParseError("numeric literal too large");
      ++pos;
    }
    if (pos == start) throw ParseError("expected a number at offset " + std::to_string(start));
    return v;
  };

  skip_ws();
  if (pos >= text.size()) throw ParseError("empty polynomial text");
  bool done = false;
  while (!done) {
    Fq coeff = 1;
    bool saw_coeff = false;
    Exp e(s, 0);
    for (;;) {
      skip_ws();
      if (pos < text.size() && (text[pos] == 'Y' || text[pos] == 'y')) {
        ++pos;
        std::uint64_t j = parse_uint();
        if (j < 1 || j > s) throw ParseError("variable Y" + std::to_string(j) + " out of range");
        std::uint64_t ex = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip_ws();
          ex = parse_uint();
        }
        if (ex > (1u << 20)) throw ParseError("exponent too large");
        e[j - 1] += static_cast<std::uint32_t>(ex);
      } else if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::uint64_t v = parse_uint();
        coeff = F.mul(coeff, static_cast<Fq>(v % F.q));
        saw_coeff = true;
      } else {
        throw ParseError("expected a coefficient or variable at offset " + std::to_string(pos));
      }
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    bool any_var = std::any_of(e.begin(), e.end(), [](std::uint32_t x) { return x > 0; });
    if (!saw_coeff && !any_var) throw ParseError("empty term");
    out.add_term(e, coeff);
    skip_ws();
    if (pos >= text.size()) {
      done = true;
    } else if (text[pos] == '+') {
      ++pos;
    } else {
      throw ParseError("unexpected character at offset " + std::to_string(pos));
    }
  }
  return out;
}

std::vector<Fq> elem_sym_eval(const FieldCtx& E, const std::vector<Fq>& x, std::uint32_t s) {
  std::vector<Fq> e(s + 1, 0);
  e[0] = 1;
  std::uint32_t seen = 0;
  for (Fq xi : x) {
    ++seen;
    std::uint32_t top = std::min(s, seen);
    for (std::uint32_t k = top; k >= 1; --k)
      e[k] = E.add(e[k], E.mul(e[k - 1], xi));
  }
  return {e.begin() + 1, e.end()};
}

SymSystem make_system(const FieldCtx& F, std::vector<MPoly> polys, std::uint32_t r,
                      bool enforce_range) {
  if (polys.empty()) throw Error("system needs at least one polynomial");
  if (F.k != 1)
    throw NonPrime("systems are built over a prime base field, got q = " + std::to_string(F.q));
  SymSystem sys;
  sys.F = &F;
  sys.m = static_cast<std::uint32_t>(polys.size());
  sys.s = polys.front().nvars();
  sys.r = r;
  for (auto& P : polys) {
    if (&P.field() != &F) throw Error("system polynomials over mixed fields");
    if (P.nvars() != sys.s) throw DimensionMismatch("system polynomials with mixed variable counts");
    if (P.is_zero()) throw ZeroPolynomial("zero polynomial in system");
    std::uint64_t w = P.weight();
    if (w == 0) throw Error("constant polynomial in system");
    sys.d.push_back(static_cast<std::uint32_t>(w));
  }
  if (sys.s < 1 || sys.m > sys.s || sys.s > r)
    throw StandingAssumptionViolation(
        "system shape requires 1 <= m <= s <= r (m=" + std::to_string(sys.m) +
        ", s=" + std::to_string(sys.s) + ", r=" + std::to_string(r) + ")");
  sys.in_theorem_range =
      sys.m <= sys.s && sys.s + sys.m + 2 <= sys.r;
  if (enforce_range && !sys.in_theorem_range)
    throw StandingAssumptionViolation(
        "standing assumption m <= s <= r-m-2 violated (m=" + std::to_string(sys.m) +
        ", s=" + std::to_string(sys.s) + ", r=" + std::to_string(sys.r) + ")");
  sys.S = std::move(polys);
  return sys;
}

std::vector<Fq> system_eval(const SymSystem& sys, const std::vector<Fq>& x, const FieldCtx& E) {
  if (x.size() != sys.r)
    throw DimensionMismatch("point length " + std::to_string(x.size()) +
                            " != r = " + std::to_string(sys.r));
  auto pi = elem_sym_eval(E, x, sys.s);
  std::vector<Fq> out(sys.m);
  for (std::uint32_t i = 0; i < sys.m; ++i) out[i] = sys.S[i].eval(pi, E);
  return out;
}

std::uint32_t jacobian_rank_at(const std::vector<MPoly>& polys, const std::vector<Fq>& y,
                               const FieldCtx& E) {
  const std::uint32_t m = static_cast<std::uint32_t>(polys.size());
  const std::uint32_t s = polys.empty() ? 0 : polys.front().nvars();
  std::vector<std::vector<Fq>> J(m, std::vector<Fq>(s));
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = 1; j <= s; ++j)
      J[i][j - 1] = polys[i].derivative(j).eval(y, E);
  // Gaussian elimination over E
  std::uint32_t rank = 0;
  for (std::uint32_t col = 0; col < s && rank < m; ++col) {
    std::uint32_t piv = rank;
    while (piv < m && J[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(J[rank], J[piv]);
    Fq inv = E.inv(J[rank][col]);
    for (std::uint32_t c = col; c < s; ++c) J[rank][c] = E.mul(J[rank][c], inv);
    for (std::uint32_t r2 = 0; r2 < m; ++r2) {
      if (r2 == rank || J[r2][col] == 0) continue;
      Fq f = J[r2][col];
      for (std::uint32_t c = col; c < s; ++c)
        J[r2][c] = E.sub(J[r2][c], E.mul(f, J[rank][c]));
    }
    ++rank;
  }
  return rank;
}

namespace {

Fq det_in_place(const FieldCtx& E, std::vector<std::vector<Fq>>& M) {
  const std::size_t n = M.size();
  Fq det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && M[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(M[piv], M[col]);
      det = E.neg(det);
    }
    det = E.mul(det, M[col][col]);
    Fq inv = E.inv(M[col][col]);
    for (std::size_t r2 = col + 1; r2 < n; ++r2) {
      if (M[r2][col] == 0) continue;
      Fq f = E.mul(M[r2][col], inv);
      for (std::size_t c = col; c < n; ++c)
        M[r2][c] = E.sub(M[r2][c], E.mul(f, M[col][c]));
    }
  }
  return det;
}

}  // namespace

bool vandermonde_factorization_check(const FieldCtx& E, const std::vector<Fq>& x) {
  const std::uint32_t r = static_cast<std::uint32_t>(x.size());
  if (r == 0) throw Error("empty point");

  // Pi_0..Pi_r of the full tuple.
  std::vector<Fq> pi_full(r + 1, 0);
  pi_full[0] = 1;
  {
    auto e = elem_sym_eval(E, x, r);
    for (std::uint32_t i = 0; i < r; ++i) pi_full[i + 1] = e[i];
  }

  // J via omit-one evaluation.
  std::vector<std::vector<Fq>> J(r, std::vector<Fq>(r));
  for (std::uint32_t j = 0; j < r; ++j) {
    std::vector<Fq> rest;
    rest.reserve(r - 1);
    for (std::uint32_t t = 0; t < r; ++t)
      if (t != j) rest.push_back(x[t]);
    auto e = elem_sym_eval(E, rest, r);  // Pi_1..Pi_r of r-1 values (top is 0)
    J[0][j] = 1;                         // Pi_0 of the rest
    for (std::uint32_t i = 1; i < r; ++i) J[i][j] = e[i - 1];
  }

  // B[i][k] = (-1)^k Pi_{i-k} for k <= i (0-based), A[k][j] = x_j^k.
  std::vector<std::vector<Fq>> B(r, std::vector<Fq>(r, 0)), A(r, std::vector<Fq>(r));
  for (std::uint32_t i = 0; i < r; ++i)
    for (std::uint32_t k = 0; k <= i; ++k) {
      Fq v = pi_full[i - k];
      B[i][k] = (k % 2) ? E.neg(v) : v;
    }
  for (std::uint32_t k = 0; k < r; ++k)
    for (std::uint32_t j = 0; j < r; ++j) A[k][j] = E.pow(x[j], k);

  for (std::uint32_t i = 0; i < r; ++i)
    for (std::uint32_t j = 0; j < r; ++j) {
      Fq acc = 0;
      for (std::uint32_t k = 0; k < r; ++k) acc = E.add(acc, E.mul(B[i][k], A[k][j]));
      if (acc != J[i][j]) return false;
    }

  std::vector<std::vector<Fq>> M = J;
  Fq det = det_in_place(E, M);
  Fq expect = 1;
  for (std::uint32_t i = 0; i < r; ++i)
    for (std::uint32_t j = i + 1; j < r; ++j) expect = E.mul(expect, E.sub(x[j], x[i]));
  if ((static_cast<std::uint64_t>(r) * (r - 1) / 2) % 2) expect = E.neg(expect);
  return det == expect;
}

bool leading_component_identity_check(const SymSystem& sys, const std::vector<Fq>& x) {
  const FieldCtx& F = *sys.F;
  if (x.size() != sys.r) throw DimensionMismatch("point length != r");
  auto pi_x = elem_sym_eval(F, x, sys.s);
  for (std::uint32_t i = 0; i < sys.m; ++i) {
    std::uint32_t d = sys.d[i];
    if (F.q < static_cast<std::uint64_t>(d) + 1)
      throw InsufficientScalars("need " + std::to_string(d + 1) + " distinct scalars, field has " +
                                std::to_string(F.q));
    // Leading coefficient of t -> R_i(t*x) from d+1 samples: sum of
    // v_t / prod_{u != t} (t - u).
    Fq top = 0;
    for (std::uint32_t t = 0; t <= d; ++t) {
      std::vector<Fq> tx(x.size());
      for (std::size_t j = 0; j < x.size(); ++j) tx[j] = F.mul(static_cast<Fq>(t), x[j]);
      Fq v = sys.S[i].eval(elem_sym_eval(F, tx, sys.s), F);
      Fq denom = 1;
      for (std::uint32_t u = 0; u <= d; ++u)
        if (u != t) denom = F.mul(denom, F.sub(static_cast<Fq>(t), static_cast<Fq>(u)));
      top = F.add(top, F.mul(v, F.inv(denom)));
    }
    Fq wt_val = sys.S[i].highest_weight_component().eval(pi_x, F);
    if (top != wt_val) return false;
  }
  return true;
}

std::string HypothesisReport::summary() const {
  std::ostringstream os;
  std::uint64_t z = 0, zw = 0, bad = 0;
  for (auto& e : system_samples) {
    z += e.zeros;
    bad += e.failure_count;
  }
  for (auto& e : leading_samples) {
    zw += e.zeros;
    bad += e.failure_count;
  }
  os << (pass ? "PASS" : "FAIL") << ": full Jacobian rank sampled up to degree " << max_ext
     << " over F_" << q << " (" << z << " zeros of S, " << zw << " zeros of the top-weight part";
  if (!pass) os << ", " << bad << " rank failures";
  os << ")";
  return os.str();
}

HypothesisReport hypothesis_check(const SymSystem& sys, std::uint32_t max_ext,
                                  std::uint64_t work_ceiling) {
  const FieldCtx& F = *sys.F;
  if (max_ext < 1) throw Error("max_ext must be >= 1");

  BigInt work = 0;
  for (std::uint32_t j = 1; j <= max_ext; ++j)
    work += 2 * int_pow(BigInt(F.q), static_cast<std::uint64_t>(j) * sys.s);
  if (work > BigInt(work_ceiling))
    throw WorkCeilingExceeded("hypothesis sampling needs " + work.str() + " point evaluations, ceiling " +
                              std::to_string(work_ceiling));

  std::vector<MPoly> wt;
  wt.reserve(sys.m);
  for (auto& P : sys.S) wt.push_back(P.highest_weight_component());

  HypothesisReport rep;
  rep.q = F.q;
  rep.s = sys.s;
  rep.m = sys.m;
  rep.max_ext = max_ext;
  rep.pass = true;

  auto scan = [&](const std::vector<MPoly>& polys, std::uint32_t degree,
                  const FieldCtx& E) -> ExtensionSample {
    ExtensionSample out;
    out.degree = degree;
    std::vector<Fq> y(sys.s, 0);
    for (;;) {
      bool zero = true;
      for (auto& P : polys)
        if (P.eval(y, E) != 0) {
          zero = false;
          break;
        }
      ++rep.work;
      if (zero) {
        ++out.zeros;
        if (jacobian_rank_at(polys, y, E) < sys.m) {
          ++out.failure_count;
          if (out.failures.size() < 8) out.failures.push_back(y);
        }
      }
      std::size_t pos = 0;
      while (pos < y.size()) {
        if (++y[pos] < E.q) break;
        y[pos++] = 0;
      }
      if (pos == y.size()) break;
    }
    return out;
  };

  for (std::uint32_t j = 1; j <= max_ext; ++j) {
    const FieldCtx& E = ff::build_field(F.p, j * F.k);
    ExtensionSample a = scan(sys.S, j, E);
    ExtensionSample b = scan(wt, j, E);
    if (a.failure_count || b.failure_count) rep.pass = false;
    rep.system_samples.push_back(std::move(a));
    rep.leading_samples.push_back(std::move(b));
  }
  return rep;
}

}  // namespace symci::symsys
