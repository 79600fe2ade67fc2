#include "symci/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace symci::upoly {

using ff::FieldCtx;
using ff::Fq;

UPoly UPoly::make(const FieldCtx& F, std::vector<Fq> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  UPoly f;
  f.F_ = &F;
  f.c_ = std::move(coeffs);
  return f;
}

UPoly UPoly::monomial(const FieldCtx& F, std::uint32_t deg, Fq c) {
  std::vector<Fq> v(deg + 1, 0);
  v[deg] = c;
  return make(F, std::move(v));
}

UPoly UPoly::from_roots(const FieldCtx& F, const std::vector<Fq>& roots) {
  std::vector<Fq> c{1};  // low-to-high throughout
  for (Fq r : roots) {
    c.push_back(0);
    for (std::size_t i = c.size() - 1; i >= 1; --i)
      c[i] = F.sub(c[i - 1], F.mul(r, c[i]));
    c[0] = F.mul(F.neg(r), c[0]);
  }
  return make(F, std::move(c));
}

Fq UPoly::eval(Fq x) const {
  Fq acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = F_->add(F_->mul(acc, x), c_[i]);
  return acc;
}

std::string UPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i > 0) {
      if (c_[i] != 1) os << "*";
      os << "T";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

static const FieldCtx& common_field(const UPoly& a, const UPoly& b) {
  if (&a.field() != &b.field()) throw Error("polynomials over different fields");
  return a.field();
}

UPoly add(const UPoly& a, const UPoly& b) {
  const FieldCtx& F = common_field(a, b);
  std::vector<Fq> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
  return UPoly::make(F, std::move(c));
}

UPoly sub(const UPoly& a, const UPoly& b) {
  const FieldCtx& F = common_field(a, b);
  std::vector<Fq> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff(i), b.coeff(i));
  return UPoly::make(F, std::move(c));
}

UPoly mul(const UPoly& a, const UPoly& b) {
  const FieldCtx& F = common_field(a, b);
  if (a.is_zero() || b.is_zero()) return UPoly::zero(F);
  std::vector<Fq> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeff(i) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(a.coeff(i), b.coeff(j)));
  }
  return UPoly::make(F, std::move(c));
}

UPoly scalar_mul(Fq s, const UPoly& a) {
  const FieldCtx& F = a.field();
  std::vector<Fq> c(a.coeffs());
  for (auto& x : c) x = F.mul(s, x);
  return UPoly::make(F, std::move(c));
}

DivRem poly_divrem(const UPoly& f, const UPoly& g) {
  const FieldCtx& F = common_field(f, g);
  if (g.is_zero()) throw DivisionByZeroPoly("division by the zero polynomial");
  if (f.degree() < g.degree()) return {UPoly::zero(F), f};
  std::vector<Fq> rem(f.coeffs());
  std::vector<Fq> quot(f.degree() - g.degree() + 1, 0);
  Fq ilead = F.inv(g.leading());
  for (int i = f.degree(); i >= g.degree(); --i) {
    Fq c = F.mul(rem[i], ilead);
    if (c == 0) continue;
    int shift = i - g.degree();
    quot[shift] = c;
    for (int j = 0; j <= g.degree(); ++j)
      rem[shift + j] = F.sub(rem[shift + j], F.mul(c, g.coeff(j)));
  }
  return {UPoly::make(F, std::move(quot)), UPoly::make(F, std::move(rem))};
}

UPoly make_monic(const UPoly& f) {
  if (f.is_zero() || f.is_monic()) return f;
  return scalar_mul(f.field().inv(f.leading()), f);
}

UPoly gcd_monic(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = poly_divrem(a, b).rem;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

UPoly derivative(const UPoly& f) {
  const FieldCtx& F = f.field();
  if (f.degree() < 1) return UPoly::zero(F);
  std::vector<Fq> c(f.degree(), 0);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
    Fq mult = F.from_base(static_cast<std::uint32_t>(i % F.p));
    c[i - 1] = F.mul(mult, f.coeff(i));
  }
  return UPoly::make(F, std::move(c));
}

UPoly pow_mod(UPoly base, std::uint64_t e, const UPoly& mod) {
  const FieldCtx& F = common_field(base, mod);
  UPoly acc = UPoly::constant(F, 1);
  base = poly_divrem(base, mod).rem;
  while (e) {
    if (e & 1) acc = poly_divrem(mul(acc, base), mod).rem;
    base = poly_divrem(mul(base, base), mod).rem;
    e >>= 1;
  }
  return acc;
}

bool is_squarefree(const UPoly& f) {
  if (f.is_zero()) return false;
  if (f.degree() == 0) return true;
  UPoly fp = derivative(f);
  if (fp.is_zero()) return false;  // p-th power
  return gcd_monic(f, fp).degree() == 0;
}

// Coefficientwise p-th root of a polynomial in T^p.
static UPoly pth_root(const UPoly& f) {
  const FieldCtx& F = f.field();
  std::vector<Fq> c(f.degree() / F.p + 1, 0);
  for (std::size_t j = 0; j < c.size(); ++j)
    c[j] = F.frobenius(f.coeff(j * F.p), F.k - 1);  // c^(q/p), inverse of x -> x^p
  return UPoly::make(F, std::move(c));
}

static void sqfree_rec(const UPoly& f, std::uint32_t mult,
                       std::vector<std::pair<UPoly, std::uint32_t>>& out) {
  const FieldCtx& F = f.field();
  if (f.degree() < 1) return;
  UPoly fp = derivative(f);
  if (fp.is_zero()) {
    sqfree_rec(pth_root(f), mult * F.p, out);
    return;
  }
  UPoly c = gcd_monic(f, fp);
  UPoly w = poly_divrem(f, c).quot;
  std::uint32_t i = 1;
  while (w.degree() > 0) {
    UPoly y = gcd_monic(w, c);
    UPoly z = poly_divrem(w, y).quot;
    if (z.degree() > 0) out.emplace_back(z, mult * i);
    w = std::move(y);
    c = poly_divrem(c, w).quot;
    ++i;
  }
  if (c.degree() > 0) sqfree_rec(pth_root(c), mult * F.p, out);
}

std::vector<std::pair<UPoly, std::uint32_t>> squarefree_decomposition(const UPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<UPoly, std::uint32_t>> out;
  sqfree_rec(make_monic(f), 1, out);
  return out;
}

FactPattern pattern_of_counts(std::vector<std::uint32_t> counts) {
  FactPattern pat;
  std::uint32_t n = 0;
  for (std::size_t i = 0; i < counts.size(); ++i)
    n += static_cast<std::uint32_t>(i + 1) * counts[i];
  pat.n = n;
  counts.resize(n, 0);  // canonical length n
  pat.counts = std::move(counts);
  return pat;
}

std::string FactPattern::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (!counts[i]) continue;
    if (!first) os << " ";
    first = false;
    os << (i + 1) << "^" << counts[i];
  }
  if (first) os << "()";
  return os.str();
}

FactPattern factorization_pattern(const UPoly& f) {
  if (!f.is_monic()) throw NotMonic("factorization pattern requires a monic polynomial");
  const FieldCtx& F = f.field();
  std::vector<std::uint32_t> counts(std::max(f.degree(), 0), 0);
  for (auto& [g0, e] : squarefree_decomposition(f)) {
    // Distinct-degree split of the squarefree part: T^(q^d) - T collects
    // exactly the degree-d factors.
    UPoly g = g0;
    UPoly u = poly_divrem(UPoly::monomial(F, 1), g).rem;
    std::uint32_t d = 0;
    while (2 * (d + 1) <= static_cast<std::uint32_t>(g.degree())) {
      ++d;
      u = pow_mod(u, F.q, g);
      UPoly h = gcd_monic(sub(u, UPoly::monomial(F, 1)), g);
      if (h.degree() > 0) {
        counts[d - 1] += e * static_cast<std::uint32_t>(h.degree()) / d;
        g = poly_divrem(g, h).quot;
        u = poly_divrem(u, g).rem;
      }
    }
    if (g.degree() > 0) counts[g.degree() - 1] += e;
  }
  return pattern_of_counts(std::move(counts));
}

}  // namespace symci::upoly
