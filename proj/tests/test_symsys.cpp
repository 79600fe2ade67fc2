#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "symci/errors.hpp"
#include "symci/ff.hpp"
#include "symci/symsys.hpp"

using namespace symci;
using ff::build_field;
using ff::FieldCtx;
using ff::Fq;
using symsys::Exp;
using symsys::MPoly;

TEST_CASE("grevlex order") {
  symsys::GrevlexLess less;
  // lower total degree first
  CHECK(less({1, 0}, {1, 1}));
  CHECK_FALSE(less({1, 1}, {1, 0}));
  // same degree: larger exponent in the rightmost differing slot is smaller
  CHECK(less({0, 1}, {1, 0}));
  CHECK(less({1, 0, 1}, {0, 2, 0}));
  CHECK_FALSE(less({2, 0}, {2, 0}));
}

TEST_CASE("term bookkeeping cancels cleanly") {
  const FieldCtx& F = build_field(5, 1);
  MPoly f(F, 2);
  f.add_term({1, 0}, 2);
  f.add_term({1, 0}, 3);  // 2 + 3 = 0 mod 5
  CHECK(f.is_zero());
  f.add_term({0, 1}, 4);
  CHECK(f.coeff_at({0, 1}) == 4);
  CHECK(f.coeff_at({1, 0}) == 0);
  CHECK(f.terms().size() == 1);
}

TEST_CASE("emit and parse round trip through the documented grammar") {
  const FieldCtx& F = build_field(7, 1);
  MPoly f(F, 3);
  f.add_term({2, 0, 1}, 2);
  f.add_term({0, 0, 0}, 1);
  f.add_term({0, 1, 0}, 1);
  std::string text = f.emit();
  CHECK(MPoly::parse(F, 3, text) == f);
  CHECK(MPoly::parse(F, 3, "  2 * Y1^2 * Y3+Y2 +1 ") == f);
  CHECK(MPoly::parse(F, 3, "0").is_zero());
  CHECK(MPoly::constant(F, 3, 0).emit() == "0");
  CHECK_THROWS_AS(MPoly::parse(F, 2, "Y3"), symci::ParseError);
  CHECK_THROWS_AS(MPoly::parse(F, 2, "2**Y1"), symci::ParseError);
  // emit is stable: parse(emit(f)) emits identically
  CHECK(MPoly::parse(F, 3, text).emit() == text);
}

TEST_CASE("weight grading") {
  const FieldCtx& F = build_field(5, 1);
  // Y1^2*Y3 has weight 1+1+3 = 5, total degree 3
  MPoly f(F, 3);
  f.add_term({2, 0, 1}, 1);
  CHECK(f.weight() == 5);
  CHECK(f.total_degree() == 3);
  CHECK(f.is_weight_homogeneous());
  f.add_term({0, 1, 1}, 2);  // weight 5 as well
  CHECK(f.is_weight_homogeneous());
  f.add_term({1, 0, 0}, 1);  // weight 1 breaks homogeneity
  CHECK_FALSE(f.is_weight_homogeneous());
  CHECK(f.weight() == 5);
  MPoly top = f.highest_weight_component();
  CHECK(top.is_weight_homogeneous());
  CHECK(top.weight() == 5);
  CHECK(top.terms().size() == 2);
  CHECK_THROWS_AS(MPoly(F, 3).highest_weight_component(), symci::ZeroPolynomial);
}

TEST_CASE("derivative respects characteristic") {
  const FieldCtx& F = build_field(3, 1);
  MPoly f(F, 2);
  f.add_term({3, 0}, 1);  // Y1^3, exponent killed by char 3
  f.add_term({1, 2}, 2);  // 2*Y1*Y2^2
  MPoly d1 = f.derivative(1);
  CHECK(d1.coeff_at({2, 0}) == 0);
  CHECK(d1.coeff_at({0, 2}) == 2);
  MPoly d2 = f.derivative(2);
  CHECK(d2.coeff_at({1, 1}) == 1);  // 2*2 = 4 = 1 mod 3
}

TEST_CASE("arithmetic identities on random polynomials") {
  std::mt19937 rng(42);
  const FieldCtx& F = build_field(5, 1);
  auto rand_poly = [&](std::uint32_t s) {
    MPoly f(F, s);
    std::uniform_int_distribution<std::uint32_t> ed(0, 2);
    std::uniform_int_distribution<Fq> cd(0, 4);
    for (int t = 0; t < 4; ++t) {
      Exp e(s);
      for (auto& x : e) x = ed(rng);
      f.add_term(e, cd(rng));
    }
    return f;
  };
  for (int t = 0; t < 100; ++t) {
    MPoly a = rand_poly(2), b = rand_poly(2), c = rand_poly(2);
    CHECK(symsys::mul(a, b) == symsys::mul(b, a));
    CHECK(symsys::mul(a, symsys::add(b, c)) ==
          symsys::add(symsys::mul(a, b), symsys::mul(a, c)));
    CHECK(symsys::sub(symsys::add(a, b), b) == a);
    CHECK(symsys::scalar_mul(3, a) == symsys::add(a, symsys::add(a, a)));
    std::uniform_int_distribution<Fq> cd(0, 4);
    std::vector<Fq> y{cd(rng), cd(rng)};
    CHECK(symsys::mul(a, b).eval(y, F) == F.mul(a.eval(y, F), b.eval(y, F)));
  }
}

TEST_CASE("evaluation embeds prime-subfield scalars into extensions") {
  const FieldCtx& F = build_field(3, 1);
  const FieldCtx& E = build_field(3, 2);
  MPoly f(F, 1);
  f.add_term({1}, 2);
  f.add_term({0}, 1);  // 2*Y1 + 1
  for (Fq y = 0; y < E.q; ++y)
    CHECK(f.eval({y}, E) == E.add(E.mul(2, y), 1));
}

TEST_CASE("elementary symmetric evaluation matches subset sums") {
  std::mt19937 rng(5);
  for (const FieldCtx* Ep : {&build_field(7, 1), &build_field(2, 3)}) {
    const FieldCtx& E = *Ep;
    std::uniform_int_distribution<Fq> cd(0, static_cast<Fq>(E.q - 1));
    for (int t = 0; t < 100; ++t) {
      std::uniform_int_distribution<std::uint32_t> rd(1, 6);
      std::uint32_t r = rd(rng), s = 1 + rd(rng) % r;
      std::vector<Fq> x(r);
      for (auto& v : x) v = cd(rng);
      CHECK(symsys::elem_sym_eval(E, x, s) == oracle::esym_subsets(E, x, s));
    }
  }
}

static MPoly pi_var(const FieldCtx& F, std::uint32_t s, std::uint32_t j) {
  return MPoly::variable(F, s, j);
}

TEST_CASE("system construction contracts") {
  const FieldCtx& F = build_field(5, 1);
  const FieldCtx& E = build_field(5, 2);
  std::vector<MPoly> one{pi_var(F, 1, 1)};

  auto sys = symsys::make_system(F, one, 4);  // m=1, s=1, r=4: 1 <= 1 <= 1
  CHECK(sys.in_theorem_range);
  CHECK(sys.m == 1);
  CHECK(sys.s == 1);
  CHECK(sys.d == std::vector<std::uint32_t>{1});

  CHECK_THROWS_AS(symsys::make_system(F, one, 3), symci::StandingAssumptionViolation);
  auto relaxed = symsys::make_system(F, one, 3, false);
  CHECK_FALSE(relaxed.in_theorem_range);

  CHECK_THROWS_AS(symsys::make_system(E, one, 4, false), symci::NonPrime);
  CHECK_THROWS_AS(symsys::make_system(F, {MPoly::constant(F, 1, 2)}, 4, false),
                  symci::Error);
  std::vector<MPoly> mixed{pi_var(F, 1, 1), pi_var(F, 2, 2)};
  CHECK_THROWS_AS(symsys::make_system(F, mixed, 5, false), symci::DimensionMismatch);
}

TEST_CASE("system evaluation composes with the symmetric functions") {
  const FieldCtx& F = build_field(5, 1);
  MPoly S(F, 2);
  S.add_term({2, 0}, 1);
  S.add_term({0, 1}, 3);  // Y1^2 + 3*Y2, weight 2
  auto sys = symsys::make_system(F, {S}, 5);
  CHECK(sys.d == std::vector<std::uint32_t>{2});
  std::mt19937 rng(3);
  std::uniform_int_distribution<Fq> cd(0, 4);
  for (int t = 0; t < 50; ++t) {
    std::vector<Fq> x(5);
    for (auto& v : x) v = cd(rng);
    auto pi = oracle::esym_subsets(F, x, 2);
    Fq expect = F.add(F.mul(pi[0], pi[0]), F.mul(3, pi[1]));
    auto got = symsys::system_eval(sys, x, F);
    REQUIRE(got.size() == 1);
    CHECK(got[0] == expect);
  }
  CHECK_THROWS_AS(symsys::system_eval(sys, {1, 2}, F), symci::DimensionMismatch);
}

TEST_CASE("jacobian rank") {
  const FieldCtx& F = build_field(5, 1);
  // independent pair: rows (1,0) and (0,1) after differentiation
  std::vector<MPoly> polys{pi_var(F, 2, 1), pi_var(F, 2, 2)};
  CHECK(symsys::jacobian_rank_at(polys, {0, 0}, F) == 2);
  // dependent pair: S2 = 2*S1
  std::vector<MPoly> dep{pi_var(F, 2, 1), symsys::scalar_mul(2, pi_var(F, 2, 1))};
  CHECK(symsys::jacobian_rank_at(dep, {3, 1}, F) == 1);
  // rank drop at a special point: d(Y1^2)/dY1 = 2*Y1 vanishes at Y1 = 0
  MPoly sq(F, 1);
  sq.add_term({2}, 1);
  CHECK(symsys::jacobian_rank_at({sq}, {0}, F) == 0);
  CHECK(symsys::jacobian_rank_at({sq}, {2}, F) == 1);
}

TEST_CASE("vandermonde factorization check accepts random and degenerate points") {
  std::mt19937 rng(19);
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const FieldCtx& E = build_field(q, 1);
    std::uniform_int_distribution<Fq> cd(0, static_cast<Fq>(q - 1));
    for (int t = 0; t < 100; ++t) {
      std::uniform_int_distribution<std::uint32_t> rd(1, 6);
      std::vector<Fq> x(rd(rng));
      for (auto& v : x) v = cd(rng);
      if (t % 4 == 0 && x.size() > 1) x[0] = x[1];  // force a repeat
      CHECK(symsys::vandermonde_factorization_check(E, x));
    }
  }
  // extension field points as well
  const FieldCtx& E9 = build_field(3, 2);
  std::uniform_int_distribution<Fq> cd(0, 8);
  for (int t = 0; t < 50; ++t) {
    std::vector<Fq> x{cd(rng), cd(rng), cd(rng)};
    CHECK(symsys::vandermonde_factorization_check(E9, x));
  }
}

TEST_CASE("leading component identity") {
  const FieldCtx& F = build_field(7, 1);
  MPoly S(F, 2);
  S.add_term({0, 1}, 1);
  S.add_term({1, 0}, 4);
  S.add_term({0, 0}, 2);  // Y2 + 4*Y1 + 2, top part Y2 of weight 2
  auto sys = symsys::make_system(F, {S}, 6);
  std::mt19937 rng(23);
  std::uniform_int_distribution<Fq> cd(0, 6);
  for (int t = 0; t < 30; ++t) {
    std::vector<Fq> x(6);
    for (auto& v : x) v = cd(rng);
    CHECK(symsys::leading_component_identity_check(sys, x));
  }
  // needs d+1 distinct interpolation scalars in the base field
  const FieldCtx& F2 = build_field(2, 1);
  MPoly T(F2, 2);
  T.add_term({0, 1}, 1);
  auto tiny = symsys::make_system(F2, {T}, 6);
  CHECK_THROWS_AS(symsys::leading_component_identity_check(tiny, {0, 0, 0, 0, 0, 0}),
                  symci::InsufficientScalars);
}

TEST_CASE("hypothesis check passes on a smooth system") {
  const FieldCtx& F = build_field(5, 1);
  auto sys = symsys::make_system(F, {pi_var(F, 1, 1)}, 4);
  auto rep = symsys::hypothesis_check(sys, 2, 1'000'000'000ull);
  CHECK(rep.pass);
  CHECK(rep.q == 5);
  CHECK(rep.max_ext == 2);
  REQUIRE(rep.system_samples.size() == 2);
  CHECK(rep.system_samples[0].degree == 1);
  CHECK(rep.system_samples[0].zeros == 1);  // Y1 = 0 has one solution in Y-space
  CHECK(rep.system_samples[0].failure_count == 0);
  CHECK(rep.summary().find("degree 2") != std::string::npos);
}

TEST_CASE("hypothesis check reports singular zeros with witnesses") {
  const FieldCtx& F = build_field(5, 1);
  MPoly sq(F, 1);
  sq.add_term({2}, 1);  // Y1^2: gradient vanishes on the zero set
  auto sys = symsys::make_system(F, {sq}, 5);
  auto rep = symsys::hypothesis_check(sys, 1, 1'000'000'000ull);
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.system_samples.size() == 1);
  CHECK(rep.system_samples[0].failure_count > 0);
  CHECK_FALSE(rep.system_samples[0].failures.empty());
}

TEST_CASE("hypothesis check respects the work ceiling") {
  const FieldCtx& F = build_field(5, 1);
  auto sys = symsys::make_system(F, {pi_var(F, 1, 1)}, 4);
  CHECK_THROWS_AS(symsys::hypothesis_check(sys, 3, 10), symci::WorkCeilingExceeded);
}
