#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "symci/errors.hpp"
#include "symci/ff.hpp"

using namespace symci;
using ff::build_field;
using ff::FieldCtx;
using ff::Fq;

TEST_CASE("primality") {
  CHECK(ff::is_prime(2));
  CHECK(ff::is_prime(3));
  CHECK(ff::is_prime(1031));
  CHECK(ff::is_prime(2147483647ull));
  CHECK_FALSE(ff::is_prime(0));
  CHECK_FALSE(ff::is_prime(1));
  CHECK_FALSE(ff::is_prime(561));  // Carmichael, catches Fermat-only tests
  CHECK_FALSE(ff::is_prime(1024));
}

TEST_CASE("composite characteristic is rejected") {
  CHECK_THROWS_WITH_AS(build_field(4, 1), "base characteristic must be prime, got 4",
                       symci::NonPrime);
  CHECK_THROWS_AS(build_field(15, 2), symci::NonPrime);
}

TEST_CASE("contexts are cached per (p, k)") {
  const FieldCtx* a = &build_field(5, 1);
  const FieldCtx* b = &build_field(5, 1);
  CHECK(a == b);
  CHECK(&build_field(5, 2) != a);
}

TEST_CASE("deterministic moduli") {
  // Least base-p encoding of the non-leading coefficients, monic, irreducible.
  CHECK(build_field(2, 2).modulus == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(build_field(2, 3).modulus == std::vector<std::uint32_t>{1, 1, 0, 1});
  CHECK(build_field(3, 2).modulus == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(build_field(3, 3).modulus == std::vector<std::uint32_t>{1, 2, 0, 1});
}

TEST_CASE("prime field matches integer arithmetic mod p") {
  const FieldCtx& F = build_field(13, 1);
  for (Fq a = 0; a < 13; ++a)
    for (Fq b = 0; b < 13; ++b) {
      CHECK(F.add(a, b) == (a + b) % 13);
      CHECK(F.mul(a, b) == (a * b) % 13);
      CHECK(F.sub(a, b) == (a + 13 - b) % 13);
    }
}

static void check_axioms_exhaustive(const FieldCtx& F) {
  const Fq q = static_cast<Fq>(F.q);
  for (Fq a = 0; a < q; ++a) {
    CHECK(F.add(a, 0) == a);
    CHECK(F.mul(a, 1) == a);
    CHECK(F.add(a, F.neg(a)) == 0);
    if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK(F.pow(a, F.q) == a);  // Fermat
  }
  for (Fq a = 0; a < q; ++a)
    for (Fq b = 0; b < q; ++b)
      for (Fq c = 0; c < q; ++c) {
        CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      }
}

TEST_CASE("field axioms, exhaustive on small extensions") {
  check_axioms_exhaustive(build_field(2, 3));
  check_axioms_exhaustive(build_field(3, 2));
}

TEST_CASE("large untabled field agrees with axioms on random samples") {
  const FieldCtx& F = build_field(13, 4);  // q = 28561, beyond the table cutoff
  std::mt19937 rng(7);
  std::uniform_int_distribution<Fq> pick(0, static_cast<Fq>(F.q - 1));
  for (int t = 0; t < 2000; ++t) {
    Fq a = pick(rng), b = pick(rng), c = pick(rng);
    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
    CHECK(F.sub(F.add(a, b), b) == a);
    if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK(F.pow(a, F.q) == a);
  }
}

TEST_CASE("digit encoding round trips") {
  const FieldCtx& F = build_field(3, 3);
  for (Fq a = 0; a < F.q; ++a) {
    std::vector<std::uint32_t> d(F.k);
    for (std::uint32_t h = 0; h < F.k; ++h) d[h] = F.digit(a, h);
    CHECK(F.from_digits(d) == a);
  }
  CHECK(F.from_base(7) == 1);  // 7 mod 3
  CHECK(build_field(5, 1).from_base(7) == 2);
}

TEST_CASE("frobenius") {
  const FieldCtx& F = build_field(3, 2);
  for (Fq a = 0; a < F.q; ++a) {
    CHECK(F.frobenius(a) == F.pow(a, 3));
    CHECK(F.frobenius(a, F.k) == a);  // full orbit closes
    CHECK(F.frobenius(F.add(a, 1)) == F.add(F.frobenius(a), 1));  // additive
  }
  // fixed points are exactly the prime subfield
  std::set<Fq> fixed;
  for (Fq a = 0; a < F.q; ++a)
    if (F.frobenius(a) == a) fixed.insert(a);
  CHECK(fixed == std::set<Fq>{0, 1, 2});
}

TEST_CASE("pow against repeated multiplication") {
  const FieldCtx& F = build_field(2, 3);
  std::mt19937 rng(11);
  std::uniform_int_distribution<Fq> pick(0, static_cast<Fq>(F.q - 1));
  std::uniform_int_distribution<std::uint64_t> picke(0, 40);
  for (int t = 0; t < 200; ++t) {
    Fq a = pick(rng);
    std::uint64_t e = picke(rng);
    Fq expect = 1;
    for (std::uint64_t i = 0; i < e; ++i) expect = F.mul(expect, a);
    CHECK(F.pow(a, e) == expect);
  }
  CHECK(F.pow(0, 0) == 1);
}

TEST_CASE("normal elements") {
  // First encoding whose Frobenius orbit is a basis.
  CHECK(ff::find_normal_element(build_field(2, 2)) == 2);  // {w, w+1}
  CHECK(ff::find_normal_element(build_field(3, 2)) == 4);  // {1+w, 1+2w}
  // property check on a bigger field: orbit of the returned element spans
  const FieldCtx& F = build_field(5, 3);
  Fq theta = ff::find_normal_element(F);
  std::vector<Fq> orbit{theta, F.frobenius(theta), F.frobenius(theta, 2)};
  // rank over F_5 by Gaussian elimination on digit rows
  std::vector<std::vector<std::uint32_t>> m(3, std::vector<std::uint32_t>(3));
  for (int i = 0; i < 3; ++i)
    for (std::uint32_t h = 0; h < 3; ++h) m[i][h] = F.digit(orbit[i], h);
  int rank = 0;
  for (int col = 0; col < 3; ++col) {
    int pivot = -1;
    for (int row = rank; row < 3; ++row)
      if (m[row][col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    std::uint32_t inv = 1;
    while (m[rank][col] * inv % 5 != 1) ++inv;
    for (int row = 0; row < 3; ++row) {
      if (row == rank || m[row][col] == 0) continue;
      std::uint32_t f = m[row][col] * inv % 5;
      for (int cc = 0; cc < 3; ++cc) m[row][cc] = (m[row][cc] + 5 * 5 - f * m[rank][cc]) % 5;
    }
    ++rank;
  }
  CHECK(rank == 3);
}
