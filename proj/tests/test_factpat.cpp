#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "symci/bigs.hpp"
#include "symci/errors.hpp"
#include "symci/factpat.hpp"
#include "symci/ff.hpp"
#include "symci/upoly.hpp"

using namespace symci;
using ff::build_field;
using ff::FieldCtx;
using ff::Fq;
using upoly::FactPattern;
using upoly::UPoly;

TEST_CASE("pattern constants") {
  auto all_linear = factpat::pattern_constants(upoly::pattern_of_counts({4}));
  CHECK(all_linear.w == BigInt(24));  // 1^4 * 4!
  auto one_cycle = factpat::pattern_constants(upoly::pattern_of_counts({0, 0, 0, 1}));
  CHECK(one_cycle.w == BigInt(4));
  auto mixed = factpat::pattern_constants(upoly::pattern_of_counts({1, 1}));
  CHECK(mixed.w == BigInt(2));
  CHECK(mixed.T == BigRat(1) / 2);
  FactPattern bad;
  bad.n = 3;
  bad.counts = {1, 0, 0};  // claims degree 3, sums to 1
  CHECK_THROWS_AS(factpat::pattern_constants(bad), symci::InvalidPattern);
}

TEST_CASE("pattern enumeration matches partition counts and sums to one") {
  const std::uint32_t partitions[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (std::uint32_t n = 1; n <= 10; ++n) {
    auto pats = factpat::enumerate_patterns(n);
    CHECK(pats.size() == partitions[n - 1]);
    BigRat sum(0);
    for (const auto& lam : pats) sum = sum + factpat::pattern_constants(lam).T;
    CHECK(sum == BigRat(1));
  }
  auto pats = factpat::enumerate_patterns(3);
  CHECK(pats.front().to_string() == "3^1");  // largest part first
  CHECK(pats.back().to_string() == "1^3");
}

TEST_CASE("family construction reduces to echelon form with Z-space pivots") {
  const FieldCtx& F = build_field(5, 1);
  // window (a_2, a_3) of quartics; constraint a_3 = 2 pins Z_1
  auto top = factpat::make_family(F, 4, {{0, 1}}, {2});
  CHECK(top.pivots == std::vector<std::uint32_t>{1});
  CHECK(top.D() == BigInt(0));
  CHECK(top.delta() == BigInt(1));
  CHECK_FALSE(top.in_theorem_range);  // s = 2 exceeds n-m-2 = 1

  // constraint a_2 = 1 pins Z_2
  auto deep = factpat::make_family(F, 4, {{1, 0}}, {1});
  CHECK(deep.pivots == std::vector<std::uint32_t>{2});
  CHECK(deep.D() == BigInt(1));
  CHECK(deep.delta() == BigInt(2));

  // two constraints: pivots 1 and 2, regardless of input row order
  auto both = factpat::make_family(F, 4, {{1, 1}, {0, 1}}, {0, 1});
  CHECK(both.m == 2);
  CHECK(both.pivots == std::vector<std::uint32_t>{1, 2});
  CHECK(both.D() == BigInt(1));
  CHECK(both.delta() == BigInt(2));

  CHECK_THROWS_AS(factpat::make_family(F, 4, {{1, 1}, {2, 2}}, {0, 1}),
                  symci::InconsistentSystem);
  CHECK_THROWS_AS(factpat::make_family(F, 4, {{1, 1}, {2, 2}}, {0, 0}), symci::Error);
  CHECK_THROWS_AS(factpat::make_family(build_field(3, 1), 4, {{0, 1}}, {2}),
                  symci::HypothesisRangeViolation);  // needs q > n
  CHECK_THROWS_AS(factpat::make_family(build_field(5, 2), 2, {{1}}, {0}), symci::NonPrime);
}

TEST_CASE("family text form") {
  const FieldCtx& F = build_field(5, 1);
  auto fam = factpat::load_family(F, 4,
                                  "# pins the two top coefficients\n"
                                  "0 1 | 2\n"
                                  "\n"
                                  "1 0 | 6\n");
  CHECK(fam.m == 2);
  CHECK(fam.s == 2);
  // rows force a_3 = -2 = 3 and a_2 = -6 = 4
  UPoly member = UPoly::make(F, {3, 4, 4, 3, 1});
  CHECK(factpat::family_contains(fam, member));
  UPoly off = UPoly::make(F, {3, 4, 2, 3, 1});  // a_2 = 2 breaks the second row
  CHECK_FALSE(factpat::family_contains(fam, off));

  CHECK_THROWS_AS(factpat::load_family(F, 4, "0 1 2\n"), symci::ParseError);
  CHECK_THROWS_AS(factpat::load_family(F, 4, "0 x | 2\n"), symci::ParseError);
  CHECK_THROWS_AS(factpat::load_family(F, 4, "0 1 | 2\n1 | 0\n"), symci::ParseError);
  CHECK_THROWS_AS(factpat::load_family(F, 4, "#only comments\n"), symci::ParseError);
}

TEST_CASE("membership picks out exactly q^(n-m) monic polynomials") {
  const FieldCtx& F = build_field(5, 1);
  auto fam = factpat::load_family(F, 3, "1 | 0\n");  // a_2 = 0
  std::uint64_t members = 0;
  for (Fq a0 = 0; a0 < 5; ++a0)
    for (Fq a1 = 0; a1 < 5; ++a1)
      for (Fq a2 = 0; a2 < 5; ++a2)
        if (factpat::family_contains(fam, UPoly::make(F, {a0, a1, a2, 1}))) ++members;
  CHECK(members == 25);
  CHECK_FALSE(factpat::family_contains(fam, UPoly::make(F, {0, 0, 0, 2})));  // non-monic
  CHECK_FALSE(factpat::family_contains(fam, UPoly::make(F, {0, 1})));        // wrong degree
}

TEST_CASE("census tallies agree with direct enumeration") {
  for (std::uint32_t q : {5u, 7u}) {
    const FieldCtx& F = build_field(q, 1);
    auto fam = factpat::load_family(F, 3, "1 | 1\n");  // a_2 = 1
    auto census = factpat::family_census(fam);

    std::map<FactPattern, factpat::CensusTally> expect;
    std::uint64_t total = 0;
    for (Fq a0 = 0; a0 < q; ++a0)
      for (Fq a1 = 0; a1 < q; ++a1)
        for (Fq a2 = 0; a2 < q; ++a2) {
          UPoly f = UPoly::make(F, {a0, a1, a2, 1});
          if (!factpat::family_contains(fam, f)) continue;
          ++total;
          auto& t = expect[oracle::pattern_by_trial_division(f)];
          ++t.total;
          if (upoly::is_squarefree(f)) ++t.squarefree;
        }
    CHECK(total == static_cast<std::uint64_t>(q) * q);

    std::uint64_t census_total = 0;
    for (const auto& [lam, tally] : census.tallies) {
      census_total += tally.total;
      auto it = expect.find(lam);
      REQUIRE(it != expect.end());
      CHECK(tally.total == it->second.total);
      CHECK(tally.squarefree == it->second.squarefree);
    }
    CHECK(census_total == static_cast<std::uint64_t>(q) * q);
  }
}

TEST_CASE("census worked example") {
  const FieldCtx& F = build_field(3, 1);
  auto fam = factpat::load_family(F, 2, "1 | 0\n");
  auto census = factpat::family_census(fam);
  auto linear = census.tallies.at(upoly::pattern_of_counts({2}));
  CHECK(linear.total == 2);
  CHECK(linear.squarefree == 1);
  auto quad = census.tallies.at(upoly::pattern_of_counts({0, 1}));
  CHECK(quad.total == 1);
  CHECK(quad.squarefree == 1);
}

TEST_CASE("census is deterministic across workers and honors the ceiling") {
  const FieldCtx& F = build_field(7, 1);
  auto fam = factpat::load_family(F, 4, "1 0 | 0\n");
  auto a = factpat::family_census(fam, census::kDefaultWorkCeiling, 1);
  auto b = factpat::family_census(fam, census::kDefaultWorkCeiling, 3);
  CHECK(a.tallies.size() == b.tallies.size());
  for (const auto& [lam, tally] : a.tallies) {
    CHECK(b.tallies.at(lam).total == tally.total);
    CHECK(b.tallies.at(lam).squarefree == tally.squarefree);
  }
  CHECK_THROWS_AS(factpat::family_census(fam, 5), symci::WorkCeilingExceeded);
}

TEST_CASE("pattern bounds hold on a mid-size family") {
  const FieldCtx& F = build_field(11, 1);
  auto fam = factpat::load_family(F, 4, "1 | 3\n");  // a_3 = 3; s = 1 = n-m-2
  REQUIRE(fam.in_theorem_range);
  auto checks = factpat::verify_pattern_bounds(factpat::family_census(fam));
  CHECK(checks.size() == 3 * factpat::enumerate_patterns(4).size());
  std::uint64_t nsq_rows = 0;
  for (const auto& c : checks) {
    INFO(c.name);
    CHECK(c.pass);
    CHECK(c.hypothesis_met);
    if (c.name.rfind("nsq", 0) == 0) {
      ++nsq_rows;
      CHECK_FALSE(c.vacuous);  // upper-bound rows never count as vacuous
    }
  }
  CHECK(nsq_rows == 5);
  CHECK(checks[0].name == "sq[4^1]");
  CHECK(checks[1].name == "total[4^1]");
  CHECK(checks[2].name == "nsq[4^1]");
}

TEST_CASE("root encodings place blocks at the documented offsets") {
  const FieldCtx& F = build_field(5, 1);
  // lambda = 1^2 2^1: two degree-1 blocks then one degree-2 block
  auto enc = factpat::build_root_encoding(F, upoly::pattern_of_counts({2, 1}));
  REQUIRE(enc.blocks.size() == 3);
  CHECK(enc.blocks[0].i == 1);
  CHECK(enc.blocks[0].offset == 0);
  CHECK(enc.blocks[1].i == 1);
  CHECK(enc.blocks[1].offset == 1);
  CHECK(enc.blocks[2].i == 2);
  CHECK(enc.blocks[2].offset == 2);
  CHECK(enc.degrees.count(1) == 1);
  CHECK(enc.degrees.count(2) == 1);
  CHECK(enc.degrees.at(2).ext->q == 25);
  CHECK_THROWS_AS(factpat::build_root_encoding(build_field(3, 1), upoly::pattern_of_counts({2, 1})),
                  symci::HypothesisRangeViolation);  // q = 3 <= n = 4
}

TEST_CASE("evaluate_G descends conjugate products to the base field") {
  const FieldCtx& F = build_field(3, 1);
  auto enc = factpat::build_root_encoding(F, upoly::pattern_of_counts({0, 1}));
  // x = (1, 0): the root is the normal element theta of F_9
  UPoly g = factpat::evaluate_G(enc, {1, 0});
  CHECK(g == UPoly::make(F, {2, 1, 1}));  // T^2 + T + 2, irreducible
  CHECK(factpat::is_type_lambda(enc, {1, 0}));
  CHECK_FALSE(factpat::is_type_lambda(enc, {0, 0}));  // root 0 lies in F_3
  CHECK_FALSE(factpat::is_type_lambda(enc, {1, 1}));  // theta + theta^3 is rational
  std::uint64_t typed = 0;
  for (Fq x0 = 0; x0 < 3; ++x0)
    for (Fq x1 = 0; x1 < 3; ++x1)
      if (factpat::is_type_lambda(enc, {x0, x1})) ++typed;
  CHECK(typed == 6);  // the six degree-2 elements of F_9

  // degree-1 blocks: distinctness is exactly blocks_squarefree
  auto lin = factpat::build_root_encoding(F, upoly::pattern_of_counts({2}));
  CHECK(factpat::blocks_squarefree(lin, {1, 2}));
  CHECK_FALSE(factpat::blocks_squarefree(lin, {2, 2}));
  CHECK(factpat::evaluate_G(lin, {1, 2}) == UPoly::from_roots(F, {1, 2}));
}

TEST_CASE("correspondence between coordinate space and family members") {
  const FieldCtx& F = build_field(5, 1);
  auto fam = factpat::load_family(F, 2, "1 | 0\n");  // a_1 = 0
  for (const auto& lam : factpat::enumerate_patterns(2)) {
    auto rep = factpat::correspondence_check(fam, lam);
    INFO(lam.to_string());
    CHECK(rep.pass);
    CHECK(rep.violations.empty());
    CHECK(rep.points_scanned == 25);
    CHECK(rep.w == factpat::pattern_constants(lam).w);
    CHECK(rep.distinct_expected == rep.w * BigInt(rep.census_squarefree));
    CHECK(rep.distinct_points == rep.distinct_expected);
  }
  // frozen numbers for the split pattern: members T^2 + c
  auto rep = factpat::correspondence_check(fam, upoly::pattern_of_counts({2}));
  CHECK(rep.census_total == 3);       // T^2, T^2+1, T^2+4
  CHECK(rep.census_squarefree == 2);  // T^2 drops out
  CHECK(rep.summary().find("preimages") != std::string::npos);
}
