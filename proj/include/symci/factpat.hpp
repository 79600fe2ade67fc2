#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "symci/bigs.hpp"
#include "symci/census.hpp"
#include "symci/report.hpp"
#include "symci/upoly.hpp"

namespace symci::factpat {

// w(lambda) = prod i^(lambda_i) * lambda_i!, the number of coordinate vectors
// mapping to one squarefree polynomial of that pattern; T = 1/w is also the
// share of permutations with that cycle type. Throws InvalidPattern when
// sum i*lambda_i != n.
struct PatternConstants {
  BigInt w;
  BigRat T;
};
PatternConstants pattern_constants(const upoly::FactPattern& lam);

// All patterns of degree n (integer partitions in multiplicity form),
// deterministic order, largest part first. The exact identity
// sum_lambda T(lambda) = 1 is asserted before returning.
std::vector<upoly::FactPattern> enumerate_patterns(std::uint32_t n);

// Monic degree-n polynomials whose coefficient window (a_{n-s}..a_{n-1})
// satisfies m independent affine constraints over F_q; the other n-s low
// coefficients are free, so the family has q^(n-m) members. Constraints are
// stored row-reduced so that in the Z-coordinates Z_k = (-1)^k a_{n-k} the
// coefficient matrix is lower triangular in echelon form with pivot columns
// i_1 < ... < i_m; those pivots are the weighted degrees driving the bounds.
struct LinearFamily {
  const ff::FieldCtx* F = nullptr;  // prime field, q > n
  std::uint32_t n = 0, s = 0, m = 0;
  std::vector<std::vector<ff::Fq>> L;  // m x s, reduced; column t acts on a_{n-s+t-1}
  std::vector<ff::Fq> alpha;           // reduced with L
  std::vector<std::uint32_t> pivots;   // i_1 < ... < i_m in Z-coordinates
  bool in_theorem_range = false;       // m <= s <= n-m-2

  BigInt D() const;      // sum (i_j - 1)
  BigInt delta() const;  // prod i_j
};

// Row-reduces (rows | alpha), derives the pivots, and validates: prime field,
// q > n, 1 <= m <= s <= n. A row that reduces to zero means the rows were
// dependent: with a nonzero constant that is InconsistentSystem, otherwise
// the family is rejected as malformed.
LinearFamily make_family(const ff::FieldCtx& F, std::uint32_t n,
                         std::vector<std::vector<ff::Fq>> rows, std::vector<ff::Fq> alpha);

// Text form, one constraint per line: "c_1 ... c_s | alpha", decimal integers
// reduced mod q, blank lines and # comments ignored. Throws ParseError.
LinearFamily load_family(const ff::FieldCtx& F, std::uint32_t n, const std::string& text);

bool family_contains(const LinearFamily& fam, const upoly::UPoly& f);

struct CensusTally {
  std::uint64_t total = 0;
  std::uint64_t squarefree = 0;
};

struct Census {
  LinearFamily family;
  std::map<upoly::FactPattern, CensusTally> tallies;
  std::uint64_t work = 0;
};

// Enumerates every member and tallies factorization pattern and
// squarefreeness. sum of totals = q^(n-m), checked. Deterministic for any
// worker count. Throws WorkCeilingExceeded before enumerating.
Census family_census(const LinearFamily& fam,
                     std::uint64_t work_ceiling = census::kDefaultWorkCeiling,
                     std::uint32_t workers = 1);

// Per pattern, three explicit checks in exact arithmetic:
//   sq:    ||A^sq| - T q^(n-m)|  <= q^(n-m-1) T (21 D^3 delta^2 + n^2 delta)
//   total: ||A|    - T q^(n-m)|  <= q^(n-m-1) (T (21 D^3 delta^2 + n^2 delta) + n^2)
//   nsq:   |A \ A^sq|            <= n(n-1) q^(n-m-1)
// hypothesis_met mirrors the family's in_theorem_range flag.
std::vector<report::BoundCheck> verify_pattern_bounds(const Census& census);

// Coordinates for the roots of a pattern: position block (i,j) covers
// x_{l+1}..x_{l+i} with l = sum_{k<i} k*lambda_k + (j-1)i, and holds the
// coordinates of one degree-i root in the normal basis theta_i^(q^h).
struct RootBlock {
  std::uint32_t i = 0;       // extension degree
  std::uint32_t j = 0;       // 1-based index among the degree-i blocks
  std::uint32_t offset = 0;  // l_{i,j}
};

struct RootEncoding {
  const ff::FieldCtx* base = nullptr;
  std::uint32_t n = 0;
  upoly::FactPattern lambda;
  std::vector<RootBlock> blocks;  // ascending offset

  struct DegreeData {
    const ff::FieldCtx* ext = nullptr;       // F_{q^i}
    ff::Fq theta = 0;                        // normal element
    std::vector<std::vector<ff::Fq>> A;      // A[t][h] = theta^(q^((t+h) mod i))
  };
  std::map<std::uint32_t, DegreeData> degrees;  // keyed by i, lambda_i > 0 only
};

// Builds the normal bases and conversion matrices for every degree the
// pattern uses. Requires a prime field with q > n; each A_i is checked
// invertible (normality of theta_i guarantees it).
RootEncoding build_root_encoding(const ff::FieldCtx& F, const upoly::FactPattern& lam);

// The root of block b at x: sum_h x[offset+h] * theta^(q^h), in F_{q^i}.
ff::Fq block_root(const RootEncoding& enc, const std::vector<ff::Fq>& x, std::size_t b);

// G(x, T) = prod over blocks of prod_{t<i} (T - root^(q^t)), assembled per
// block over F_{q^i} and descended to F_q. The descent must always succeed;
// CoefficientNotRational firing would mean a normal-basis bug.
upoly::UPoly evaluate_G(const RootEncoding& enc, const std::vector<ff::Fq>& x);

// True iff every block is a full cycle: its i cyclic shifts are pairwise
// distinct, i.e. the block's root generates F_{q^i}.
bool is_type_lambda(const RootEncoding& enc, const std::vector<ff::Fq>& x);

// True iff x is of type lambda and no two same-degree blocks are cyclic
// shifts of one another, i.e. the roots are pairwise non-conjugate and
// G(x, T) is squarefree.
bool blocks_squarefree(const RootEncoding& enc, const std::vector<ff::Fq>& x);

struct CorrespondenceReport {
  std::uint64_t q = 0;
  std::uint32_t n = 0;
  upoly::FactPattern lambda;
  BigInt w;
  std::uint64_t points_scanned = 0;
  std::uint64_t members_pattern = 0;     // family members of this pattern seen as G(x)
  std::uint64_t squarefree_members = 0;  // of those, squarefree
  std::uint64_t census_total = 0;        // |A_lambda| from the census
  std::uint64_t census_squarefree = 0;   // |A_lambda^sq| from the census
  std::uint64_t distinct_points = 0;     // x in the family fiber with all roots distinct
  BigInt distinct_expected;              // w * |A_lambda^sq|
  std::vector<std::string> violations;   // first few members with preimage count != w
  std::uint64_t work = 0;
  bool pass = false;
  std::string summary() const;
};

// Scans all of F_q^n: buckets G(x,T) by family membership, then checks that
// every squarefree member of pattern lambda has exactly w(lambda) preimages,
// that the bucket totals agree with family_census, and that the number of x
// with pairwise distinct roots equals w(lambda) * |A_lambda^sq|. Throws
// WorkCeilingExceeded before scanning.
CorrespondenceReport correspondence_check(const LinearFamily& fam, const upoly::FactPattern& lam,
                                          std::uint64_t work_ceiling = census::kDefaultWorkCeiling,
                                          std::uint32_t workers = 1);

}  // namespace symci::factpat
