#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "symci/report.hpp"
#include "symci/symsys.hpp"

namespace symci::census {

constexpr std::uint64_t kDefaultWorkCeiling = 1'000'000'000ull;

// Coordinate inequality constraints: pairs (i, j), 1-based, i < j, meaning
// the count excludes points with x_i == x_j.
struct IneqSet {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;

  static IneqSet none() { return {}; }
  static IneqSet all_pairs(std::uint32_t r);
  static IneqSet from_pairs(std::vector<std::pair<std::uint32_t, std::uint32_t>> raw,
                            std::uint32_t r);
  bool is_all(std::uint32_t r) const;
  bool empty() const { return pairs.empty(); }
  std::string to_string(std::uint32_t r) const;  // "all" / "none" / "1-2;3-4"
};

struct CountReport {
  std::uint64_t q = 0;
  std::uint32_t r = 0, m = 0, s = 0;
  std::vector<std::uint32_t> d;  // system degrees; pairing fingerprint
  IneqSet ineq;
  std::uint64_t affine_count = 0;
  std::uint64_t distinct_count = 0;  // points also meeting every inequality in ineq
  bool has_infinity = false;
  std::uint64_t infinity_count = 0;
  std::uint64_t work = 0;        // enumeration units consumed (points * r)
  double wall_seconds = 0;       // informational; never serialized
};

// Exact point count of V(S_i(Pi)) in F_q^r. Enumeration runs over multisets
// of coordinate values (the system is symmetric), weighting each orbit by
// r!/prod(mult!); a non-empty partial inequality set falls back to a direct
// q^r scan. Deterministic for any worker count. Throws WorkCeilingExceeded
// up front when the enumeration would exceed the ceiling.
CountReport count_points(const symsys::SymSystem& sys, const IneqSet& ineq,
                         std::uint64_t work_ceiling = kDefaultWorkCeiling,
                         std::uint32_t workers = 1);

// Points at infinity of the projective closure: zeros of the top-weight
// system, counted projectively ((cone - 1)/(q - 1)). Throws
// NonHomogeneousLeadingPart if a top-weight part fails its homogeneity
// invariant.
std::uint64_t count_infinity(const symsys::SymSystem& sys,
                             std::uint64_t work_ceiling = kDefaultWorkCeiling,
                             std::uint32_t workers = 1);

// Convenience: runs count_infinity and stores the result on the report.
void attach_infinity(CountReport& rep, const symsys::SymSystem& sys,
                     std::uint64_t work_ceiling = kDefaultWorkCeiling,
                     std::uint32_t workers = 1);

// Explicit estimate checks for a finished count: affine and
// distinct-coordinate deviations against 14 D^3 delta^2 (q+1) q^(r-m-2)
// (plus |ineq| delta q^(r-m-1) for the distinct variant), and the
// at-infinity deviation against 14 D^3 delta^2 q^(r-m-2) when present.
// Rejects reports not produced from this system (InvalidPairing) and systems
// outside the range m <= s <= r-m-2 (StandingAssumptionViolation).
std::vector<report::BoundCheck> verify_estimate(const CountReport& rep,
                                                const symsys::SymSystem& sys);

}  // namespace symci::census
