#pragma once

#include <optional>
#include <string>

#include "egypt/numeric.hpp"
#include "egypt/sequences.hpp"

namespace egypt {

/// Trichotomy for "is q strictly below the sequence's reciprocal sum".
struct FeasibilityVerdict {
  enum class Kind { feasible, infeasible, unknown };
  Kind verdict;
  /// feasible: an achieved partial sum strictly above q (absent for the
  /// divergent sequences, where any finite q qualifies).
  /// infeasible: a certified upper bound U on the total with q >= U.
  std::optional<Rational> certificate;
  std::string diagnostics;
};

const char* verdict_name(FeasibilityVerdict::Kind k);

/// Exact sum of the reciprocals of the first `count` members.
Rational partial_reciprocal_sum(SequenceId s, unsigned long count, const Budget& budget = {});

/// Certified upper bound on the total reciprocal sum, in exact arithmetic
/// with all tail factors rounded up; absent for the divergent sequences.
/// hardy_ramanujan uses the primorial product (members biject with
/// multisets of primorials), jordan_polya the factorial product (which
/// overcounts), and the bit-pattern sequences per-bit-length member counts.
std::optional<Rational> total_sum_upper_bound(SequenceId s);

/// feasible when divergent or a partial sum within `enumeration_budget`
/// members strictly exceeds q; infeasible when q reaches the certified
/// upper bound; unknown in the gap between the two.
FeasibilityVerdict feasibility(SequenceId s, const Rational& q,
                               unsigned long enumeration_budget = 256,
                               const Budget& budget = {});

}  // namespace egypt
