#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "egypt/expander.hpp"
#include "egypt/numeric.hpp"
#include "egypt/sequences.hpp"

namespace egypt {

/// Outcome of checking one expansion: exact sum, pairwise distinctness and
/// per-denominator membership. Failures are reported, never thrown.
struct VerificationReport {
  enum class Membership { all_confirmed, some_undecidable };
  bool sum_ok = false;
  bool distinct_ok = false;
  Membership membership = Membership::all_confirmed;
  std::vector<std::pair<Int, std::string>> violations;

  bool passed() const { return violations.empty(); }
};

/// Members <= limit recomputed from the definitions with code independent
/// of the sequences module (its own popcount, divisor enumeration and
/// generation loops). Intentionally slow; limit is capped at 10^5.
std::vector<Int> oracle_members(SequenceId s, unsigned long limit);

inline constexpr unsigned long kOracleLimitCap = 100'000;

/// Checks sum equality with q (exact rational summation), distinctness and
/// membership of every denominator; denominators within `oracle_limit` are
/// additionally confirmed against oracle_members.
VerificationReport verify_expansion(SequenceId s, const Rational& q,
                                    const std::vector<Int>& denominators,
                                    const Budget& budget = {},
                                    unsigned long oracle_limit = 10'000);

/// One "index value" line of an OEIS b-file.
struct BFileEntry {
  long long index;
  Int value;
};

/// Parses b-file text: whitespace-separated "index value" lines, '#'
/// comments, ascending indices. Throws ParseError with the line number.
std::vector<BFileEntry> parse_bfile(std::istream& in);

/// Compares the listing against enumerate_ascending, skipping leading zero
/// terms (the sequences here cover positive integers only). Entries beyond
/// `value_cap` are out of comparison range. Returns the b-file index of the
/// first mismatch, or nothing when the compared range agrees.
std::optional<long long> compare_bfile(SequenceId s, const std::vector<BFileEntry>& entries,
                                       const Int& value_cap = Int(100'000),
                                       const Budget& budget = {});

}  // namespace egypt
