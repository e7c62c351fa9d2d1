#pragma once

#include <optional>
#include <string>
#include <vector>

#include "egypt/numeric.hpp"

namespace egypt {

/// The admissible denominator sequences. Each is closed under doubling and
/// has a multiple of every positive integer; see SequenceDescriptor for the
/// per-sequence metadata.
enum class SequenceId {
  practical,        // A005153
  odious,           // A000069
  evil,             // A001969
  hardy_ramanujan,  // A025487
  jordan_polya,     // A001013
  fibbinary,        // A003714
  moser_doubled,    // A126684: Moser-de Bruijn numbers and their doubles
  half_heavy,       // A116882: 2^k * l with l odd, 2^k >= l
};

inline constexpr SequenceId kAllSequences[] = {
    SequenceId::practical,     SequenceId::odious,    SequenceId::evil,
    SequenceId::hardy_ramanujan, SequenceId::jordan_polya, SequenceId::fibbinary,
    SequenceId::moser_doubled, SequenceId::half_heavy,
};

enum class ConvergenceClass { divergent, convergent };
enum class MultiplierStrategy { closed_form, ascending_search, pigeonhole };

/// Static capability record for one sequence.
struct SequenceDescriptor {
  SequenceId id;
  const char* name;
  const char* oeis_id;
  unsigned long min_element;
  ConvergenceClass convergence;
  MultiplierStrategy multiplier;
};

const SequenceDescriptor& descriptor(SequenceId s);

/// Accepts the descriptive name ("practical") or the OEIS id ("A005153").
std::optional<SequenceId> sequence_from_name(const std::string& name);

/// Search / factorization budgets shared by membership and multiplier code.
struct Budget {
  unsigned long factor = kDefaultFactorBudget;       // trial-division bound
  unsigned long search = 1ul << 20;                  // ascending multiplier search bound
};

/// Membership per the defining property of the sequence. Throws
/// MembershipUndecidable only when a factorization-based test runs out of
/// budget (practical numbers with huge unfactored cofactors).
bool is_member(SequenceId s, const Int& n, const Budget& budget = {});

/// Smallest member (1 for every sequence except evil, whose minimum is 3).
Int min_element(SequenceId s);

/// All members <= limit, ascending; consistent with is_member.
std::vector<Int> enumerate_ascending(SequenceId s, const Int& limit, const Budget& budget = {});

/// Some r >= 1 with r*n a member. Returns 1 when n already belongs.
/// Strategies: practical -> power of two above the largest prime factor;
/// evil -> 2^K + 1 with K the bit length; hardy_ramanujan -> suffix-max
/// exponent completion; jordan_polya -> covering product of factorials;
/// half_heavy -> power of two; odious -> smallest r found by ascending
/// search (A178757); fibbinary -> ascending search with the A126684
/// pigeonhole product as fallback; moser_doubled -> pigeonhole over
/// (4^i - 1)/3 residues.
Int productive_multiplier(SequenceId s, const Int& n, const Budget& budget = {});

}  // namespace egypt
