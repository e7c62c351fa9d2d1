#pragma once

#include <utility>
#include <vector>

#include "egypt/numeric.hpp"
#include "egypt/sequences.hpp"

namespace egypt {

/// Egyptian fraction over one sequence: strictly increasing denominators
/// whose reciprocals sum exactly to the target.
struct Expansion {
  std::vector<Int> denominators;
};

/// Intermediate quantities of one run of the construction. When the prefix
/// already sums to q the run short-circuits and the split fields stay at
/// their degenerate values (x = 0, y = 1, k = a = b = 0).
struct ExpansionTrace {
  std::vector<Int> prefix;
  Rational residual;                  // q' = q - sum over prefix
  Int x{0}, y{1};                     // residual == x/y; y keeps an odd prime factor
  Int multiplier{1};                  // r with m * y a member
  Int min_elem{1};                    // m = min of the sequence
  unsigned long k{0};                 // floor(log2 y)
  Int quotient{0}, remainder{0};      // 2^k * m * x = quotient * y + remainder
  std::vector<unsigned long> a_bits;  // exponent set of quotient
  std::vector<unsigned long> b_bits;  // exponent set of remainder

  bool short_circuited() const { return residual.is_zero(); }
};

struct PrefixSelection {
  std::vector<Int> prefix;
  Rational residual;
};

struct ExpandOptions {
  unsigned long prefix_budget = 1'000'000;  // max prefix members
  unsigned long feasibility_members = 256;  // partial-sum probe for convergent sequences
  unsigned long split_bits_budget = 131072;  // cap on bits of y; the split emits up to
                                             // 2(k+1) denominators of up to k bits each
  Budget budget;                            // factorization / multiplier search
};

/// Longest initial segment of the ascending sequence whose reciprocal sum
/// stays <= q; the residual is then below the reciprocal of the first
/// excluded member. Throws PrefixBudgetExceeded past `member_budget`.
PrefixSelection select_prefix(SequenceId s, const Rational& q, unsigned long member_budget,
                              const Budget& budget = {});

/// Multiplies numerator and denominator by three when y is a power of two,
/// so the returned denominator has an odd prime factor. Requires gcd(x,y)=1,
/// y >= 2.
std::pair<Int, Int> oddify(const Int& x, const Int& y);

struct SplitResult {
  unsigned long k;
  Int quotient, remainder;
  std::vector<unsigned long> a_bits, b_bits;
};

/// Divides 2^k * m * x by y at k = floor(log2 y). Requires x/y < 1/m (and
/// y >= 2), which caps both quotient and remainder below y so every binary
/// exponent is at most k.
SplitResult binary_remainder_split(const Int& m, const Int& x, const Int& y);

/// Full construction: prefix, oddify, multiplier, binary split, assembly.
/// Postconditions (distinct denominators, sequence membership, exact sum)
/// are re-checked at runtime; a violation raises InternalAssertionFailed.
std::pair<Expansion, ExpansionTrace> expand(SequenceId s, const Rational& q,
                                            const ExpandOptions& opts = {});

}  // namespace egypt
