#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "egypt/errors.hpp"

namespace egypt {

/// Arbitrary-precision integer. All denominators, multipliers and trace
/// quantities use this type; nothing in the library ever rounds.
using Int = mpz_class;

/// Exact rational with positive denominator, kept normalized
/// (gcd(|num|, den) = 1) after every operation.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(const Int& num, const Int& den);
  explicit Rational(const Int& n) : v_(n) {}
  explicit Rational(long n) : v_(n) {}

  Int num() const { return Int(v_.get_num()); }
  Int den() const { return Int(v_.get_den()); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
  Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
  Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  /// Canonical decimal rendering: "num/den", or just "num" when den = 1.
  std::string str() const;

  /// Reciprocal of a positive integer.
  static Rational unit(const Int& d) { return Rational(Int(1), d); }

private:
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  mpq_class v_;  // GMP keeps this canonical; constructors enforce den >= 1
};

/// Parses "a/b" or "a" (decimal, optional leading '-'). Throws ParseError on
/// malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Ordered prime-power decomposition. Empty list represents 1.
struct Factorization {
  struct Term {
    Int prime;
    unsigned exponent;
  };
  std::vector<Term> factors;

  Int value() const;
};

inline constexpr unsigned long kDefaultFactorBudget = 1ul << 20;

/// Complete factorization by trial division up to `budget`, with a
/// primality check on any remaining cofactor. Throws
/// FactorizationBudgetExceeded when a composite cofactor above budget^2
/// survives.
Factorization factorize(const Int& n, unsigned long budget = kDefaultFactorBudget);

/// sigma(n): sum of all divisors, computed from the factorization.
Int sigma(const Factorization& f);

/// k with 2^k <= n < 2^(k+1). Requires n >= 1.
unsigned long floor_log2(const Int& n);

/// Exponent set E with n = sum of 2^e over E, ascending. Empty for n = 0.
std::vector<unsigned long> bit_positions(const Int& n);

/// Number of set bits (equals |bit_positions(n)|).
unsigned long popcount(const Int& n);

}  // namespace egypt
