#include "egypt/numeric.hpp"

#include <cctype>

namespace egypt {

Rational::Rational(const Int& num, const Int& den) {
  if (sgn(den) == 0) raise(Errc::parse_error, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();  // also moves any sign off the denominator
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) raise(Errc::precondition_violated, "division by zero rational");
  return Rational(mpq_class(v_ / o.v_));
}

std::string Rational::str() const { return v_.get_str(); }

Rational parse_rational(const std::string& text) {
  auto is_int = [](const std::string& s, bool sign_ok) {
    if (s.empty()) return false;
    std::size_t i = (sign_ok && s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string num = (slash == std::string::npos) ? text : text.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
  if (!is_int(num, true) || !is_int(den, false))
    raise(Errc::parse_error, "malformed rational '" + text + "' (expected a or a/b in decimal)");
  Int d(den);
  if (sgn(d) == 0) raise(Errc::parse_error, "zero denominator in '" + text + "'");
  return Rational(Int(num), d);
}

Int Factorization::value() const {
  Int n = 1;
  Int pw;
  for (const auto& t : factors) {
    mpz_pow_ui(pw.get_mpz_t(), t.prime.get_mpz_t(), t.exponent);
    n *= pw;
  }
  return n;
}

namespace {

// Deterministic for small inputs, Miller-Rabin/BPSW beyond; GMP returns 2 for
// proven primes and 1 for strong probable primes.
bool probably_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

}  // namespace

namespace {

// Fast path for word-sized inputs; exact same contract as the mpz path.
Factorization factorize_ulong(unsigned long n, unsigned long budget) {
  Factorization out;
  auto strip = [&](unsigned long p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.factors.push_back({Int(p), e});
  };
  strip(2);
  strip(3);
  for (unsigned long c = 5; n > 1 && c <= budget && c <= n / c; c += (c % 6 == 5) ? 2 : 4)
    strip(c);
  if (n > 1) {
    bool fits = budget >= (1ul << 32) || n / budget <= budget;  // n < (budget+1)^2
    if (fits || mpz_probab_prime_p(Int(n).get_mpz_t(), 40) > 0)
      out.factors.push_back({Int(n), 1});
    else
      raise(Errc::factorization_budget_exceeded,
            "composite cofactor above budget^2 left unfactored");
  }
  return out;
}

}  // namespace

Factorization factorize(const Int& n, unsigned long budget) {
  if (sgn(n) <= 0) raise(Errc::precondition_violated, "factorize requires n >= 1");
  if (budget < 2) raise(Errc::precondition_violated, "factorize requires budget >= 2");
  if (n.fits_ulong_p()) return factorize_ulong(n.get_ui(), budget);
  Factorization out;
  Int rest = n;
  auto strip = [&](const Int& p) {
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
      ++e;
    }
    if (e > 0) out.factors.push_back({p, e});
  };
  strip(Int(2));
  strip(Int(3));
  // wheel over 6k+-1 candidates
  for (Int c = 5; rest > 1; c += (mpz_fdiv_ui(c.get_mpz_t(), 6) == 5) ? 2 : 4) {
    if (mpz_cmp_ui(c.get_mpz_t(), budget) > 0) break;
    if (c * c > rest) break;
    strip(c);
  }
  if (rest > 1) {
    // rest has no factor <= min(budget, sqrt(rest)); prime if small or passes the test
    Int b2;
    mpz_ui_pow_ui(b2.get_mpz_t(), budget, 2);
    if (rest <= b2 || probably_prime(rest)) {
      out.factors.push_back({rest, 1});
    } else {
      raise(Errc::factorization_budget_exceeded,
            "composite cofactor above budget^2 left unfactored");
    }
  }
  return out;
}

Int sigma(const Factorization& f) {
  Int s = 1;
  Int pw;
  for (const auto& t : f.factors) {
    mpz_pow_ui(pw.get_mpz_t(), t.prime.get_mpz_t(), t.exponent + 1);
    s *= (pw - 1) / (t.prime - 1);
  }
  return s;
}

unsigned long floor_log2(const Int& n) {
  if (sgn(n) <= 0) raise(Errc::precondition_violated, "floor_log2 requires n >= 1");
  return mpz_sizeinbase(n.get_mpz_t(), 2) - 1;
}

std::vector<unsigned long> bit_positions(const Int& n) {
  if (sgn(n) < 0) raise(Errc::precondition_violated, "bit_positions requires n >= 0");
  std::vector<unsigned long> out;
  mp_bitcnt_t pos = mpz_scan1(n.get_mpz_t(), 0);
  while (pos != static_cast<mp_bitcnt_t>(-1)) {
    out.push_back(pos);
    pos = mpz_scan1(n.get_mpz_t(), pos + 1);
  }
  return out;
}

unsigned long popcount(const Int& n) { return mpz_popcount(n.get_mpz_t()); }

}  // namespace egypt
