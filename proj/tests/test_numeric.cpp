#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "egypt/numeric.hpp"

using namespace egypt;

namespace {

// test-local oracles, independent of the library paths they check

bool trial_division_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

unsigned long brute_divisor_sum(unsigned long n) {
  unsigned long s = 0;
  for (unsigned long d = 1; d <= n; ++d)
    if (n % d == 0) s += d;
  return s;
}

int string_popcount(const Int& n) {
  std::string bits = n.get_str(2);
  int ones = 0;
  for (char c : bits)
    if (c == '1') ++ones;
  return ones;
}

}  // namespace

TEST_CASE("factorize on worked examples") {
  Factorization f = factorize(Int(12));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].prime == 2);
  CHECK(f.factors[0].exponent == 2);
  CHECK(f.factors[1].prime == 3);
  CHECK(f.factors[1].exponent == 1);

  CHECK(factorize(Int(1)).factors.empty());

  CHECK(trial_division_prime(9973));  // oracle first
  Factorization p = factorize(Int(9973));
  REQUIRE(p.factors.size() == 1);
  CHECK(p.factors[0].prime == 9973);
  CHECK(p.factors[0].exponent == 1);
}

TEST_CASE("factorize reports an unfactored large composite cofactor") {
  Int n = Int(1000003) * Int(1000033);
  CHECK_THROWS_AS(factorize(n, 1000), Error);
  try {
    factorize(n, 1000);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::factorization_budget_exceeded);
  }
  // a large *prime* cofactor is fine at the same budget
  Factorization f = factorize(Int(1000003) * 4, 1000);
  CHECK(f.value() == Int(1000003) * 4);
}

TEST_CASE("factorize rejects nonpositive input") {
  CHECK_THROWS_AS(factorize(Int(0)), Error);
  CHECK_THROWS_AS(factorize(Int(-5)), Error);
}

TEST_CASE("factorization reconstructs and lists primes, 1..10^6") {
  for (unsigned long n = 1; n <= 1'000'000; ++n) {
    Factorization f = factorize(Int(n));
    CHECK(f.value() == n);
    if (n % 9973 == 0) {  // spot-check primality on a sparse subsequence
      for (const auto& t : f.factors) CHECK(trial_division_prime(t.prime.get_ui()));
    }
  }
}

TEST_CASE("sigma on worked examples and against brute force") {
  CHECK(sigma(Factorization{}) == 1);
  CHECK(sigma(factorize(Int(8))) == 15);
  CHECK(brute_divisor_sum(12) == 28);  // oracle first
  CHECK(sigma(factorize(Int(12))) == 28);
  for (unsigned long n = 1; n <= 10'000; ++n)
    CHECK(sigma(factorize(Int(n))) == brute_divisor_sum(n));
}

TEST_CASE("floor_log2 examples and bracketing property") {
  CHECK(floor_log2(Int(1)) == 0);
  CHECK(floor_log2(Int(12)) == 3);
  CHECK(floor_log2(Int(16)) == 4);
  CHECK_THROWS_AS(floor_log2(Int(0)), Error);
  for (unsigned long n = 1; n <= 1'000'000; ++n) {
    unsigned long k = floor_log2(Int(n));
    CHECK((1ul << k) <= n);
    CHECK(n < (1ul << (k + 1)));
  }
}

TEST_CASE("bit_positions examples and reconstruction property") {
  CHECK(bit_positions(Int(0)).empty());
  CHECK(bit_positions(Int(5)) == std::vector<unsigned long>{0, 2});
  CHECK(bit_positions(Int(7)) == std::vector<unsigned long>{0, 1, 2});
  for (unsigned long n = 0; n <= 1'000'000; n += 17) {
    auto bits = bit_positions(Int(n));
    unsigned long rebuilt = 0;
    for (auto e : bits) rebuilt += 1ul << e;
    CHECK(rebuilt == n);
    CHECK(bits.size() == static_cast<std::size_t>(string_popcount(Int(n))));
  }
}

TEST_CASE("rational arithmetic is exact and stays normalized") {
  std::mt19937_64 rng(20240917);
  for (int i = 0; i < 2000; ++i) {
    Rational a(Int(static_cast<long>(rng() % 2'000'001) - 1'000'000),
               Int(static_cast<long>(rng() % 999'983) + 1));
    Rational b(Int(static_cast<long>(rng() % 2'000'001) - 1'000'000),
               Int(static_cast<long>(rng() % 999'983) + 1));
    CHECK((a + b) - b == a);
    Rational sum = a + b;
    CHECK(gcd(sum.num(), sum.den()) == 1);
    CHECK(sum.den() >= 1);
  }
  // big operands survive exactly
  Rational big(Int("123456789012345678901234567890123456789"), Int("987654321098765432109"));
  CHECK((big + big) - big == big);
}

TEST_CASE("rational normalization moves sign and reduces") {
  Rational r(Int(6), Int(-4));
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(r.str() == "-3/2");
  CHECK(Rational(Int(4), Int(2)).str() == "2");
}

TEST_CASE("rational parsing accepts a and a/b, rejects junk") {
  CHECK(parse_rational("23/12") == Rational(Int(23), Int(12)));
  CHECK(parse_rational("2") == Rational(Int(2)));
  CHECK(parse_rational("-5/10") == Rational(Int(-1), Int(2)));
  for (const char* bad : {"1/0", "", "abc", "1.5", "1/-2", "2/", "/3", "0x10"}) {
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
}
