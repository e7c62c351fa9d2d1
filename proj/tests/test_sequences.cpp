#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <thread>
#include <vector>

#include "egypt/sequences.hpp"
#include "egypt/verifier.hpp"

using namespace egypt;

namespace {

// subset-sum check straight from the definition, for spot oracles here
bool subset_sum_practical(unsigned long n) {
  std::vector<unsigned long> divs;
  for (unsigned long d = 1; d <= n; ++d)
    if (n % d == 0) divs.push_back(d);
  std::vector<char> reach(n + 1, 0);
  reach[0] = 1;
  for (unsigned long d : divs)
    for (unsigned long m = n; m + 1 > d; --m)
      if (reach[m - d]) reach[m] = 1;
  for (unsigned long m = 1; m <= n; ++m)
    if (!reach[m]) return false;
  return true;
}

int parity_popcount(unsigned long n) {
  int ones = 0;
  for (; n > 0; n >>= 1) ones += n & 1;
  return ones;
}

}  // namespace

TEST_CASE("membership worked examples") {
  CHECK(subset_sum_practical(6));    // oracle first
  CHECK(!subset_sum_practical(10));  // 4 is not a sum of distinct divisors of 10
  CHECK(is_member(SequenceId::practical, Int(6)));
  CHECK(!is_member(SequenceId::practical, Int(10)));
  CHECK(is_member(SequenceId::odious, Int(7)));
  CHECK(is_member(SequenceId::hardy_ramanujan, Int(12)));
  CHECK(is_member(SequenceId::jordan_polya, Int(48)));  // 48 = 2! * 4!
  CHECK(!is_member(SequenceId::half_heavy, Int(6)));    // 6 = 2 * 3 and 2 < 3
  CHECK(is_member(SequenceId::fibbinary, Int(9)));      // 1001 has no adjacent bits
  CHECK(!is_member(SequenceId::moser_doubled, Int(9)));
}

TEST_CASE("membership of zero and negatives is false everywhere") {
  for (SequenceId s : kAllSequences) {
    CHECK(!is_member(s, Int(0)));
    CHECK(!is_member(s, Int(-4)));
  }
}

TEST_CASE("practical membership matches the subset-sum definition up to 500") {
  for (unsigned long n = 1; n <= 500; ++n)
    CHECK(is_member(SequenceId::practical, Int(n)) == subset_sum_practical(n));
}

TEST_CASE("practical membership decides huge structured inputs") {
  // 2^200 * 3^50: the running divisor sum dwarfs every candidate prime
  Int n = (Int(1) << 200);
  Int p3;
  mpz_ui_pow_ui(p3.get_mpz_t(), 3, 50);
  CHECK(is_member(SequenceId::practical, n * p3));
  // odd numbers above 1 are never practical
  CHECK(!is_member(SequenceId::practical, Int(99991)));
}

TEST_CASE("practical membership can be undecidable within budget") {
  // sigma(2^10) = 2047 keeps the candidate bound alive past a tight budget
  // while the hidden primes sit out of reach
  Int n = (Int(1) << 10) * Int(1000003) * Int(1000033);
  Budget tight;
  tight.factor = 1000;
  try {
    is_member(SequenceId::practical, n, tight);
    FAIL("expected MembershipUndecidable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::membership_undecidable);
  }
  // the default budget walks far enough to rule the same number out
  CHECK(!is_member(SequenceId::practical, n));
  // sigma(4) = 7 rejects a large semiprime immediately, no budget involved
  CHECK(!is_member(SequenceId::practical, Int(4) * Int(1000003) * Int(1000033), tight));
  // and a tower of small factors passes without ever factoring the tail
  Int p3;
  mpz_ui_pow_ui(p3.get_mpz_t(), 3, 50);
  CHECK(is_member(SequenceId::practical, (Int(1) << 200) * p3, tight));
}

TEST_CASE("hardy_ramanujan exponent test needs consecutive nonincreasing primes") {
  CHECK(is_member(SequenceId::hardy_ramanujan, Int(1)));
  CHECK(is_member(SequenceId::hardy_ramanujan, Int(360)));   // 2^3 3^2 5
  CHECK(!is_member(SequenceId::hardy_ramanujan, Int(10)));   // skips 3
  CHECK(!is_member(SequenceId::hardy_ramanujan, Int(54)));   // exponents 1,3 increase
  CHECK(!is_member(SequenceId::hardy_ramanujan, Int(9)));    // no factor 2
  CHECK(is_member(SequenceId::hardy_ramanujan, Int(2310)));  // 2*3*5*7*11
}

TEST_CASE("min_element per sequence") {
  CHECK(min_element(SequenceId::practical) == 1);
  CHECK(min_element(SequenceId::evil) == 3);
  CHECK(min_element(SequenceId::odious) == 1);
  for (SequenceId s : kAllSequences) {
    Int m = min_element(s);
    CHECK(is_member(s, m));
    for (Int n = 1; n < m; ++n) CHECK(!is_member(s, n));
  }
}

TEST_CASE("enumerate_ascending worked examples") {
  using V = std::vector<Int>;
  CHECK(enumerate_ascending(SequenceId::practical, Int(30)) ==
        V{1, 2, 4, 6, 8, 12, 16, 18, 20, 24, 28, 30});
  // 9 = 1001 belongs: the adjacency test is on pairs of consecutive bits
  CHECK(enumerate_ascending(SequenceId::fibbinary, Int(10)) == V{1, 2, 4, 5, 8, 9, 10});
  CHECK(enumerate_ascending(SequenceId::moser_doubled, Int(10)) == V{1, 2, 4, 5, 8, 10});
  CHECK(enumerate_ascending(SequenceId::evil, Int(6)) == V{3, 5, 6});
  CHECK(enumerate_ascending(SequenceId::half_heavy, Int(16)) == V{1, 2, 4, 8, 12, 16});
}

TEST_CASE("enumeration agrees with the brute-force oracle up to 2000") {
  for (SequenceId s : kAllSequences)
    CHECK(enumerate_ascending(s, Int(2000)) == oracle_members(s, 2000));
}

TEST_CASE("doubling closure up to 10^4") {
  for (SequenceId s : kAllSequences)
    for (const Int& n : enumerate_ascending(s, Int(10'000)))
      CHECK(is_member(s, n * 2));
}

TEST_CASE("productive multiplier worked examples") {
  CHECK(productive_multiplier(SequenceId::odious, Int(3)) == 7);
  CHECK(productive_multiplier(SequenceId::evil, Int(1)) == 3);
  CHECK(productive_multiplier(SequenceId::jordan_polya, Int(5)) == 24);
  CHECK(productive_multiplier(SequenceId::practical, Int(7)) == 8);
  CHECK(productive_multiplier(SequenceId::half_heavy, Int(3)) == 4);
}

TEST_CASE("members get multiplier 1") {
  for (SequenceId s : kAllSequences)
    for (const Int& n : enumerate_ascending(s, Int(200)))
      CHECK(productive_multiplier(s, n) == 1);
}

TEST_CASE("productivity: r*n is always a member, n <= 2000") {
  for (SequenceId s : kAllSequences) {
    for (unsigned long n = 1; n <= 2000; ++n) {
      Int r = productive_multiplier(s, Int(n));
      CHECK(r >= 1);
      CHECK(is_member(s, r * n));
    }
  }
}

TEST_CASE("odious multipliers are minimal (A178757)") {
  for (unsigned long n = 1; n <= 2000; ++n) {
    unsigned long expect = 1;
    while (parity_popcount(expect * n) % 2 == 0) ++expect;  // independent scan
    CHECK(productive_multiplier(SequenceId::odious, Int(n)) == expect);
  }
}

TEST_CASE("evil closed form doubles the popcount") {
  for (unsigned long n = 1; n <= 10'000; ++n) {
    unsigned long K = floor_log2(Int(n)) + 1;
    Int shifted = (Int(n) << K) + n;
    CHECK(popcount(shifted) == 2 * popcount(Int(n)));
    CHECK(popcount(shifted) % 2 == 0);
  }
}

TEST_CASE("hardy_ramanujan members are exactly the primorial products up to 10^4") {
  auto primorial_products = oracle_members(SequenceId::hardy_ramanujan, 10'000);
  auto enumerated = enumerate_ascending(SequenceId::hardy_ramanujan, Int(10'000));
  CHECK(primorial_products == enumerated);
}

TEST_CASE("moser_doubled pigeonhole product is 4^i * (4^d - 1)/3") {
  for (unsigned long n : {3ul, 7ul, 9ul, 11ul, 13ul, 100ul, 999ul, 1023ul}) {
    if (is_member(SequenceId::moser_doubled, Int(n))) continue;
    Int r = productive_multiplier(SequenceId::moser_doubled, Int(n));
    Int prod = r * n;
    auto bits = bit_positions(prod);
    REQUIRE(!bits.empty());
    // a run of bits spaced exactly two apart, starting at an even position
    CHECK(bits.front() % 2 == 0);
    for (std::size_t i = 1; i < bits.size(); ++i) CHECK(bits[i] == bits[i - 1] + 2);
  }
}

TEST_CASE("jordan_polya memo table tolerates concurrent queries") {
  std::vector<std::thread> workers;
  std::atomic<int> members{0};
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&members, t] {
      for (unsigned long n = 1 + t; n <= 4000; n += 4)
        if (is_member(SequenceId::jordan_polya, Int(n))) ++members;
    });
  for (auto& w : workers) w.join();
  CHECK(members.load() == static_cast<int>(oracle_members(SequenceId::jordan_polya, 4000).size()));
}

TEST_CASE("fibbinary multiplier search stays within budget on small inputs") {
  for (unsigned long n = 1; n <= 300; ++n) {
    Int r = productive_multiplier(SequenceId::fibbinary, Int(n));
    CHECK(is_member(SequenceId::fibbinary, r * n));
  }
}

TEST_CASE("odious search reports an exhausted budget") {
  Budget tiny;
  tiny.search = 5;  // minimal multiplier for 3 is 7
  try {
    productive_multiplier(SequenceId::odious, Int(3), tiny);
    FAIL("expected SearchBudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::search_budget_exceeded);
  }
}

TEST_CASE("fibbinary falls back to the pigeonhole product when the search is exhausted") {
  Budget tiny;
  tiny.search = 1;
  Int r = productive_multiplier(SequenceId::fibbinary, Int(7), tiny);
  CHECK(r == 3);  // (4^3 - 1)/3 = 21 = 10101
  CHECK(is_member(SequenceId::fibbinary, r * 7));
  CHECK(is_member(SequenceId::moser_doubled, r * 7));
}

TEST_CASE("sequence names resolve by name and OEIS id") {
  CHECK(sequence_from_name("practical") == SequenceId::practical);
  CHECK(sequence_from_name("A005153") == SequenceId::practical);
  CHECK(sequence_from_name("a116882") == SequenceId::half_heavy);
  CHECK(sequence_from_name("moser_doubled") == SequenceId::moser_doubled);
  CHECK(!sequence_from_name("no_such_thing"));
}
