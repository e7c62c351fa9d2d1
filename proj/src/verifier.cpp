#include "egypt/verifier.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

namespace egypt {

namespace {

// The oracle routines below re-derive each definition from scratch; none of
// them call into the sequences module, and bit counting goes through digit
// strings rather than mpz_popcount.

int string_popcount(unsigned long n) {
  std::string bits;
  while (n > 0) {
    bits.push_back(char('0' + (n & 1)));
    n >>= 1;
  }
  int ones = 0;
  for (char c : bits)
    if (c == '1') ++ones;
  return ones;
}

std::string binary_string(unsigned long n) {
  std::string bits;
  while (n > 0) {
    bits.push_back(char('0' + (n & 1)));
    n >>= 1;
  }
  std::reverse(bits.begin(), bits.end());
  return bits;
}

std::vector<unsigned long> divisors_of(unsigned long n) {
  std::vector<unsigned long> small, large;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// subset-sum dynamic program: every m <= n must be a sum of distinct divisors
bool oracle_practical(unsigned long n) {
  if (n == 1) return true;
  std::vector<unsigned long> divs = divisors_of(n);
  std::size_t words = n / 64 + 1;
  std::vector<std::uint64_t> dp(words, 0);
  dp[0] = 1;  // empty sum
  for (unsigned long d : divs) {
    if (d > n) continue;
    std::size_t word_shift = d / 64, bit_shift = d % 64;
    for (std::size_t w = words; w-- > word_shift;) {
      std::uint64_t v = dp[w - word_shift] << bit_shift;
      if (bit_shift != 0 && w > word_shift) v |= dp[w - word_shift - 1] >> (64 - bit_shift);
      dp[w] |= v;
    }
  }
  for (unsigned long m = 1; m <= n; ++m)
    if (!(dp[m / 64] >> (m % 64) & 1)) return false;
  return true;
}

std::vector<Int> oracle_products(const std::vector<unsigned long>& generators,
                                 unsigned long limit) {
  // breadth-first closure of {1} under multiplication by the generators
  std::set<unsigned long> seen{1};
  std::vector<unsigned long> frontier{1};
  while (!frontier.empty()) {
    std::vector<unsigned long> next;
    for (unsigned long v : frontier)
      for (unsigned long g : generators) {
        if (v > limit / g) continue;
        unsigned long w = v * g;
        if (seen.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  std::vector<Int> out;
  for (unsigned long v : seen) out.push_back(Int(v));
  return out;
}

std::vector<Int> oracle_moser(unsigned long limit) {
  // sums of distinct powers of four, then their doubles
  std::vector<unsigned long> sums{0};
  for (unsigned long p = 1; p <= limit; p *= 4) {
    std::size_t count = sums.size();
    for (std::size_t i = 0; i < count; ++i)
      if (sums[i] + p <= limit) sums.push_back(sums[i] + p);
  }
  std::set<unsigned long> all;
  for (unsigned long v : sums)
    if (v >= 1) {
      all.insert(v);
      if (2 * v <= limit) all.insert(2 * v);
    }
  std::vector<Int> out;
  for (unsigned long v : all) out.push_back(Int(v));
  return out;
}

std::vector<Int> oracle_half_heavy(unsigned long limit) {
  std::set<unsigned long> all;
  for (unsigned long pow2 = 1; pow2 <= limit; pow2 *= 2) {
    for (unsigned long l = 1; l <= pow2 && l <= limit / pow2; l += 2) all.insert(pow2 * l);
    if (pow2 > limit / 2) break;
  }
  std::vector<Int> out;
  for (unsigned long v : all) out.push_back(Int(v));
  return out;
}

Rational reciprocal_sum(const std::vector<Int>& dens, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return Rational::unit(dens[lo]);
  std::size_t mid = lo + (hi - lo) / 2;
  return reciprocal_sum(dens, lo, mid) + reciprocal_sum(dens, mid, hi);
}

}  // namespace

std::vector<Int> oracle_members(SequenceId s, unsigned long limit) {
  if (limit > kOracleLimitCap)
    raise(Errc::limit_too_large, "oracle limit " + std::to_string(limit) + " exceeds 10^5");
  std::vector<Int> out;
  auto scan = [&](auto&& pred) {
    for (unsigned long n = 1; n <= limit; ++n)
      if (pred(n)) out.push_back(Int(n));
  };
  switch (s) {
    case SequenceId::practical:
      scan(oracle_practical);
      return out;
    case SequenceId::odious:
      scan([](unsigned long n) { return string_popcount(n) % 2 == 1; });
      return out;
    case SequenceId::evil:
      scan([](unsigned long n) { return string_popcount(n) % 2 == 0; });
      return out;
    case SequenceId::hardy_ramanujan: {
      std::vector<unsigned long> primorials;
      unsigned long q = 1;
      for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul}) {
        if (q > limit / p) break;
        q *= p;
        primorials.push_back(q);
      }
      return oracle_products(primorials, limit);
    }
    case SequenceId::jordan_polya: {
      std::vector<unsigned long> factorials;
      unsigned long f = 1;
      for (unsigned long m = 2; f <= limit / m; ++m) {
        f *= m;
        factorials.push_back(f);
      }
      return oracle_products(factorials, limit);
    }
    case SequenceId::fibbinary:
      scan([](unsigned long n) { return binary_string(n).find("11") == std::string::npos; });
      return out;
    case SequenceId::moser_doubled:
      return oracle_moser(limit);
    case SequenceId::half_heavy:
      return oracle_half_heavy(limit);
  }
  raise(Errc::precondition_violated, "unknown sequence id");
}

VerificationReport verify_expansion(SequenceId s, const Rational& q,
                                    const std::vector<Int>& denominators, const Budget& budget,
                                    unsigned long oracle_limit) {
  VerificationReport report;
  if (denominators.empty()) {
    report.violations.emplace_back(Int(0), "empty denominator list");
    return report;
  }
  for (const Int& d : denominators)
    if (sgn(d) <= 0) {
      report.violations.emplace_back(d, "nonpositive denominator");
      return report;
    }

  report.sum_ok = reciprocal_sum(denominators, 0, denominators.size()) == q;
  if (!report.sum_ok)
    report.violations.emplace_back(Int(0), "reciprocal sum differs from q = " + q.str());

  std::vector<Int> sorted = denominators;
  std::sort(sorted.begin(), sorted.end());
  report.distinct_ok = true;
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i - 1] == sorted[i]) {
      report.distinct_ok = false;
      report.violations.emplace_back(sorted[i], "duplicate denominator");
    }

  std::optional<std::vector<Int>> oracle;
  const Int oracle_cap(std::min(oracle_limit, kOracleLimitCap));
  for (const Int& d : denominators) {
    bool member = false;
    try {
      member = is_member(s, d, budget);
    } catch (const Error& e) {
      if (e.code() != Errc::membership_undecidable) throw;
      report.membership = VerificationReport::Membership::some_undecidable;
      report.violations.emplace_back(d, "membership undecidable within budget");
      continue;
    }
    if (!member) {
      report.violations.emplace_back(d, "not a member of " + std::string(descriptor(s).name));
      continue;
    }
    if (d <= oracle_cap) {
      if (!oracle) oracle = oracle_members(s, oracle_cap.get_ui());
      if (!std::binary_search(oracle->begin(), oracle->end(), d))
        report.violations.emplace_back(d, "fails the brute-force oracle");
    }
  }
  return report;
}

std::vector<BFileEntry> parse_bfile(std::istream& in) {
  std::vector<BFileEntry> entries;
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string idx_tok, val_tok, extra;
    if (!(ls >> idx_tok)) continue;  // blank or comment-only line
    if (!(ls >> val_tok) || (ls >> extra))
      raise(Errc::parse_error, "line " + std::to_string(line_no) + ": expected 'index value'");
    long long idx = 0;
    try {
      idx = std::stoll(idx_tok);
    } catch (...) {
      raise(Errc::parse_error, "line " + std::to_string(line_no) + ": bad index '" + idx_tok + "'");
    }
    Int value;
    if (mpz_set_str(value.get_mpz_t(), val_tok.c_str(), 10) != 0)
      raise(Errc::parse_error, "line " + std::to_string(line_no) + ": bad value '" + val_tok + "'");
    if (!entries.empty() && idx <= entries.back().index)
      raise(Errc::parse_error, "line " + std::to_string(line_no) + ": index not ascending");
    entries.push_back({idx, value});
  }
  return entries;
}

std::optional<long long> compare_bfile(SequenceId s, const std::vector<BFileEntry>& entries,
                                       const Int& value_cap, const Budget& budget) {
  std::size_t start = 0;
  while (start < entries.size() && sgn(entries[start].value) == 0) ++start;

  Int max_value = 0;
  for (std::size_t i = start; i < entries.size(); ++i)
    if (entries[i].value > max_value) max_value = entries[i].value;
  Int limit = std::min(max_value, value_cap);
  if (sgn(limit) <= 0) return std::nullopt;  // nothing comparable

  std::vector<Int> members = enumerate_ascending(s, limit, budget);
  std::size_t mi = 0;
  for (std::size_t i = start; i < entries.size(); ++i) {
    const Int& v = entries[i].value;
    if (v > limit) break;  // out of comparison range
    if (mi >= members.size() || members[mi] != v) return entries[i].index;
    ++mi;
  }
  return std::nullopt;
}

}  // namespace egypt
