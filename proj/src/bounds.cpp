#include "egypt/bounds.hpp"

namespace egypt {

namespace {

// Fibonacci F(1) = F(2) = 1; the count of fibbinary numbers with exactly b
// bits is F(b).
Int fibonacci(unsigned long n) {
  Int f;
  mpz_fib_ui(f.get_mpz_t(), n);
  return f;
}

Rational hardy_ramanujan_bound() {
  // members biject with multisets of primorials P, so the total equals
  // prod 1/(1 - 1/P); truncate at P <= 10^6 and round the tail factor up:
  // log of the missing factors is at most sum 2/P <= 4/P_next.
  Rational product(Int(1));
  Int primorial = 1, p = 1;
  while (true) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    primorial *= p;
    if (primorial > 1'000'000) break;
    product = product * Rational(primorial, primorial - 1);
  }
  Rational tau(Int(4), primorial);
  return product / (Rational(Int(1)) - tau);
}

Rational jordan_polya_bound() {
  // every member is a product of factorials (not uniquely, so the product
  // overcounts): total <= prod_{m>=2} 1/(1 - 1/m!), truncated at 12! with
  // the same rounded-up tail treatment. Factorial ratios beyond 12! are
  // at least 14.
  Rational product(Int(1));
  Int fac = 1;
  for (unsigned long m = 2; m <= 12; ++m) {
    mpz_fac_ui(fac.get_mpz_t(), m);
    product = product * Rational(fac, fac - 1);
  }
  mpz_fac_ui(fac.get_mpz_t(), 13);
  Rational tau = Rational(Int(2), fac) * Rational(Int(14), Int(13));
  return product / (Rational(Int(1)) - tau);
}

Rational fibbinary_bound() {
  // F(b) members with b bits, each at least 2^(b-1). Beyond b = 64 the
  // terms shrink by at least 13/16 per step (F(b+1) <= (13/8) F(b)).
  Rational sum(Int(0));
  for (unsigned long b = 1; b <= 64; ++b)
    sum += Rational(fibonacci(b), Int(1) << (b - 1));
  sum += Rational(Int(16) * fibonacci(65), Int(3) * (Int(1) << 64));
  return sum;
}

Rational moser_doubled_bound() {
  // exactly 2^floor((b-1)/2) members with b bits (alternating between the
  // base sequence and its doubles); the b > 64 tail sums to 3 * 2^-32.
  Rational sum(Int(0));
  for (unsigned long b = 1; b <= 64; ++b)
    sum += Rational(Int(1) << ((b - 1) / 2), Int(1) << (b - 1));
  sum += Rational(Int(3), Int(1) << 32);
  return sum;
}

unsigned long half_heavy_bit_count(unsigned long b) {
  // members 2^k * l (l odd <= 2^k) with exactly b bits
  unsigned long count = 0;
  for (unsigned long k = b / 2; k < b; ++k) {
    Int lo = Int(1) << (b - 1 - k);
    if (lo < 1) lo = 1;
    Int hi = (Int(1) << (b - k)) - 1;
    Int cap = Int(1) << k;
    if (cap < hi) hi = cap;
    if (lo > hi) continue;
    Int odds = (hi + 1) / 2 - lo / 2;
    count += odds.get_ui();
  }
  return count;
}

Rational half_heavy_bound() {
  // exact per-bit-length counts up to 64 bits; the tail uses
  // count(b) <= 2^floor((b-1)/2) + (b+1)/2.
  Rational sum(Int(0));
  for (unsigned long b = 1; b <= 64; ++b)
    sum += Rational(Int(half_heavy_bit_count(b)), Int(1) << (b - 1));
  sum += Rational(Int(3), Int(1) << 32);
  sum += Rational(Int(134), Int(1) << 65);
  return sum;
}

}  // namespace

const char* verdict_name(FeasibilityVerdict::Kind k) {
  switch (k) {
    case FeasibilityVerdict::Kind::feasible: return "feasible";
    case FeasibilityVerdict::Kind::infeasible: return "infeasible";
    case FeasibilityVerdict::Kind::unknown: return "unknown";
  }
  return "?";
}

Rational partial_reciprocal_sum(SequenceId s, unsigned long count, const Budget& budget) {
  Rational sum(Int(0));
  Int n = 0;
  for (unsigned long found = 0; found < count; ++found) {
    do { ++n; } while (!is_member(s, n, budget));
    sum += Rational::unit(n);
  }
  return sum;
}

std::optional<Rational> total_sum_upper_bound(SequenceId s) {
  switch (s) {
    case SequenceId::practical:
    case SequenceId::odious:
    case SequenceId::evil: return std::nullopt;
    case SequenceId::hardy_ramanujan: return hardy_ramanujan_bound();
    case SequenceId::jordan_polya: return jordan_polya_bound();
    case SequenceId::fibbinary: return fibbinary_bound();
    case SequenceId::moser_doubled: return moser_doubled_bound();
    case SequenceId::half_heavy: return half_heavy_bound();
  }
  return std::nullopt;
}

FeasibilityVerdict feasibility(SequenceId s, const Rational& q, unsigned long enumeration_budget,
                               const Budget& budget) {
  if (q.sign() <= 0) raise(Errc::precondition_violated, "feasibility requires q > 0");
  FeasibilityVerdict out;
  if (descriptor(s).convergence == ConvergenceClass::divergent) {
    out.verdict = FeasibilityVerdict::Kind::feasible;
    out.diagnostics = std::string(descriptor(s).name) +
                      " has a divergent reciprocal sum; every finite target lies below it";
    return out;
  }
  Rational bound = *total_sum_upper_bound(s);
  if (q >= bound) {
    out.verdict = FeasibilityVerdict::Kind::infeasible;
    out.certificate = bound;
    out.diagnostics = "q >= certified upper bound " + bound.str();
    return out;
  }
  Rational sum(Int(0));
  Int n = 0;
  const Int scan_cap = Int(1) << 22;  // keeps sparse sequences from crawling
  for (unsigned long found = 0; found < enumeration_budget; ++found) {
    do {
      ++n;
      if (n > scan_cap) goto exhausted;
    } while (!is_member(s, n, budget));
    sum += Rational::unit(n);
    if (sum > q) {
      out.verdict = FeasibilityVerdict::Kind::feasible;
      out.certificate = sum;
      out.diagnostics = "partial sum of the first " + std::to_string(found + 1) +
                        " reciprocals exceeds q";
      return out;
    }
  }
exhausted:
  out.verdict = FeasibilityVerdict::Kind::unknown;
  out.diagnostics = "q lies in the gap [" + sum.str() + ", " + bound.str() +
                    ") between the largest computed partial sum and the upper bound";
  return out;
}

}  // namespace egypt
