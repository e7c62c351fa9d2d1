#include "egypt/sequences.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <mutex>
#include <unordered_map>

namespace egypt {

namespace {

const SequenceDescriptor kDescriptors[] = {
    {SequenceId::practical, "practical", "A005153", 1, ConvergenceClass::divergent,
     MultiplierStrategy::closed_form},
    {SequenceId::odious, "odious", "A000069", 1, ConvergenceClass::divergent,
     MultiplierStrategy::ascending_search},
    {SequenceId::evil, "evil", "A001969", 3, ConvergenceClass::divergent,
     MultiplierStrategy::closed_form},
    {SequenceId::hardy_ramanujan, "hardy_ramanujan", "A025487", 1, ConvergenceClass::convergent,
     MultiplierStrategy::closed_form},
    {SequenceId::jordan_polya, "jordan_polya", "A001013", 1, ConvergenceClass::convergent,
     MultiplierStrategy::closed_form},
    {SequenceId::fibbinary, "fibbinary", "A003714", 1, ConvergenceClass::convergent,
     MultiplierStrategy::ascending_search},
    {SequenceId::moser_doubled, "moser_doubled", "A126684", 1, ConvergenceClass::convergent,
     MultiplierStrategy::pigeonhole},
    {SequenceId::half_heavy, "half_heavy", "A116882", 1, ConvergenceClass::convergent,
     MultiplierStrategy::closed_form},
};

// --- practical numbers ------------------------------------------------------
//
// Stewart's criterion, fused with the trial division that discovers the
// primes: n > 1 is practical iff n is even and each prime p of n (ascending)
// satisfies p <= 1 + sigma(part of n below p). The running sigma bounds the
// next admissible prime, so the scan almost always decides well before the
// factorization budget; once sigma >= remaining cofactor, every leftover
// prime is admissible and the scan can stop early.

bool practical_small(unsigned long n) {  // requires n even, n > 1, n < 2^32
  int e2 = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++e2;
  }
  unsigned long sig = (1ul << (e2 + 1)) - 1;
  for (unsigned long c = 3; n != 1; c += 2) {
    if (sig >= n) return true;
    if (c * c > n) return n <= sig + 1;
    if (c > sig + 1) return false;
    if (n % c == 0) {
      unsigned long pe = 1;
      while (n % c == 0) {
        n /= c;
        pe *= c;
      }
      sig *= (pe * c - 1) / (c - 1);
    }
  }
  return true;
}

bool is_practical(const Int& n, unsigned long factor_budget) {
  if (n == 1) return true;
  if (mpz_odd_p(n.get_mpz_t())) return false;
  if (n.fits_ulong_p() && n.get_ui() < (1ul << 32)) return practical_small(n.get_ui());

  unsigned long e2 = mpz_scan1(n.get_mpz_t(), 0);
  Int rest = n >> e2;
  Int sig = (Int(1) << (e2 + 1)) - 1;
  Int csq;
  for (unsigned long c = 3; rest != 1; c += 2) {
    if (sig >= rest) return true;
    csq = c;
    csq *= c;
    if (csq > rest) return rest <= sig + 1;
    if (mpz_cmp_ui(sig.get_mpz_t(), c - 1) < 0) return false;
    if (c > factor_budget)
      raise(Errc::membership_undecidable,
            "practical test exceeded the factorization budget at candidate " + std::to_string(c));
    if (mpz_divisible_ui_p(rest.get_mpz_t(), c)) {
      Int pe = 1;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), c)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), c);
        pe *= c;
      }
      sig *= (pe * c - 1) / (c - 1);
    }
  }
  return true;
}

// --- Hardy-Ramanujan numbers ------------------------------------------------
//
// Exponents over consecutive primes 2, 3, 5, ... must be nonincreasing with
// no prime skipped. Division by consecutive primes decides this without a
// general factorization: a skipped prime shows up as a stuck cofactor.

bool is_hardy_ramanujan(const Int& n) {
  if (n == 1) return true;
  Int rest = n;
  Int p = 2;
  unsigned long prev = ULONG_MAX;
  while (rest != 1) {
    unsigned long e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
      ++e;
    }
    if (e == 0 || e > prev) return false;
    prev = e;
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  return true;
}

// --- Jordan-Polya numbers ----------------------------------------------------

struct JordanPolyaCache {
  std::mutex mu;
  std::vector<Int> factorials{Int(2)};  // 2!, 3!, ...
  std::map<Int, bool> memo;

  void grow_to(const Int& n) {
    while (factorials.back() <= n) {
      Int next = factorials.back() * static_cast<unsigned long>(factorials.size() + 2);
      factorials.push_back(next);
    }
  }
};

JordanPolyaCache& jp_cache() {
  static JordanPolyaCache cache;
  return cache;
}

bool jp_search(const Int& n, JordanPolyaCache& c) {
  if (n == 1) return true;
  if (auto it = c.memo.find(n); it != c.memo.end()) return it->second;
  auto hi = std::upper_bound(c.factorials.begin(), c.factorials.end(), n);
  bool ok = false;
  Int q;
  for (auto it = std::make_reverse_iterator(hi); it != c.factorials.rend(); ++it) {
    if (mpz_divisible_p(n.get_mpz_t(), it->get_mpz_t())) {
      mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), it->get_mpz_t());
      if (jp_search(q, c)) {
        ok = true;
        break;
      }
    }
  }
  c.memo.emplace(n, ok);
  return ok;
}

bool is_jordan_polya(const Int& n) {
  if (n == 1) return true;
  auto& c = jp_cache();
  std::lock_guard lock(c.mu);
  c.grow_to(n);
  if (c.memo.size() > 2'000'000) c.memo.clear();
  return jp_search(n, c);
}

// --- bit-pattern sequences ---------------------------------------------------

bool is_fibbinary(const Int& n) {
  Int shifted = n >> 1;
  shifted &= n;
  return sgn(shifted) == 0;
}

bool is_moser_doubled(const Int& n) {
  mp_bitcnt_t pos = mpz_scan1(n.get_mpz_t(), 0);
  unsigned long parity = pos & 1;
  while (pos != static_cast<mp_bitcnt_t>(-1)) {
    if ((pos & 1) != parity) return false;
    pos = mpz_scan1(n.get_mpz_t(), pos + 1);
  }
  return true;
}

bool is_half_heavy(const Int& n) {
  unsigned long k = mpz_scan1(n.get_mpz_t(), 0);
  Int odd_part = n >> k;
  return (Int(1) << k) >= odd_part;
}

// --- multiplier strategies ---------------------------------------------------

Int ascending_search_multiplier(SequenceId s, const Int& n, unsigned long limit) {
  Int prod;
  for (unsigned long r = 1; r <= limit; ++r) {
    prod = n * r;
    bool hit = (s == SequenceId::odious) ? (popcount(prod) % 2 == 1) : is_fibbinary(prod);
    if (hit) return Int(r);
  }
  raise(Errc::search_budget_exceeded,
        std::string(descriptor(s).name) + " multiplier search exhausted r <= " +
            std::to_string(limit));
}

// Pigeonhole over t_i = (4^i - 1)/3 modulo n: two residues collide, and the
// difference 4^i * (4^(j-i) - 1)/3 is a multiple of n whose set bits all sit
// at even positions.
Int moser_pigeonhole_multiple(const Int& n, unsigned long iteration_cap) {
  std::map<Int, unsigned long> first_seen;
  Int t = 0;
  for (unsigned long i = 0;; ++i) {
    auto [it, fresh] = first_seen.emplace(t, i);
    if (!fresh) {
      unsigned long lo = it->second, hi = i;
      Int value = ((Int(1) << (2 * (hi - lo))) - 1) / 3;
      value <<= 2 * lo;
      return value;  // divisible by n by construction
    }
    if (i > iteration_cap)
      raise(Errc::search_budget_exceeded, "moser_doubled pigeonhole exceeded iteration cap");
    t = (4 * t + 1) % n;
  }
}

Int practical_multiplier(const Int& n, const Budget& budget) {
  Factorization f = factorize(n, budget.factor);
  const Int& pmax = f.factors.back().prime;
  return Int(1) << (floor_log2(pmax) + 1);
}

Int hardy_ramanujan_multiplier(const Int& n, const Budget& budget) {
  Factorization f = factorize(n, budget.factor);
  const Int& pmax = f.factors.back().prime;
  if (!pmax.fits_ulong_p() || pmax.get_ui() > 2'000'000)
    raise(Errc::search_budget_exceeded,
          "primorial completion for prime " + pmax.get_str() + " is out of reach");
  // exponent of each consecutive prime p <= pmax, then suffix maxima
  std::vector<Int> primes;
  std::vector<unsigned long> expo;
  Int p = 2;
  while (p <= pmax) {
    primes.push_back(p);
    unsigned long e = 0;
    for (const auto& t : f.factors)
      if (t.prime == p) e = t.exponent;
    expo.push_back(e);
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  Int r = 1, pw;
  unsigned long suffix = 0;
  for (std::size_t i = primes.size(); i-- > 0;) {
    suffix = std::max(suffix, expo[i]);
    mpz_pow_ui(pw.get_mpz_t(), primes[i].get_mpz_t(), suffix - expo[i]);
    r *= pw;
  }
  return r;
}

// Covering product of factorials: p!^e supplies p^e for every prime power
// p^e of n, and extra 2!'s top up the power of two. Reduces to (n-1)! when
// n is prime.
Int jordan_polya_multiplier(const Int& n, const Budget& budget) {
  Factorization f = factorize(n, budget.factor);
  Int cover = 1, fac, pw;
  Int two_deficit = 0;
  for (const auto& t : f.factors) {
    if (t.prime == 2) {
      two_deficit += t.exponent;
      continue;
    }
    if (!t.prime.fits_ulong_p() || t.prime.get_ui() > 200000)
      raise(Errc::search_budget_exceeded,
            "factorial cover for prime " + t.prime.get_str() + " is out of reach");
    unsigned long p = t.prime.get_ui();
    mpz_fac_ui(fac.get_mpz_t(), p);
    mpz_pow_ui(pw.get_mpz_t(), fac.get_mpz_t(), t.exponent);
    cover *= pw;
    // Legendre: v2(p!) = sum floor(p / 2^i)
    unsigned long v2 = 0;
    for (unsigned long q = p / 2; q > 0; q /= 2) v2 += q;
    two_deficit -= Int(v2) * t.exponent;
  }
  if (two_deficit > 0) cover <<= two_deficit.get_ui();
  Int r;
  mpz_divexact(r.get_mpz_t(), cover.get_mpz_t(), n.get_mpz_t());
  return r;
}

Int half_heavy_multiplier(const Int& n) {
  unsigned long k = mpz_scan1(n.get_mpz_t(), 0);
  Int odd_part = n >> k;
  unsigned long ceil_log2 = (odd_part == 1) ? 0 : floor_log2(odd_part) + 1;
  unsigned long t = (ceil_log2 > k) ? ceil_log2 - k : 0;
  return Int(1) << t;
}

}  // namespace

const SequenceDescriptor& descriptor(SequenceId s) {
  return kDescriptors[static_cast<int>(s)];
}

std::optional<SequenceId> sequence_from_name(const std::string& name) {
  for (const auto& d : kDescriptors) {
    if (name == d.name || name == d.oeis_id) return d.id;
    if (name.size() == 7 && name[0] == 'a' && ("A" + name.substr(1)) == d.oeis_id) return d.id;
  }
  return std::nullopt;
}

bool is_member(SequenceId s, const Int& n, const Budget& budget) {
  if (sgn(n) <= 0) return false;
  switch (s) {
    case SequenceId::practical: return is_practical(n, budget.factor);
    case SequenceId::odious: return popcount(n) % 2 == 1;
    case SequenceId::evil: return popcount(n) % 2 == 0;
    case SequenceId::hardy_ramanujan: return is_hardy_ramanujan(n);
    case SequenceId::jordan_polya: return is_jordan_polya(n);
    case SequenceId::fibbinary: return is_fibbinary(n);
    case SequenceId::moser_doubled: return is_moser_doubled(n);
    case SequenceId::half_heavy: return is_half_heavy(n);
  }
  raise(Errc::precondition_violated, "unknown sequence id");
}

Int min_element(SequenceId s) { return Int(descriptor(s).min_element); }

std::vector<Int> enumerate_ascending(SequenceId s, const Int& limit, const Budget& budget) {
  std::vector<Int> out;
  if (sgn(limit) <= 0) raise(Errc::precondition_violated, "enumerate_ascending requires limit >= 1");
  if (!limit.fits_ulong_p()) raise(Errc::limit_too_large, "enumeration limit does not fit a word");
  unsigned long lim = limit.get_ui();
  Int n;
  for (unsigned long i = 1; i <= lim; ++i) {
    n = i;
    if (is_member(s, n, budget)) out.push_back(n);
  }
  return out;
}

Int productive_multiplier(SequenceId s, const Int& n, const Budget& budget) {
  if (sgn(n) <= 0) raise(Errc::precondition_violated, "productive_multiplier requires n >= 1");
  if (is_member(s, n, budget)) return Int(1);
  switch (s) {
    case SequenceId::practical: return practical_multiplier(n, budget);
    case SequenceId::odious: return ascending_search_multiplier(s, n, budget.search);
    case SequenceId::evil: return (Int(1) << (floor_log2(n) + 1)) + 1;
    case SequenceId::hardy_ramanujan: return hardy_ramanujan_multiplier(n, budget);
    case SequenceId::jordan_polya: return jordan_polya_multiplier(n, budget);
    case SequenceId::fibbinary:
      try {
        return ascending_search_multiplier(s, n, budget.search);
      } catch (const Error& e) {
        if (e.code() != Errc::search_budget_exceeded) throw;
        // guaranteed fallback: every moser_doubled number is fibbinary
        Int multiple = moser_pigeonhole_multiple(n, 1ul << 22);
        Int r;
        mpz_divexact(r.get_mpz_t(), multiple.get_mpz_t(), n.get_mpz_t());
        return r;
      }
    case SequenceId::moser_doubled: {
      Int multiple = moser_pigeonhole_multiple(n, 1ul << 22);
      Int r;
      mpz_divexact(r.get_mpz_t(), multiple.get_mpz_t(), n.get_mpz_t());
      return r;
    }
    case SequenceId::half_heavy: return half_heavy_multiplier(n);
  }
  raise(Errc::precondition_violated, "unknown sequence id");
}

}  // namespace egypt
