#include "egypt/expander.hpp"

#include <algorithm>
#include <sstream>

#include "egypt/bounds.hpp"

namespace egypt {

namespace {

Rational sum_of_reciprocals(const std::vector<Int>& dens, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return Rational::unit(dens[lo]);
  std::size_t mid = lo + (hi - lo) / 2;
  return sum_of_reciprocals(dens, lo, mid) + sum_of_reciprocals(dens, mid, hi);
}

[[noreturn]] void assertion_failed(const std::string& what, const ExpansionTrace& t) {
  raise(Errc::internal_assertion_failed,
        what + " [trace: m=" + t.min_elem.get_str() + " r=" + t.multiplier.get_str() +
            " x=" + t.x.get_str() + " y=" + t.y.get_str() + " k=" + std::to_string(t.k) +
            " a=" + t.quotient.get_str() + " b=" + t.remainder.get_str() +
            " prefix_len=" + std::to_string(t.prefix.size()) + "]");
}

}  // namespace

PrefixSelection select_prefix(SequenceId s, const Rational& q, unsigned long member_budget,
                              const Budget& budget) {
  if (q.sign() <= 0) raise(Errc::precondition_violated, "select_prefix requires q > 0");
  PrefixSelection out;
  // running sum kept as num/den with den the lcm of the members so far;
  // skipping per-step normalization keeps the long prefixes cheap
  Int num = 0, den = 1;
  const Int qnum = q.num(), qden = q.den();
  Int n = 0, g, scale, den_over_g, next_num, next_den;
  while (true) {
    do { ++n; } while (!is_member(s, n, budget));
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(scale.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_over_g.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
    next_den = den * scale;
    next_num = num * scale + den_over_g;
    int cmp_q = cmp(next_num * qden, qnum * next_den);
    if (cmp_q > 0) break;  // n is the first excluded member
    if (out.prefix.size() >= member_budget) {
      mpq_class approx(num, den);
      approx.canonicalize();
      std::ostringstream msg;
      msg << "prefix did not reach q = " << q.str() << " within " << member_budget
          << " members (sum so far ~" << approx.get_d() << ", last member " << n.get_str()
          << ")";
      raise(Errc::prefix_budget_exceeded, msg.str());
    }
    num = std::move(next_num);
    den = std::move(next_den);
    out.prefix.push_back(n);
    if (cmp_q == 0) break;  // exact hit
  }
  out.residual = q - Rational(num, den);
  return out;
}

std::pair<Int, Int> oddify(const Int& x, const Int& y) {
  if (y < 2) raise(Errc::precondition_violated, "oddify requires y >= 2");
  if (gcd(x, y) != 1) raise(Errc::precondition_violated, "oddify requires gcd(x, y) = 1");
  if (popcount(y) == 1) return {x * 3, y * 3};
  return {x, y};
}

SplitResult binary_remainder_split(const Int& m, const Int& x, const Int& y) {
  if (y < 2) raise(Errc::precondition_violated, "binary_remainder_split requires y >= 2");
  Int mx = m * x;
  if (mx >= y) raise(Errc::precondition_violated, "binary_remainder_split requires x/y < 1/m");
  SplitResult res;
  res.k = floor_log2(y);
  Int lhs = mx << res.k;
  mpz_fdiv_qr(res.quotient.get_mpz_t(), res.remainder.get_mpz_t(), lhs.get_mpz_t(),
              y.get_mpz_t());
  res.a_bits = bit_positions(res.quotient);
  res.b_bits = bit_positions(res.remainder);
  return res;
}

std::pair<Expansion, ExpansionTrace> expand(SequenceId s, const Rational& q,
                                            const ExpandOptions& opts) {
  if (q.sign() <= 0) raise(Errc::precondition_violated, "expand requires q > 0");
  if (descriptor(s).convergence == ConvergenceClass::convergent) {
    FeasibilityVerdict v = feasibility(s, q, opts.feasibility_members, opts.budget);
    if (v.verdict == FeasibilityVerdict::Kind::infeasible)
      raise(Errc::infeasible_target,
            "q = " + q.str() + " reaches the reciprocal-sum upper bound " +
                v.certificate->str() + " of " + descriptor(s).name);
  }

  ExpansionTrace trace;
  PrefixSelection sel = select_prefix(s, q, opts.prefix_budget, opts.budget);
  trace.prefix = sel.prefix;
  trace.residual = sel.residual;
  trace.min_elem = min_element(s);

  Expansion exp;
  exp.denominators = sel.prefix;

  if (!sel.residual.is_zero()) {
    auto [x2, y2] = oddify(sel.residual.num(), sel.residual.den());
    const Int& m = trace.min_elem;
    auto guard_size = [&](const Int& y) {
      unsigned long bits = floor_log2(y) + 1;
      if (bits > opts.split_bits_budget)
        raise(Errc::expansion_too_large,
              "scaled denominator has " + std::to_string(bits) + " bits; the split would emit ~" +
                  std::to_string(bits) + " denominators of that size (budget " +
                  std::to_string(opts.split_bits_budget) + " bits)");
    };
    guard_size(y2);
    trace.multiplier = productive_multiplier(s, m * y2, opts.budget);
    trace.x = trace.multiplier * x2;
    trace.y = trace.multiplier * y2;
    guard_size(trace.y);

    SplitResult split = binary_remainder_split(m, trace.x, trace.y);
    trace.k = split.k;
    trace.quotient = split.quotient;
    trace.remainder = split.remainder;
    trace.a_bits = split.a_bits;
    trace.b_bits = split.b_bits;

    Int my = m * trace.y;
    for (unsigned long e : split.a_bits) exp.denominators.push_back(m << (split.k - e));
    for (unsigned long e : split.b_bits) exp.denominators.push_back(my << (split.k - e));

    // identities promised by the construction
    if (((m * trace.x) << trace.k) != trace.quotient * trace.y + trace.remainder ||
        trace.quotient >= trace.y || trace.remainder >= trace.y)
      assertion_failed("division identity violated", trace);
    for (unsigned long e : split.a_bits)
      if (e > split.k) assertion_failed("quotient exponent above k", trace);
    for (unsigned long e : split.b_bits)
      if (e > split.k) assertion_failed("remainder exponent above k", trace);
    if (popcount(trace.y) == 1) assertion_failed("y lost its odd prime factor", trace);
    if (!is_member(s, my, opts.budget)) assertion_failed("m*y is not a member", trace);
  }

  std::sort(exp.denominators.begin(), exp.denominators.end());
  for (std::size_t i = 1; i < exp.denominators.size(); ++i)
    if (exp.denominators[i - 1] == exp.denominators[i])
      assertion_failed("duplicate denominator " + exp.denominators[i].get_str(), trace);
  for (const Int& d : exp.denominators)
    if (!is_member(s, d, opts.budget))
      assertion_failed("denominator " + d.get_str() + " is not a member", trace);
  if (!exp.denominators.empty() &&
      sum_of_reciprocals(exp.denominators, 0, exp.denominators.size()) != q)
    assertion_failed("reciprocal sum differs from q", trace);
  if (exp.denominators.empty()) assertion_failed("empty expansion", trace);

  return {std::move(exp), std::move(trace)};
}

}  // namespace egypt
