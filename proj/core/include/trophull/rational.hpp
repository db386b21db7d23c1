#pragma once

/**
 * Exact rational scalars.
 *
 * Every geometric and combinatorial predicate in this library is an exact
 * equality or strict inequality over the rationals, so all core arithmetic
 * runs on GMP-backed rationals; floating point never enters a decision.
 */

#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace trop {

using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Parse "p", "-p" or "p/q" into a canonical (reduced, positive-denominator)
/// rational. Throws InputError on malformed text or zero denominator.
Rat parse_rat(const std::string& text);

/// Canonical textual form: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& q);

/// Least common multiple of the denominators of a list of rationals (>= 1).
BigInt lcm_denominators(const std::vector<Rat>& values);

BigInt factorial_big(unsigned n);
BigInt binomial_big(unsigned n, unsigned k);

}  // namespace trop
