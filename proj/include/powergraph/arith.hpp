#pragma once

#include <utility>
#include <vector>

#include "powergraph/rational.hpp"

namespace powergraph {

/// One prime power in a factorization.  Exponents are negative for
/// denominator primes of a rational.
struct PrimePower {
  BigInt prime;
  long long exponent;
  bool operator==(const PrimePower& o) const {
    return prime == o.prime && exponent == o.exponent;
  }
};

/// Ordered by strictly increasing prime; no zero exponents.
using Factorization = std::vector<PrimePower>;

/// Factorize a positive integer by trial division.  1 -> [].
/// Throws on n <= 0 ("nonpositive input").
Factorization factorize(const BigInt& n);

/// Signed factorization of a nonzero rational: numerator primes carry
/// positive exponents, denominator primes negative ones.
Factorization factorize(const Rational& x);

/// p-adic valuation of a nonzero rational, e.g. (3/8, 2) -> -3.
/// Throws on x == 0 ("valuation of zero undefined") and on non-prime p.
long long valuation(const Rational& x, const BigInt& p);

/// gcd of the absolute values; [0, 0] -> 0.  Throws on an empty list.
BigInt gcd_vector(const std::vector<BigInt>& xs);

bool is_prime(const BigInt& n);

/// All primes <= n in increasing order.
std::vector<long long> primes_upto(long long n);

/// Positive divisors of n >= 1 in increasing order.
std::vector<BigInt> divisors(const BigInt& n);

}  // namespace powergraph
