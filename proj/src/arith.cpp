#include "powergraph/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace powergraph {

Factorization factorize(const BigInt& n) {
  if (n <= 0) throw std::invalid_argument("nonpositive input");
  Factorization out;
  BigInt rest = n;
  for (BigInt p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    long long e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (rest > 1) out.push_back({rest, 1});
  return out;
}

Factorization factorize(const Rational& x) {
  if (x.is_zero()) throw std::invalid_argument("factorization of zero undefined");
  Factorization num = factorize(boost::multiprecision::abs(x.num));
  Factorization den = factorize(x.den);
  Factorization out;
  std::size_t i = 0, j = 0;
  while (i < num.size() || j < den.size()) {
    if (j == den.size() || (i < num.size() && num[i].prime < den[j].prime)) {
      out.push_back(num[i++]);
    } else {
      // num and den share no primes, so no merging of equal primes occurs
      out.push_back({den[j].prime, -den[j].exponent});
      ++j;
    }
  }
  return out;
}

long long valuation(const Rational& x, const BigInt& p) {
  if (x.is_zero()) throw std::invalid_argument("valuation of zero undefined");
  if (!is_prime(p)) throw std::invalid_argument("valuation base must be prime");
  long long v = 0;
  BigInt n = boost::multiprecision::abs(x.num);
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  BigInt d = x.den;
  while (d % p == 0) {
    d /= p;
    --v;
  }
  return v;
}

BigInt gcd_vector(const std::vector<BigInt>& xs) {
  if (xs.empty()) throw std::invalid_argument("gcd of empty list undefined");
  BigInt g = 0;
  for (const BigInt& x : xs) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
  return g;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  for (BigInt p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

std::vector<long long> primes_upto(long long n) {
  std::vector<long long> out;
  if (n < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  for (long long i = 2; i <= n; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (long long j = i * i; j <= n; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

std::vector<BigInt> divisors(const BigInt& n) {
  if (n < 1) throw std::invalid_argument("nonpositive input");
  std::vector<BigInt> out{1};
  for (const PrimePower& pp : factorize(n)) {
    std::size_t base = out.size();
    BigInt pe = 1;
    for (long long e = 1; e <= pp.exponent; ++e) {
      pe *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pe);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace powergraph
