#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace powergraph {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Exact rational number in lowest terms.
 *
 * Invariants: den >= 1, gcd(|num|, den) == 1, zero is 0/1.  The sign lives
 * on the numerator.  All arithmetic is exact; nothing ever rounds.
 */
struct Rational {
  BigInt num;
  BigInt den;

  Rational() : num(0), den(1) {}
  Rational(long long n) : num(n), den(1) {}
  Rational(const BigInt& n) : num(n), den(1) {}
  Rational(const BigInt& n, const BigInt& d);

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return num * o.den < o.num * den; }

  /// "n" for integers, "n/d" otherwise, e.g. "-1/2".
  std::string str() const;
  static Rational parse(const std::string& s);
};

/// Reduce numer/denom to canonical form.  Throws on zero denominator.
Rational reduce(const BigInt& numer, const BigInt& denom);

}  // namespace powergraph
