#include "powergraph/rational.hpp"

#include <stdexcept>

namespace powergraph {

Rational::Rational(const BigInt& n, const BigInt& d) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  BigInt g = boost::multiprecision::gcd(n, d);
  if (g == 0) {
    num = 0;
    den = 1;
    return;
  }
  num = n / g;
  den = d / g;
  if (den < 0) {
    num = -num;
    den = -den;
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.num = -num;
  r.den = den;
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num * o.den - o.num * den, den * o.den);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num * o.num, den * o.den);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num == 0) throw std::invalid_argument("division by zero");
  return Rational(num * o.den, den * o.num);
}

std::string Rational::str() const {
  std::string s = num.str();
  if (den != 1) {
    s += "/";
    s += den.str();
  }
  return s;
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt n(s.substr(0, slash));
    BigInt d(s.substr(slash + 1));
    return Rational(n, d);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
}

Rational reduce(const BigInt& numer, const BigInt& denom) {
  return Rational(numer, denom);
}

}  // namespace powergraph
