#include "powergraph/heights.hpp"

#include <sstream>
#include <stdexcept>

namespace powergraph {

HeightFunction HeightFunction::from_entries(const std::map<BigInt, HeightValue>& entries) {
  HeightFunction h;
  for (const auto& [p, v] : entries) {
    if (!is_prime(p)) {
      throw std::invalid_argument("height function keys must be prime, got " + p.str());
    }
    if (v.is_zero()) continue;
    if (!v.infinite && v.finite < 0) {
      throw std::invalid_argument("height values must be nonnegative");
    }
    h.support_.emplace(p, v);
  }
  return h;
}

HeightValue HeightFunction::at(const BigInt& p) const {
  auto it = support_.find(p);
  return it == support_.end() ? HeightValue::fin(0) : it->second;
}

std::string HeightFunction::str() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [p, v] : support_) {
    if (!first) s += ",";
    first = false;
    s += p.str() + ":" + v.str();
  }
  s += "}";
  return s;
}

HeightFunction g_p(const BigInt& p) {
  if (!is_prime(p)) throw std::invalid_argument("g_p defined for primes, got " + p.str());
  return HeightFunction::from_entries({{p, HeightValue::inf()}});
}

HeightFunction scale(const HeightFunction& h, const BigInt& m) {
  if (m <= 0) throw std::invalid_argument("scale factor must be positive");
  std::map<BigInt, HeightValue> entries;
  for (const auto& [p, v] : h.support()) entries[p] = v;
  for (const PrimePower& pp : factorize(m)) {
    auto it = entries.find(pp.prime);
    HeightValue cur = it == entries.end() ? HeightValue::fin(0) : it->second;
    entries[pp.prime] = cur.plus(pp.exponent);
  }
  return HeightFunction::from_entries(entries);
}

EquivalenceWitness equivalence_witness(const HeightFunction& h, const HeightFunction& f) {
  EquivalenceWitness w;
  // m*h == n*f requires the infinite parts to coincide: scaling never
  // creates or removes an infinity.
  for (const auto& [p, v] : h.support()) {
    if (v.infinite && !f.at(p).infinite) {
      w.detail = "h is infinite at " + p.str() + " but f is finite there";
      return w;
    }
  }
  for (const auto& [p, v] : f.support()) {
    if (v.infinite && !h.at(p).infinite) {
      w.detail = "f is infinite at " + p.str() + " but h is finite there";
      return w;
    }
  }
  // Finite parts differ at finitely many primes; m picks up the primes where
  // f exceeds h and n the primes where h exceeds f.
  BigInt m = 1, n = 1;
  auto absorb = [&](const BigInt& p, const HeightValue& hv, const HeightValue& fv) {
    if (hv.infinite) return;
    long long d = fv.finite - hv.finite;
    for (long long i = 0; i < d; ++i) m *= p;
    for (long long i = 0; i < -d; ++i) n *= p;
  };
  for (const auto& [p, v] : h.support()) absorb(p, v, f.at(p));
  for (const auto& [p, v] : f.support()) {
    if (h.at(p).is_zero()) absorb(p, HeightValue::fin(0), v);
  }
  w.equivalent = true;
  w.m = m;
  w.n = n;
  w.detail = "m*h == n*f with m=" + m.str() + ", n=" + n.str();
  return w;
}

bool equivalent(const HeightFunction& h, const HeightFunction& f) {
  return equivalence_witness(h, f).equivalent;
}

bool subgroups_isomorphic(const HeightFunction& a, const HeightFunction& b) {
  return equivalent(a, b);
}

InNeighbourCardinality classify_in_neighbour_cardinality(const HeightFunction& h) {
  for (const auto& [p, v] : h.support()) {
    if (v.infinite) return InNeighbourCardinality::AllInfinite;
  }
  return InNeighbourCardinality::AllFinite;
}

bool contains(const HeightFunction& h, const Rational& x) {
  if (x.is_zero()) return true;
  if (x.den == 1) return true;
  for (const PrimePower& pp : factorize(x.den)) {
    HeightValue v = h.at(pp.prime);
    if (v.infinite) continue;
    if (pp.exponent > v.finite) return false;
  }
  return true;
}

Rational prime_swap_iso(const BigInt& p, const BigInt& q, const Rational& x) {
  if (!is_prime(p) || !is_prime(q)) {
    throw std::invalid_argument("prime swap defined for primes");
  }
  if (x.is_zero()) return Rational(0);
  if (!contains(g_p(p), x)) throw std::invalid_argument("element outside domain group");
  long long vp = valuation(x, p);
  long long vq = valuation(x, q);
  Rational rest = x;
  Rational pr(p), qr(q);
  auto unpow = [](Rational v, const Rational& base, long long e) {
    for (long long i = 0; i < e; ++i) v = v / base;
    for (long long i = 0; i > e; --i) v = v * base;
    return v;
  };
  rest = unpow(rest, pr, vp);
  rest = unpow(rest, qr, vq);
  Rational out = rest;
  out = unpow(out, pr, -vq);
  out = unpow(out, qr, -vp);
  return out;
}

HeightFunction parse_height_file(const std::string& text) {
  std::map<BigInt, HeightValue> entries;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto strip = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string t = strip(line);
    if (t.empty() || t[0] == '#') continue;
    auto colon = t.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("height file line " + std::to_string(lineno) +
                                  ": expected '<prime>: <value>'");
    }
    std::string key = strip(t.substr(0, colon));
    std::string val = strip(t.substr(colon + 1));
    BigInt p;
    try {
      p = BigInt(key);
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("height file line " + std::to_string(lineno) +
                                  ": malformed prime '" + key + "'");
    }
    if (!is_prime(p)) {
      throw std::invalid_argument("height file line " + std::to_string(lineno) +
                                  ": key " + p.str() + " is not prime");
    }
    if (entries.count(p)) {
      throw std::invalid_argument("height file line " + std::to_string(lineno) +
                                  ": duplicate prime " + p.str());
    }
    HeightValue v;
    if (val == "inf") {
      v = HeightValue::inf();
    } else {
      try {
        v = HeightValue::fin(std::stoll(val));
      } catch (const std::exception&) {
        throw std::invalid_argument("height file line " + std::to_string(lineno) +
                                    ": malformed value '" + val + "'");
      }
      if (v.finite <= 0) {
        throw std::invalid_argument("height file line " + std::to_string(lineno) +
                                    ": zero entries must be omitted");
      }
    }
    entries.emplace(p, v);
  }
  return HeightFunction::from_entries(entries);
}

std::string serialize_height_file(const HeightFunction& h) {
  std::string out;
  for (const auto& [p, v] : h.support()) {
    out += p.str() + ": " + v.str() + "\n";
  }
  return out;
}

}  // namespace powergraph
