#pragma once

#include <map>
#include <string>

#include "powergraph/arith.hpp"
#include "powergraph/rational.hpp"

namespace powergraph {

/// Value of a height function at a prime: a natural number or infinity.
struct HeightValue {
  bool infinite = false;
  long long finite = 0;

  static HeightValue inf() { return HeightValue{true, 0}; }
  static HeightValue fin(long long v) { return HeightValue{false, v}; }

  bool is_zero() const { return !infinite && finite == 0; }
  /// Add a finite amount; infinity absorbs.
  HeightValue plus(long long delta) const {
    return infinite ? *this : fin(finite + delta);
  }
  bool operator==(const HeightValue& o) const {
    return infinite == o.infinite && (infinite || finite == o.finite);
  }
  bool operator!=(const HeightValue& o) const { return !(*this == o); }
  std::string str() const { return infinite ? "inf" : std::to_string(finite); }
};

/**
 * Finitely supported map from primes to N ∪ {inf}.  Primes outside the
 * support have value 0; the normal form stores no zero entries and keeps
 * primes in increasing order.
 */
class HeightFunction {
 public:
  HeightFunction() = default;

  /// Builds the normal form.  Throws on non-prime keys.  Zero values are
  /// dropped.
  static HeightFunction from_entries(const std::map<BigInt, HeightValue>& entries);

  HeightValue at(const BigInt& p) const;
  const std::map<BigInt, HeightValue>& support() const { return support_; }
  bool operator==(const HeightFunction& o) const { return support_ == o.support_; }
  bool operator!=(const HeightFunction& o) const { return !(*this == o); }

  /// Canonical inline form, e.g. "{2:inf,3:1}"; the all-zero function is "{}".
  std::string str() const;

 private:
  std::map<BigInt, HeightValue> support_;
};

/// Height function of the subgroup G_p = { m/p^k }: p -> inf.
/// Throws on composite p ("g_p defined for primes").
HeightFunction g_p(const BigInt& p);

/// Pointwise sum of h with the exponents of m >= 1; inf + k = inf.
/// Throws on m <= 0.
HeightFunction scale(const HeightFunction& h, const BigInt& m);

struct EquivalenceWitness {
  bool equivalent = false;
  BigInt m = 1;  // witnesses with m*h == n*f when equivalent
  BigInt n = 1;
  std::string detail;
};

/// Difference analysis: h ≡ f iff m*h == n*f for some integers m, n >= 1.
EquivalenceWitness equivalence_witness(const HeightFunction& h, const HeightFunction& f);
bool equivalent(const HeightFunction& h, const HeightFunction& f);

/// The subgroups of Q described by two height functions are isomorphic
/// exactly when the functions are equivalent.
bool subgroups_isomorphic(const HeightFunction& a, const HeightFunction& b);

/// In the directed power graph of the subgroup described by h, nonzero
/// elements either all have finitely many in-neighbours or all have
/// infinitely many; the split depends only on whether h takes the value inf.
enum class InNeighbourCardinality { AllFinite, AllInfinite };
InNeighbourCardinality classify_in_neighbour_cardinality(const HeightFunction& h);

/// Membership of x in the subgroup A(h) = { q : v_p(q) >= -h(p) for all p }.
bool contains(const HeightFunction& h, const Rational& x);

/// The isomorphism G_p -> G_q swapping the exponents of p and q in the
/// factorization; 0 -> 0.  Throws when x lies outside G_p
/// ("element outside domain group") or when p or q is not prime.
Rational prime_swap_iso(const BigInt& p, const BigInt& q, const Rational& x);

/// Height-function file format: one "<prime>: <value>" line per supported
/// prime, increasing primes, "inf" for infinity, absent primes meaning 0.
/// The parser rejects duplicate primes, explicit zero entries, and
/// non-prime keys.
HeightFunction parse_height_file(const std::string& text);
std::string serialize_height_file(const HeightFunction& h);

}  // namespace powergraph
