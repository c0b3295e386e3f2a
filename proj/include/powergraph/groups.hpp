#pragma once

#include <string>
#include <vector>

#include "powergraph/heights.hpp"
#include "powergraph/rational.hpp"

namespace powergraph {

enum class GroupKind { Z, Zn, Q, Qn, Unitary, FiniteCyclic };

/**
 * A supported group: Z, Z^n, Q, Q^n, a unitary subgroup of Q given by a
 * height function, or a finite cyclic group (the lone torsion example).
 */
class GroupDescriptor {
 public:
  static GroupDescriptor Z();
  static GroupDescriptor Zn(int dim);
  static GroupDescriptor Q();
  static GroupDescriptor Qn(int dim);
  static GroupDescriptor Unitary(const HeightFunction& h);
  static GroupDescriptor FiniteCyclic(long long order);

  GroupKind kind() const { return kind_; }
  int dimension() const { return dim_; }
  const HeightFunction& height() const { return height_; }
  long long order() const { return order_; }
  bool torsion_free() const { return kind_ != GroupKind::FiniteCyclic; }

  /// "Z", "Z^2", "Q", "Q^3", "U{2:inf}", "C6".
  std::string str() const;
  static GroupDescriptor parse(const std::string& s);

  bool operator==(const GroupDescriptor& o) const;

 private:
  GroupDescriptor(GroupKind k, int dim, HeightFunction h, long long order)
      : kind_(k), dim_(dim), height_(std::move(h)), order_(order) {}
  GroupKind kind_;
  int dim_;
  HeightFunction height_;
  long long order_;
};

/// Group element: a coordinate vector of rationals.  FiniteCyclic elements
/// are single residues in [0, order).
struct Element {
  std::vector<Rational> coords;

  Element() = default;
  explicit Element(std::vector<Rational> c) : coords(std::move(c)) {}

  bool operator==(const Element& o) const { return coords == o.coords; }
  bool operator!=(const Element& o) const { return !(*this == o); }
  bool operator<(const Element& o) const;

  /// "5", "-1/2", or "(1,2)" for vectors.
  std::string str() const;
  static Element parse(const GroupDescriptor& g, const std::string& s);
};

Element identity(const GroupDescriptor& g);
bool is_identity(const GroupDescriptor& g, const Element& x);

/// Throws "element/descriptor mismatch" when x is not a valid element of g.
void validate_element(const GroupDescriptor& g, const Element& x);

/// Whether y = n*x for some integer n != 0 (arc x -> y in the directed
/// power graph when x != y).
bool arc(const GroupDescriptor& g, const Element& x, const Element& y);

/// arc() without element validation, for bulk graph construction over an
/// already validated vertex set.
bool arc_unchecked(const GroupDescriptor& g, const Element& x, const Element& y);

/// Power-graph adjacency.  Throws on x == y
/// ("adjacency defined on distinct vertices").
bool adjacent(const GroupDescriptor& g, const Element& x, const Element& y);

/// Reflexive closure of adjacency: x ~ y iff x == y or one is a multiple
/// of the other.
bool related(const GroupDescriptor& g, const Element& x, const Element& y);

/// Membership test against the descriptor (integrality, height bounds,
/// residue range).
bool contains(const GroupDescriptor& g, const Element& x);

Element negate(const GroupDescriptor& g, const Element& x);

/// Generator of the unique maximal cyclic subgroup containing x, i.e.
/// x / gcd(coords).  Defined for Z and Z^n.  Throws on the identity
/// ("identity lies in no maximal cyclic subgroup").
Element maximal_cyclic_generator(const GroupDescriptor& g, const Element& x);

/// Whether two non-identity elements lie in the same connected component of
/// the power graph minus the identity.  Throws on identity input.
bool same_component(const GroupDescriptor& g, const Element& x, const Element& y);

}  // namespace powergraph
