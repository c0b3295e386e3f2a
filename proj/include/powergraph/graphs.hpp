#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "powergraph/groups.hpp"

namespace powergraph {

/// Finite window selecting the materialized vertex set.  Z / Z^n windows
/// bound each coordinate by N; Q / Q^n / Unitary windows bound reduced
/// numerators by D and denominators by H (componentwise for Q^n);
/// FiniteCyclic windows take the whole group.
struct WindowSpec {
  enum class Kind { Bound, NumDen, Whole };

  Kind kind = Kind::Whole;
  long long bound = 0;
  long long num_bound = 0;
  long long den_bound = 0;

  static WindowSpec with_bound(long long n);
  static WindowSpec with_num_den(long long d, long long h);
  static WindowSpec whole();

  /// "N=3", "D=3,H=4", or "all".
  std::string str() const;
  static WindowSpec parse(const std::string& s);

  bool operator==(const WindowSpec& o) const {
    return kind == o.kind && bound == o.bound && num_bound == o.num_bound &&
           den_bound == o.den_bound;
  }
};

/**
 * Materialized induced subgraph of a power graph.  Vertices are ordered by
 * their canonical label strings; edges are unordered index pairs; directed
 * graphs additionally carry the arc relation, whose symmetrization always
 * equals the edge set.  No loops.
 */
class WindowGraph {
 public:
  static WindowGraph from_elements(const GroupDescriptor& g, const std::string& spec_str,
                                   const std::vector<Element>& vertices, bool directed);
  /// Bare graph with no group attached (test fixtures, parsed files).
  static WindowGraph raw(const std::vector<std::string>& labels,
                         const std::vector<std::pair<int, int>>& edges,
                         const std::vector<std::pair<int, int>>& arcs, bool directed);

  int n() const { return n_; }
  bool directed() const { return directed_; }
  const std::string& descriptor_str() const { return descriptor_str_; }
  const std::string& spec_str() const { return spec_str_; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Throws on an unknown label.
  int index_of(const std::string& label) const;

  bool adjacent(int i, int j) const {
    return adj_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                static_cast<std::size_t>(j)] != 0;
  }
  /// For undirected graphs an edge counts as an arc both ways.
  bool has_arc(int i, int j) const {
    if (!directed_) return adjacent(i, j);
    return arc_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                static_cast<std::size_t>(j)] != 0;
  }
  int degree(int i) const { return degree_[static_cast<std::size_t>(i)]; }
  std::vector<int> neighbors(int i) const;

  /// Unordered edges as index pairs (i < j), lexicographically sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  /// Ordered arcs, lexicographically sorted (empty for undirected graphs).
  std::vector<std::pair<int, int>> arcs() const;

  bool operator==(const WindowGraph& o) const;

 private:
  int n_ = 0;
  bool directed_ = false;
  std::string descriptor_str_;
  std::string spec_str_;
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  std::vector<char> adj_;
  std::vector<char> arc_;
  std::vector<int> degree_;
  std::vector<std::pair<int, int>> edges_;

  void finalize();
};

/// All group elements inside the window, sorted by canonical label.
/// Throws on a spec kind that does not fit the group ("mismatched spec").
std::vector<Element> build_window(const GroupDescriptor& g, const WindowSpec& spec);

WindowGraph power_graph(const GroupDescriptor& g, const WindowSpec& spec);
WindowGraph directed_power_graph(const GroupDescriptor& g, const WindowSpec& spec);

/// Power graph induced on an explicit vertex set (spec label "custom").
WindowGraph power_graph_on(const GroupDescriptor& g, const std::vector<Element>& vertices,
                           bool directed);

/// S_{a,b} = elements of the window related to b but not to a
/// (relatedness is reflexive).  Throws unless a and b are adjacent
/// ("S-set defined for adjacent pairs") and both lie in the window.
std::vector<Element> s_set_window(const GroupDescriptor& g, const std::vector<Element>& window,
                                  const Element& a, const Element& b);

/// Exact S-set over all of Z: either the full finite set or a description
/// of an infinite witness family plus its least positive member.
struct SSetResult {
  bool finite = true;
  std::vector<Element> members;  // full set when finite
  std::string family;            // witness family description when infinite
  Element witness;               // concrete member when infinite
};

SSetResult s_set_exact_Z(const BigInt& a, const BigInt& b);

/// Partition of the complement graph induced on the neighbourhood of x
/// into connected components (vertex indices, each sorted, components
/// ordered by smallest member).  Throws on an isolated vertex
/// ("identity has no neighborhood").
std::vector<std::vector<int>> neighborhood_complement_split(const WindowGraph& g, int x);

/// Connected components of the underlying undirected graph.
std::vector<std::vector<int>> components(const WindowGraph& g);

/// Orbit partition of the full automorphism group, by brute force.
/// Throws beyond 10 vertices ("brute force bound exceeded").
std::vector<std::vector<int>> automorphism_orbits(const WindowGraph& g);

}  // namespace powergraph
