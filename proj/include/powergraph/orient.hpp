#pragma once

#include <optional>
#include <string>
#include <vector>

#include "powergraph/graphs.hpp"

namespace powergraph {

enum class EdgeVerdict { InversePair, Forward, Backward, Undetermined };

std::string verdict_str(EdgeVerdict v);

struct EdgeClassification {
  EdgeVerdict verdict = EdgeVerdict::Undetermined;
  std::optional<std::size_t> size_ab;  // |S_{a,b}| when finite / windowed
  std::optional<std::size_t> size_ba;
  std::string evidence;
};

/// Ground-truth classification of the edge {a, b} in P(Z) from exact
/// S-sets.  Forward means a -> b strictly.  Throws on non-adjacent pairs.
EdgeClassification classify_edge_exact_Z(const BigInt& a, const BigInt& b);

/// Purely graph-theoretic classification from windowed S-set sizes:
/// both empty -> InversePair; one side <= margin while the other exceeds
/// it -> oriented towards the small side; otherwise Undetermined.  Correct
/// deep inside the window, fallible near the boundary.
EdgeClassification classify_edge_window(const WindowGraph& g, int a, int b, long long margin);

struct OrientationEdge {
  int u = 0, v = 0;
  EdgeVerdict verdict = EdgeVerdict::Undetermined;
  std::size_t s_uv = 0, s_vu = 0;
  std::string how;  // "exact", "threshold", "propagation", or "margin"
};

struct OrientationReport {
  std::vector<OrientationEdge> edges;  // the evaluated (core) edges
  std::size_t evaluated = 0;
  std::size_t inverse_pairs = 0;
  std::size_t forward = 0;
  std::size_t backward = 0;
  std::size_t undetermined = 0;
  std::vector<std::string> mismatches;  // vs ground truth, when provided
  std::string to_text(const WindowGraph& g) const;
};

/**
 * Recovers the arc directions of a Z window of P(Z) from its undirected
 * structure alone, then reports every edge with both endpoint labels of
 * absolute value <= core_bound.
 *
 * The classification pipeline never looks at labels: (1) edges whose two
 * windowed S-sets are both empty are inverse pairs; (2) a windowed S-set
 * larger than twice the maximal divisor count in the window cannot be a
 * finite S-set, which orients the edge soundly; (3) known arcs propagate
 * through the exact closure rule y -> x -> z implies y -> z until a fixed
 * point; (4) the margin rule of classify_edge_window decides any leftovers.
 * Labels are used only to select the reported core edges and, when a
 * directed ground truth is supplied, to count mismatches.
 */
OrientationReport recover_orientation(const WindowGraph& g, long long margin,
                                      long long core_bound,
                                      const WindowGraph* ground_truth = nullptr);

/// The involution x -> a^2 / x on Q (0 -> 0); an automorphism of the
/// undirected power graph that reverses every strict arc.
Rational involution_phi(const Rational& a, const Rational& x);

enum class ComponentVote { Preserves, Reverses, Neither };

struct ComponentVerdict {
  std::vector<int> component;  // vertex indices in D1
  ComponentVote vote = ComponentVote::Preserves;
  std::size_t strict_arcs = 0;  // components without strict arcs vote Preserves
  std::string counterexample;
};

/**
 * Given an undirected isomorphism f between the vertex sets of two directed
 * windows (as an index map D1 -> D2), decides per component of D1 whether f
 * preserves or reverses the strict arcs.  Bidirectional arcs carry no
 * orientation information and are excluded from the vote.  Throws when f is
 * not an undirected isomorphism.
 */
std::vector<ComponentVerdict> decide_preserve_or_reverse(const std::vector<int>& f,
                                                         const WindowGraph& d1,
                                                         const WindowGraph& d2);

enum class IsoMode { Preserve, Reverse };

struct IsoCheck {
  bool ok = false;
  std::string counterexample;
};

/// Checks that f maps arcs of D1 exactly onto arcs (Preserve) or reversed
/// arcs (Reverse) of D2, reporting the first failing pair.
IsoCheck verify_digraph_isomorphism(const std::vector<int>& f, const WindowGraph& d1,
                                    const WindowGraph& d2, IsoMode mode);

}  // namespace powergraph
