#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "powergraph/orient.hpp"

namespace powergraph {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first counterexample on failure
};

/// Runs every named invariant check at moderate window sizes.  Randomized
/// checks draw from a deterministic generator seeded as given.
std::vector<CheckResult> run_verify_suite(std::uint64_t seed);

/// Helpers shared between the verify suite and the isomorphism CLI.

/// Largest subwindow of the (D, H) window of Q closed under x -> a^2/x.
std::vector<Element> phi_closed_window(const Rational& a, long long num_bound,
                                       long long den_bound);

/// Index map applying phi_a to the vertices of a graph built on a
/// phi-closed window.
std::vector<int> phi_index_map(const Rational& a, const WindowGraph& g);

}  // namespace powergraph
