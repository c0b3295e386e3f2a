#pragma once

#include <string>

#include "powergraph/graphs.hpp"

namespace powergraph {

/// Edge-list TSV with a header carrying everything needed to rebuild the
/// graph: "# group=<descriptor> window=<spec> mode=<undirected|directed>",
/// then one "u<TAB>v" line per edge (per arc when directed).
std::string emit_tsv(const WindowGraph& g);

/// Rebuilds the vertex set from the header (so isolated vertices survive
/// the round trip) and reads the edge relation from the body.
WindowGraph parse_tsv(const std::string& text);

/// Graphviz output with quoted labels; bidirectional arc pairs collapse to
/// one edge with dir=both.
std::string emit_dot(const WindowGraph& g);

}  // namespace powergraph
