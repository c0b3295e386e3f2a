#include "powergraph/formats.hpp"

#include <sstream>
#include <stdexcept>

namespace powergraph {

std::string emit_tsv(const WindowGraph& g) {
  std::ostringstream out;
  out << "# group=" << g.descriptor_str() << " window=" << g.spec_str() << " mode="
      << (g.directed() ? "directed" : "undirected") << "\n";
  if (g.directed()) {
    for (auto [u, v] : g.arcs()) out << g.label(u) << "\t" << g.label(v) << "\n";
  } else {
    for (auto [u, v] : g.edges()) out << g.label(u) << "\t" << g.label(v) << "\n";
  }
  return out.str();
}

WindowGraph parse_tsv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("# ", 0) != 0) {
    throw std::invalid_argument("missing TSV header");
  }
  std::string group_str, window_str, mode_str;
  std::istringstream header(line.substr(2));
  std::string tok;
  while (header >> tok) {
    if (tok.rfind("group=", 0) == 0) group_str = tok.substr(6);
    else if (tok.rfind("window=", 0) == 0) window_str = tok.substr(7);
    else if (tok.rfind("mode=", 0) == 0) mode_str = tok.substr(5);
    else throw std::invalid_argument("malformed TSV header token: " + tok);
  }
  if (group_str.empty() || window_str.empty() ||
      (mode_str != "directed" && mode_str != "undirected")) {
    throw std::invalid_argument("malformed TSV header");
  }
  GroupDescriptor g = GroupDescriptor::parse(group_str);
  WindowSpec spec = WindowSpec::parse(window_str);
  bool directed = mode_str == "directed";

  std::vector<Element> vertices = build_window(g, spec);
  std::vector<std::string> labels;
  labels.reserve(vertices.size());
  for (const Element& v : vertices) labels.push_back(v.str());
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<int>(i);

  std::vector<std::pair<int, int>> edges, arcs;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw std::invalid_argument("malformed TSV line: " + line);
    std::string a = line.substr(0, tab);
    std::string b = line.substr(tab + 1);
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      throw std::invalid_argument("TSV vertex outside the declared window: " + line);
    }
    if (directed) {
      arcs.push_back({ia->second, ib->second});
    } else {
      edges.push_back({ia->second, ib->second});
    }
  }
  WindowGraph w = WindowGraph::raw(labels, edges, arcs, directed);
  // raw() tags graphs as bare; rebuild through the descriptor so the result
  // carries the declared group and window and equals the generated graph.
  WindowGraph rebuilt =
      directed ? directed_power_graph(g, spec) : power_graph(g, spec);
  if (!(rebuilt.edges() == w.edges()) || (directed && !(rebuilt.arcs() == w.arcs()))) {
    throw std::invalid_argument("TSV body does not match the declared window");
  }
  return rebuilt;
}

std::string emit_dot(const WindowGraph& g) {
  std::ostringstream out;
  if (g.directed()) {
    out << "digraph power {\n";
    for (int i = 0; i < g.n(); ++i) out << "  \"" << g.label(i) << "\";\n";
    for (auto [u, v] : g.arcs()) {
      if (g.has_arc(v, u)) {
        if (u < v) out << "  \"" << g.label(u) << "\" -> \"" << g.label(v) << "\" [dir=both];\n";
      } else {
        out << "  \"" << g.label(u) << "\" -> \"" << g.label(v) << "\";\n";
      }
    }
    out << "}\n";
  } else {
    out << "graph power {\n";
    for (int i = 0; i < g.n(); ++i) out << "  \"" << g.label(i) << "\";\n";
    for (auto [u, v] : g.edges()) {
      out << "  \"" << g.label(u) << "\" -- \"" << g.label(v) << "\";\n";
    }
    out << "}\n";
  }
  return out.str();
}

}  // namespace powergraph
