#include "powergraph/graphs.hpp"

#include <algorithm>
#include <stdexcept>

namespace powergraph {

WindowSpec WindowSpec::with_bound(long long n) {
  if (n < 1) throw std::invalid_argument("window bounds must be at least 1");
  WindowSpec s;
  s.kind = Kind::Bound;
  s.bound = n;
  return s;
}

WindowSpec WindowSpec::with_num_den(long long d, long long h) {
  if (d < 1 || h < 1) throw std::invalid_argument("window bounds must be at least 1");
  WindowSpec s;
  s.kind = Kind::NumDen;
  s.num_bound = d;
  s.den_bound = h;
  return s;
}

WindowSpec WindowSpec::whole() { return WindowSpec{}; }

std::string WindowSpec::str() const {
  switch (kind) {
    case Kind::Bound:
      return "N=" + std::to_string(bound);
    case Kind::NumDen:
      return "D=" + std::to_string(num_bound) + ",H=" + std::to_string(den_bound);
    case Kind::Whole:
      return "all";
  }
  return "";
}

WindowSpec WindowSpec::parse(const std::string& s) {
  if (s == "all") return whole();
  if (s.rfind("N=", 0) == 0) return with_bound(std::stoll(s.substr(2)));
  if (s.rfind("D=", 0) == 0) {
    auto comma = s.find(",H=");
    if (comma != std::string::npos) {
      return with_num_den(std::stoll(s.substr(2, comma - 2)), std::stoll(s.substr(comma + 3)));
    }
  }
  throw std::invalid_argument("malformed window spec: " + s);
}

void WindowGraph::finalize() {
  std::size_t n = static_cast<std::size_t>(n_);
  degree_.assign(n, 0);
  edges_.clear();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (adj_[i * n + j]) ++degree_[i];
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (adj_[i * n + j]) edges_.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  }
  index_.clear();
  for (std::size_t i = 0; i < n; ++i) index_[labels_[i]] = static_cast<int>(i);
}

WindowGraph WindowGraph::from_elements(const GroupDescriptor& g, const std::string& spec_str,
                                       const std::vector<Element>& vertices, bool directed) {
  WindowGraph w;
  w.n_ = static_cast<int>(vertices.size());
  w.directed_ = directed;
  w.descriptor_str_ = g.str();
  w.spec_str_ = spec_str;
  std::size_t n = vertices.size();
  w.labels_.reserve(n);
  for (const Element& v : vertices) w.labels_.push_back(v.str());
  w.adj_.assign(n * n, 0);
  if (directed) w.arc_.assign(n * n, 0);
  for (const Element& v : vertices) validate_element(g, v);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (arc_unchecked(g, vertices[i], vertices[j])) {
        if (directed) w.arc_[i * n + j] = 1;
        w.adj_[i * n + j] = 1;
        w.adj_[j * n + i] = 1;
      }
    }
  }
  w.finalize();
  return w;
}

WindowGraph WindowGraph::raw(const std::vector<std::string>& labels,
                             const std::vector<std::pair<int, int>>& edges,
                             const std::vector<std::pair<int, int>>& arcs, bool directed) {
  WindowGraph w;
  w.n_ = static_cast<int>(labels.size());
  w.directed_ = directed;
  w.descriptor_str_ = "raw";
  w.spec_str_ = "custom";
  w.labels_ = labels;
  std::size_t n = labels.size();
  w.adj_.assign(n * n, 0);
  if (directed) {
    w.arc_.assign(n * n, 0);
    for (auto [u, v] : arcs) {
      if (u == v) throw std::invalid_argument("loops are not allowed");
      w.arc_[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = 1;
      w.adj_[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = 1;
      w.adj_[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = 1;
    }
  } else {
    for (auto [u, v] : edges) {
      if (u == v) throw std::invalid_argument("loops are not allowed");
      w.adj_[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = 1;
      w.adj_[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = 1;
    }
  }
  w.finalize();
  return w;
}

int WindowGraph::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw std::invalid_argument("unknown vertex label: " + label);
  return it->second;
}

std::vector<int> WindowGraph::neighbors(int i) const {
  std::vector<int> out;
  for (int j = 0; j < n_; ++j) {
    if (j != i && adjacent(i, j)) out.push_back(j);
  }
  return out;
}

std::vector<std::pair<int, int>> WindowGraph::arcs() const {
  std::vector<std::pair<int, int>> out;
  if (!directed_) return out;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (has_arc(i, j)) out.push_back({i, j});
    }
  }
  return out;
}

bool WindowGraph::operator==(const WindowGraph& o) const {
  return n_ == o.n_ && directed_ == o.directed_ && descriptor_str_ == o.descriptor_str_ &&
         spec_str_ == o.spec_str_ && labels_ == o.labels_ && adj_ == o.adj_ && arc_ == o.arc_;
}

namespace {

void check_spec(const GroupDescriptor& g, const WindowSpec& spec) {
  WindowSpec::Kind want;
  switch (g.kind()) {
    case GroupKind::Z:
    case GroupKind::Zn:
      want = WindowSpec::Kind::Bound;
      break;
    case GroupKind::Q:
    case GroupKind::Qn:
    case GroupKind::Unitary:
      want = WindowSpec::Kind::NumDen;
      break;
    case GroupKind::FiniteCyclic:
      want = WindowSpec::Kind::Whole;
      break;
  }
  if (spec.kind != want) {
    throw std::invalid_argument("mismatched spec: window " + spec.str() +
                                " does not fit group " + g.str());
  }
}

/// Reduced rationals m/n with |m| <= d, 1 <= n <= h, plus 0.
std::vector<Rational> rational_line(long long d, long long h) {
  std::vector<Rational> out;
  out.push_back(Rational(0));
  for (long long den = 1; den <= h; ++den) {
    for (long long num = 1; num <= d; ++num) {
      if (boost::multiprecision::gcd(BigInt(num), BigInt(den)) != 1) continue;
      out.push_back(Rational(BigInt(num), BigInt(den)));
      out.push_back(Rational(BigInt(-num), BigInt(den)));
    }
  }
  return out;
}

void cartesian(const std::vector<Rational>& line, int dim, std::vector<Rational>& cur,
               std::vector<Element>& out) {
  if (dim == 0) {
    out.push_back(Element(cur));
    return;
  }
  for (const Rational& r : line) {
    cur.push_back(r);
    cartesian(line, dim - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Element> build_window(const GroupDescriptor& g, const WindowSpec& spec) {
  check_spec(g, spec);
  std::vector<Element> out;
  switch (g.kind()) {
    case GroupKind::Z:
    case GroupKind::Zn: {
      std::vector<Rational> line;
      for (long long v = -spec.bound; v <= spec.bound; ++v) line.push_back(Rational(v));
      std::vector<Rational> cur;
      cartesian(line, g.dimension(), cur, out);
      break;
    }
    case GroupKind::Q:
    case GroupKind::Qn: {
      std::vector<Rational> line = rational_line(spec.num_bound, spec.den_bound);
      std::vector<Rational> cur;
      cartesian(line, g.dimension(), cur, out);
      break;
    }
    case GroupKind::Unitary: {
      for (const Rational& r : rational_line(spec.num_bound, spec.den_bound)) {
        if (contains(g.height(), r)) out.push_back(Element({r}));
      }
      break;
    }
    case GroupKind::FiniteCyclic: {
      for (long long r = 0; r < g.order(); ++r) out.push_back(Element({Rational(r)}));
      break;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Element& a, const Element& b) { return a.str() < b.str(); });
  return out;
}

WindowGraph power_graph(const GroupDescriptor& g, const WindowSpec& spec) {
  return WindowGraph::from_elements(g, spec.str(), build_window(g, spec), false);
}

WindowGraph directed_power_graph(const GroupDescriptor& g, const WindowSpec& spec) {
  return WindowGraph::from_elements(g, spec.str(), build_window(g, spec), true);
}

WindowGraph power_graph_on(const GroupDescriptor& g, const std::vector<Element>& vertices,
                           bool directed) {
  return WindowGraph::from_elements(g, "custom", vertices, directed);
}

std::vector<Element> s_set_window(const GroupDescriptor& g, const std::vector<Element>& window,
                                  const Element& a, const Element& b) {
  if (a == b || !adjacent(g, a, b)) {
    throw std::invalid_argument("S-set defined for adjacent pairs");
  }
  bool have_a = false, have_b = false;
  for (const Element& c : window) {
    if (c == a) have_a = true;
    if (c == b) have_b = true;
  }
  if (!have_a || !have_b) {
    throw std::invalid_argument("S-set arguments must lie in the window");
  }
  std::vector<Element> out;
  for (const Element& c : window) {
    if (related(g, c, b) && !related(g, c, a)) out.push_back(c);
  }
  std::sort(out.begin(), out.end(),
            [](const Element& x, const Element& y) { return x.str() < y.str(); });
  return out;
}

SSetResult s_set_exact_Z(const BigInt& a, const BigInt& b) {
  bool a_div_b = a != 0 && b % a == 0;
  bool b_div_a = b != 0 && a % b == 0;
  if (a == b || a == 0 || b == 0 || (!a_div_b && !b_div_a)) {
    throw std::invalid_argument("S-set defined for adjacent pairs");
  }
  SSetResult res;
  if (b == -a) {
    // S_{a,-a} is empty: everything related to -a is related to a.
    res.finite = true;
    return res;
  }
  if (a_div_b) {
    // Multiples of b are multiples of a, hence related to a; only divisors
    // of b can qualify, so the set is finite and window-independent.
    res.finite = true;
    for (const BigInt& c : divisors(boost::multiprecision::abs(b))) {
      if (c % boost::multiprecision::abs(a) != 0 && boost::multiprecision::abs(a) % c != 0) {
        res.members.push_back(Element({Rational(c)}));
        res.members.push_back(Element({Rational(-c)}));
      }
    }
    std::sort(res.members.begin(), res.members.end(),
              [](const Element& x, const Element& y) { return x.str() < y.str(); });
    return res;
  }
  // b | a strictly: every k*b with k neither dividing nor divisible by a/b
  // is related to b but not to a, and there are infinitely many such k.
  res.finite = false;
  BigInt m = boost::multiprecision::abs(a / b);
  res.family = "all k*(" + b.str() + ") with k neither dividing nor divisible by " + m.str();
  BigInt k = 2;
  while (m % k == 0 || k % m == 0) ++k;
  res.witness = Element({Rational(k * boost::multiprecision::abs(b))});
  return res;
}

std::vector<std::vector<int>> neighborhood_complement_split(const WindowGraph& g, int x) {
  std::vector<int> nbrs = g.neighbors(x);
  if (nbrs.empty()) throw std::invalid_argument("identity has no neighborhood");
  std::size_t k = nbrs.size();
  std::vector<int> comp(k, -1);
  std::vector<std::vector<int>> out;
  for (std::size_t s = 0; s < k; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{static_cast<int>(s)};
    comp[s] = static_cast<int>(out.size());
    std::vector<int> members;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      members.push_back(nbrs[static_cast<std::size_t>(cur)]);
      for (std::size_t t = 0; t < k; ++t) {
        if (comp[t] != -1) continue;
        // complement edge: distinct neighbours that are non-adjacent in g
        if (!g.adjacent(nbrs[static_cast<std::size_t>(cur)], nbrs[t])) {
          comp[t] = comp[s];
          stack.push_back(static_cast<int>(t));
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> components(const WindowGraph& g) {
  int n = g.n();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] != -1) continue;
    comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
    std::vector<int> stack{s}, members;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      members.push_back(cur);
      for (int t = 0; t < n; ++t) {
        if (comp[static_cast<std::size_t>(t)] == -1 && g.adjacent(cur, t)) {
          comp[static_cast<std::size_t>(t)] = comp[static_cast<std::size_t>(s)];
          stack.push_back(t);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void search_automorphisms(const WindowGraph& g, std::vector<int>& image, std::vector<bool>& used,
                          std::size_t depth, std::vector<int>& orbit_id) {
  std::size_t n = static_cast<std::size_t>(g.n());
  if (depth == n) {
    // merge orbits along the found automorphism
    for (std::size_t v = 0; v < n; ++v) {
      int a = orbit_id[v], b = orbit_id[static_cast<std::size_t>(image[v])];
      if (a == b) continue;
      for (std::size_t w = 0; w < n; ++w) {
        if (orbit_id[w] == b) orbit_id[w] = a;
      }
    }
    return;
  }
  for (std::size_t cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    if (g.degree(static_cast<int>(depth)) != g.degree(static_cast<int>(cand))) continue;
    bool ok = true;
    for (std::size_t prev = 0; prev < depth; ++prev) {
      if (g.adjacent(static_cast<int>(depth), static_cast<int>(prev)) !=
          g.adjacent(static_cast<int>(cand), image[prev])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    image[depth] = static_cast<int>(cand);
    used[cand] = true;
    search_automorphisms(g, image, used, depth + 1, orbit_id);
    used[cand] = false;
  }
}

}  // namespace

std::vector<std::vector<int>> automorphism_orbits(const WindowGraph& g) {
  if (g.n() > 10) throw std::invalid_argument("brute force bound exceeded");
  std::size_t n = static_cast<std::size_t>(g.n());
  std::vector<int> orbit_id(n);
  for (std::size_t i = 0; i < n; ++i) orbit_id[i] = static_cast<int>(i);
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  search_automorphisms(g, image, used, 0, orbit_id);
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (orbit_id[i] != static_cast<int>(i)) continue;
    std::vector<int> orbit;
    for (std::size_t j = 0; j < n; ++j) {
      if (orbit_id[j] == orbit_id[i]) orbit.push_back(static_cast<int>(j));
    }
    out.push_back(std::move(orbit));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace powergraph
