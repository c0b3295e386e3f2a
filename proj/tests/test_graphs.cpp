#include <algorithm>
#include <set>

#include "doctest.h"
#include "powergraph/graphs.hpp"

using namespace powergraph;

namespace {

std::set<std::string> label_set(const std::vector<Element>& els) {
  std::set<std::string> out;
  for (const Element& e : els) out.insert(e.str());
  return out;
}

std::set<std::pair<std::string, std::string>> edge_labels(const WindowGraph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [u, v] : g.edges()) {
    std::string a = g.label(u), b = g.label(v);
    out.insert({std::min(a, b), std::max(a, b)});
  }
  return out;
}

std::set<std::pair<std::string, std::string>> arc_labels(const WindowGraph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [u, v] : g.arcs()) out.insert({g.label(u), g.label(v)});
  return out;
}

}  // namespace

TEST_CASE("window specs parse and print") {
  CHECK(WindowSpec::with_bound(3).str() == "N=3");
  CHECK(WindowSpec::with_num_den(3, 4).str() == "D=3,H=4");
  CHECK(WindowSpec::whole().str() == "all");
  for (const std::string& s : {"N=3", "D=3,H=4", "all"}) {
    CHECK(WindowSpec::parse(s).str() == s);
  }
  CHECK_THROWS_AS(WindowSpec::with_bound(0), std::invalid_argument);
  CHECK_THROWS_AS(WindowSpec::parse("N=x"), std::exception);
}

TEST_CASE("build_window materializes the advertised sets") {
  GroupDescriptor z = GroupDescriptor::Z();
  CHECK(label_set(build_window(z, WindowSpec::with_bound(3))) ==
        std::set<std::string>{"-3", "-2", "-1", "0", "1", "2", "3"});

  GroupDescriptor u2 = GroupDescriptor::Unitary(g_p(2));
  CHECK(label_set(build_window(u2, WindowSpec::with_num_den(3, 4))) ==
        std::set<std::string>{"0", "1", "-1", "2", "-2", "3", "-3", "1/2", "-1/2", "3/2", "-3/2",
                              "1/4", "-1/4", "3/4", "-3/4"});

  GroupDescriptor c6 = GroupDescriptor::FiniteCyclic(6);
  CHECK(label_set(build_window(c6, WindowSpec::whole())) ==
        std::set<std::string>{"0", "1", "2", "3", "4", "5"});

  CHECK(build_window(GroupDescriptor::Zn(2), WindowSpec::with_bound(2)).size() == 25);

  CHECK_THROWS_AS(build_window(z, WindowSpec::with_num_den(3, 4)), std::invalid_argument);
  CHECK_THROWS_AS(build_window(u2, WindowSpec::with_bound(3)), std::invalid_argument);
  try {
    build_window(z, WindowSpec::whole());
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("mismatched spec") == 0);
  }
}

TEST_CASE("windows are negation-closed, contain the identity, and are sorted") {
  struct Case {
    GroupDescriptor g;
    WindowSpec spec;
  };
  std::vector<Case> cases{
      {GroupDescriptor::Z(), WindowSpec::with_bound(5)},
      {GroupDescriptor::Q(), WindowSpec::with_num_den(4, 3)},
      {GroupDescriptor::Unitary(g_p(3)), WindowSpec::with_num_den(6, 9)},
      {GroupDescriptor::Zn(2), WindowSpec::with_bound(2)},
      {GroupDescriptor::Qn(2), WindowSpec::with_num_den(2, 2)},
  };
  for (const Case& c : cases) {
    std::vector<Element> w = build_window(c.g, c.spec);
    std::set<std::string> labels = label_set(w);
    CHECK(labels.count(identity(c.g).str()) == 1);
    for (const Element& x : w) CHECK(labels.count(negate(c.g, x).str()) == 1);
    for (std::size_t i = 0; i + 1 < w.size(); ++i) CHECK(w[i].str() < w[i + 1].str());
    CHECK(build_window(c.g, c.spec) == w);  // deterministic
  }
}

TEST_CASE("power graph of the N=2 window of Z") {
  WindowGraph g = power_graph(GroupDescriptor::Z(), WindowSpec::with_bound(2));
  CHECK(g.n() == 5);
  CHECK(edge_labels(g) == std::set<std::pair<std::string, std::string>>{
                              {"-1", "1"}, {"-1", "-2"}, {"-1", "2"}, {"-2", "1"}, {"1", "2"},
                              {"-2", "2"}});
  CHECK(g.degree(g.index_of("0")) == 0);
}

TEST_CASE("directed power graph of the N=2 window of Z") {
  WindowGraph g = directed_power_graph(GroupDescriptor::Z(), WindowSpec::with_bound(2));
  auto arcs = arc_labels(g);
  CHECK(arcs == std::set<std::pair<std::string, std::string>>{
                    {"1", "2"}, {"1", "-2"}, {"-1", "2"}, {"-1", "-2"}, {"1", "-1"}, {"-1", "1"},
                    {"2", "-2"}, {"-2", "2"}});
  // arcs symmetrize to the edge set
  WindowGraph u = power_graph(GroupDescriptor::Z(), WindowSpec::with_bound(2));
  std::set<std::pair<std::string, std::string>> sym;
  for (auto [a, b] : arcs) sym.insert({std::min(a, b), std::max(a, b)});
  CHECK(sym == edge_labels(u));
}

TEST_CASE("identity is the unique isolated vertex in torsion-free windows") {
  struct Case {
    GroupDescriptor g;
    WindowSpec spec;
  };
  std::vector<Case> cases{
      {GroupDescriptor::Z(), WindowSpec::with_bound(7)},
      {GroupDescriptor::Q(), WindowSpec::with_num_den(5, 4)},
      {GroupDescriptor::Unitary(g_p(2)), WindowSpec::with_num_den(8, 8)},
      {GroupDescriptor::Zn(2), WindowSpec::with_bound(3)},
  };
  for (const Case& c : cases) {
    WindowGraph g = power_graph(c.g, c.spec);
    std::string id = identity(c.g).str();
    for (int i = 0; i < g.n(); ++i) {
      CHECK((g.degree(i) == 0) == (g.label(i) == id));
    }
  }
}

TEST_CASE("C6 power graph is K6 minus two edges") {
  WindowGraph g = power_graph(GroupDescriptor::FiniteCyclic(6), WindowSpec::whole());
  CHECK(g.n() == 6);
  CHECK(g.edges().size() == 13);
  CHECK(!g.adjacent(g.index_of("2"), g.index_of("3")));
  CHECK(!g.adjacent(g.index_of("3"), g.index_of("4")));
  // every other pair is adjacent
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      std::set<std::string> pair{g.label(i), g.label(j)};
      bool missing = pair == std::set<std::string>{"2", "3"} ||
                     pair == std::set<std::string>{"3", "4"};
      CHECK(g.adjacent(i, j) == !missing);
    }
  }
}

TEST_CASE("s_set_window on frozen examples") {
  GroupDescriptor z = GroupDescriptor::Z();
  std::vector<Element> w20 = build_window(z, WindowSpec::with_bound(20));
  auto s = [&](long long a, long long b) {
    std::set<std::string> out;
    for (const Element& e :
         s_set_window(z, w20, Element({Rational(a)}), Element({Rational(b)}))) {
      out.insert(e.str());
    }
    return out;
  };
  CHECK(s(4, 2) == std::set<std::string>{"6", "-6", "10", "-10", "14", "-14", "18", "-18"});
  CHECK(s(2, 4).empty());
  CHECK(s(5, -5).empty());
  CHECK(s(-5, 5).empty());
  CHECK_THROWS_WITH_AS(
      s_set_window(z, w20, Element({Rational(2)}), Element({Rational(3)})),
      "S-set defined for adjacent pairs", std::invalid_argument);
  CHECK_THROWS_AS(
      s_set_window(z, w20, Element({Rational(2)}), Element({Rational(40)})),
      std::invalid_argument);  // outside the window
}

TEST_CASE("s_set_exact_Z on frozen examples") {
  SSetResult r = s_set_exact_Z(2, 12);
  CHECK(r.finite);
  std::set<std::string> members;
  for (const Element& e : r.members) members.insert(e.str());
  CHECK(members == std::set<std::string>{"3", "-3"});

  r = s_set_exact_Z(2, 4);
  CHECK(r.finite);
  CHECK(r.members.empty());

  r = s_set_exact_Z(4, 2);
  CHECK(!r.finite);
  CHECK(r.witness.str() == "6");
  CHECK(r.family.find("neither dividing nor divisible") != std::string::npos);

  r = s_set_exact_Z(5, -5);
  CHECK(r.finite);
  CHECK(r.members.empty());

  r = s_set_exact_Z(12, 2);
  CHECK(!r.finite);

  CHECK_THROWS_WITH_AS(s_set_exact_Z(2, 3), "S-set defined for adjacent pairs",
                       std::invalid_argument);
  CHECK_THROWS_AS(s_set_exact_Z(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(s_set_exact_Z(3, 3), std::invalid_argument);
}

TEST_CASE("exact finite S-sets equal windowed S-sets at N=|b| and beyond") {
  GroupDescriptor z = GroupDescriptor::Z();
  std::vector<Element> w50 = build_window(z, WindowSpec::with_bound(50));
  for (long long b = -50; b <= 50; ++b) {
    if (b == 0) continue;
    for (long long a : {1LL, -1LL, 2LL, -3LL, b / 2, -b}) {
      if (a == 0 || a == b || b % a != 0) continue;
      SSetResult exact = s_set_exact_Z(a, b);
      REQUIRE(exact.finite);
      CHECK(exact.members ==
            s_set_window(z, w50, Element({Rational(a)}), Element({Rational(b)})));
    }
  }
}

TEST_CASE("neighborhood complement split of x=2 in the N=12 window") {
  WindowGraph g = power_graph(GroupDescriptor::Z(), WindowSpec::with_bound(12));
  std::vector<std::vector<int>> split = neighborhood_complement_split(g, g.index_of("2"));
  auto comp_of = [&](const std::string& label) -> int {
    int idx = g.index_of(label);
    for (std::size_t c = 0; c < split.size(); ++c) {
      if (std::find(split[c].begin(), split[c].end(), idx) != split[c].end()) {
        return static_cast<int>(c);
      }
    }
    return -1;
  };
  CHECK(comp_of("4") == comp_of("6"));
  CHECK(comp_of("4") == comp_of("10"));
  CHECK(comp_of("4") == comp_of("-8"));
  CHECK(comp_of("1") != comp_of("4"));
  CHECK(comp_of("-1") != comp_of("4"));
  CHECK(comp_of("1") != comp_of("-1"));
  CHECK_THROWS_WITH_AS(neighborhood_complement_split(g, g.index_of("0")),
                       "identity has no neighborhood", std::invalid_argument);
}

TEST_CASE("a single-neighbour vertex splits into one singleton") {
  WindowGraph g = power_graph(GroupDescriptor::Zn(2), WindowSpec::with_bound(1));
  int v = g.index_of("(1,1)");
  CHECK(g.degree(v) == 1);
  std::vector<std::vector<int>> split = neighborhood_complement_split(g, v);
  CHECK(split.size() == 1);
  CHECK(split[0] == std::vector<int>{g.index_of("(-1,-1)")});
}

TEST_CASE("components partition the window") {
  WindowGraph g = power_graph(GroupDescriptor::Z(), WindowSpec::with_bound(6));
  std::vector<std::vector<int>> comps = components(g);
  CHECK(comps.size() == 2);  // identity + everything else
  std::size_t total = 0;
  for (const auto& c : comps) total += c.size();
  CHECK(total == static_cast<std::size_t>(g.n()));

  WindowGraph raw = WindowGraph::raw({"a", "b", "c"}, {}, {}, false);
  CHECK(components(raw).size() == 3);
}

TEST_CASE("automorphism orbits of K5 and small graphs") {
  std::vector<std::pair<int, int>> k5;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) k5.push_back({i, j});
  }
  WindowGraph g = WindowGraph::raw({"a", "b", "c", "d", "e"}, k5, {}, false);
  std::vector<std::vector<int>> orbits = automorphism_orbits(g);
  CHECK(orbits.size() == 1);
  CHECK(orbits[0] == std::vector<int>{0, 1, 2, 3, 4});

  // path a-b-c: ends swap, middle fixed
  WindowGraph path = WindowGraph::raw({"a", "b", "c"}, {{0, 1}, {1, 2}}, {}, false);
  CHECK(automorphism_orbits(path) ==
        std::vector<std::vector<int>>{{0, 2}, {1}});

  std::vector<std::string> labels(11);
  for (int i = 0; i < 11; ++i) labels[static_cast<std::size_t>(i)] = std::to_string(i);
  WindowGraph big = WindowGraph::raw(labels, {}, {}, false);
  CHECK_THROWS_WITH_AS(automorphism_orbits(big), "brute force bound exceeded",
                       std::invalid_argument);
}

TEST_CASE("C6 automorphism orbits") {
  WindowGraph g = power_graph(GroupDescriptor::FiniteCyclic(6), WindowSpec::whole());
  std::vector<std::vector<int>> want{
      {g.index_of("0"), g.index_of("1"), g.index_of("5")},
      {g.index_of("2"), g.index_of("4")},
      {g.index_of("3")}};
  for (auto& o : want) std::sort(o.begin(), o.end());
  std::sort(want.begin(), want.end());
  CHECK(automorphism_orbits(g) == want);
}

TEST_CASE("graph construction is deterministic") {
  GroupDescriptor u = GroupDescriptor::Unitary(g_p(2));
  WindowSpec spec = WindowSpec::with_num_den(10, 8);
  WindowGraph a = power_graph(u, spec);
  WindowGraph b = power_graph(u, spec);
  CHECK(a == b);
}
