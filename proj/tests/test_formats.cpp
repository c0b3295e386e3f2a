#include <string>

#include "doctest.h"
#include "powergraph/formats.hpp"

using namespace powergraph;

TEST_CASE("TSV output of the N=3 window of Z") {
  WindowGraph g = power_graph(GroupDescriptor::Z(), WindowSpec::with_bound(3));
  CHECK(emit_tsv(g) ==
        "# group=Z window=N=3 mode=undirected\n"
        "-1\t-2\n"
        "-1\t-3\n"
        "-1\t1\n"
        "-1\t2\n"
        "-1\t3\n"
        "-2\t1\n"
        "-2\t2\n"
        "-3\t1\n"
        "-3\t3\n"
        "1\t2\n"
        "1\t3\n");
}

TEST_CASE("TSV round trips are exact") {
  struct Case {
    GroupDescriptor g;
    WindowSpec spec;
    bool directed;
  };
  std::vector<Case> cases{
      {GroupDescriptor::Z(), WindowSpec::with_bound(6), false},
      {GroupDescriptor::Z(), WindowSpec::with_bound(6), true},
      {GroupDescriptor::Unitary(g_p(2)), WindowSpec::with_num_den(6, 4), true},
      {GroupDescriptor::Qn(2), WindowSpec::with_num_den(2, 2), false},
      {GroupDescriptor::FiniteCyclic(6), WindowSpec::whole(), false},
  };
  for (const Case& c : cases) {
    WindowGraph g = c.directed ? directed_power_graph(c.g, c.spec) : power_graph(c.g, c.spec);
    std::string text = emit_tsv(g);
    WindowGraph back = parse_tsv(text);
    CHECK(back == g);
    CHECK(emit_tsv(back) == text);
  }
}

TEST_CASE("TSV parsing keeps isolated vertices") {
  WindowGraph g = parse_tsv(emit_tsv(power_graph(GroupDescriptor::Z(), WindowSpec::with_bound(4))));
  CHECK(g.n() == 9);
  CHECK(g.degree(g.index_of("0")) == 0);
}

TEST_CASE("malformed TSV inputs are rejected") {
  CHECK_THROWS_WITH_AS(parse_tsv(""), "missing TSV header", std::invalid_argument);
  CHECK_THROWS_AS(parse_tsv("1\t2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tsv("# group=Z window=N=2 mode=sideways\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tsv("# group=Z window=N=2 mode=undirected\n1 2\n"),
                  std::invalid_argument);  // space, not tab
  CHECK_THROWS_WITH_AS(parse_tsv("# group=Z window=N=2 mode=undirected\n1\t7\n"),
                       "TSV vertex outside the declared window: 1\t7", std::invalid_argument);
  // body claims an edge the window does not have
  CHECK_THROWS_WITH_AS(
      parse_tsv("# group=Z window=N=2 mode=undirected\n-1\t1\n-1\t-2\n-1\t2\n-2\t1\n-2\t2\n"),
      "TSV body does not match the declared window", std::invalid_argument);
  // body omits an edge the window does have
  CHECK_THROWS_WITH_AS(parse_tsv("# group=Z window=N=1 mode=undirected\n"),
                       "TSV body does not match the declared window", std::invalid_argument);
}

TEST_CASE("DOT output, undirected and directed") {
  WindowGraph u = power_graph(GroupDescriptor::Z(), WindowSpec::with_bound(1));
  CHECK(emit_dot(u) ==
        "graph power {\n"
        "  \"-1\";\n"
        "  \"0\";\n"
        "  \"1\";\n"
        "  \"-1\" -- \"1\";\n"
        "}\n");

  WindowGraph d = directed_power_graph(GroupDescriptor::Z(), WindowSpec::with_bound(2));
  CHECK(emit_dot(d) ==
        "digraph power {\n"
        "  \"-1\";\n"
        "  \"-2\";\n"
        "  \"0\";\n"
        "  \"1\";\n"
        "  \"2\";\n"
        "  \"-1\" -> \"-2\";\n"
        "  \"-1\" -> \"1\" [dir=both];\n"
        "  \"-1\" -> \"2\";\n"
        "  \"-2\" -> \"2\" [dir=both];\n"
        "  \"1\" -> \"-2\";\n"
        "  \"1\" -> \"2\";\n"
        "}\n");
}
