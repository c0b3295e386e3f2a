#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "powergraph/cli.hpp"
#include "powergraph/formats.hpp"
#include "powergraph/graphs.hpp"
#include "powergraph/heights.hpp"
#include "powergraph/orient.hpp"
#include "powergraph/verify.hpp"

namespace py = pybind11;
using namespace powergraph;

namespace {

HeightFunction height_from_dict(const py::dict& d) {
  std::map<BigInt, HeightValue> entries;
  for (auto item : d) {
    BigInt p(item.first.cast<long long>());
    if (py::isinstance<py::str>(item.second)) {
      if (item.second.cast<std::string>() != "inf") {
        throw std::invalid_argument("height values are integers or 'inf'");
      }
      entries[p] = HeightValue::inf();
    } else {
      entries[p] = HeightValue::fin(item.second.cast<long long>());
    }
  }
  return HeightFunction::from_entries(entries);
}

py::dict height_to_dict(const HeightFunction& h) {
  py::dict out;
  for (const auto& [p, v] : h.support()) {
    py::int_ key(p.convert_to<long long>());
    if (v.infinite) {
      out[key] = py::str("inf");
    } else {
      out[key] = py::int_(v.finite);
    }
  }
  return out;
}

GroupDescriptor group_of(const std::string& descriptor) {
  return GroupDescriptor::parse(descriptor);
}

py::object opt_size(const std::optional<std::size_t>& s) {
  if (!s) return py::none();
  return py::int_(*s);
}

py::tuple classification_tuple(const EdgeClassification& c) {
  return py::make_tuple(verdict_str(c.verdict), opt_size(c.size_ab), opt_size(c.size_ba));
}

std::vector<std::vector<std::string>> relabel(const WindowGraph& g,
                                              const std::vector<std::vector<int>>& groups) {
  std::vector<std::vector<std::string>> out;
  for (const auto& grp : groups) {
    std::vector<std::string> labels;
    for (int v : grp) labels.push_back(g.label(v));
    out.push_back(std::move(labels));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite windows of power graphs of torsion-free abelian groups";

  py::class_<WindowGraph>(m, "Graph")
      .def_property_readonly("n", &WindowGraph::n)
      .def_property_readonly("directed", &WindowGraph::directed)
      .def_property_readonly("group", &WindowGraph::descriptor_str)
      .def_property_readonly("window", &WindowGraph::spec_str)
      .def_property_readonly("labels", &WindowGraph::labels)
      .def("label", &WindowGraph::label, py::arg("i"))
      .def("index_of", &WindowGraph::index_of, py::arg("label"))
      .def("adjacent", &WindowGraph::adjacent, py::arg("i"), py::arg("j"))
      .def("has_arc", &WindowGraph::has_arc, py::arg("i"), py::arg("j"))
      .def("degree", &WindowGraph::degree, py::arg("i"))
      .def("edges", &WindowGraph::edges)
      .def("arcs", &WindowGraph::arcs)
      .def("__eq__", [](const WindowGraph& a, const WindowGraph& b) { return a == b; })
      .def("__repr__", [](const WindowGraph& g) {
        std::ostringstream s;
        s << "Graph(group=" << g.descriptor_str() << ", window=" << g.spec_str()
          << ", n=" << g.n() << (g.directed() ? ", directed" : "") << ")";
        return s.str();
      });

  // arithmetic
  m.def(
      "factorize",
      [](long long n) {
        std::vector<std::pair<long long, long long>> out;
        for (const PrimePower& pp : factorize(BigInt(n))) {
          out.push_back({pp.prime.convert_to<long long>(), pp.exponent});
        }
        return out;
      },
      py::arg("n"));
  m.def(
      "valuation",
      [](const std::string& x, long long p) { return valuation(Rational::parse(x), BigInt(p)); },
      py::arg("x"), py::arg("p"));
  m.def(
      "divisors",
      [](long long n) {
        std::vector<long long> out;
        for (const BigInt& d : divisors(BigInt(n))) out.push_back(d.convert_to<long long>());
        return out;
      },
      py::arg("n"));

  // height functions (dicts {prime: exponent or "inf"})
  m.def(
      "g_p", [](long long p) { return height_to_dict(g_p(BigInt(p))); }, py::arg("p"));
  m.def(
      "scale_height",
      [](const py::dict& h, long long m) { return height_to_dict(scale(height_from_dict(h), m)); },
      py::arg("h"), py::arg("m"));
  m.def(
      "heights_equivalent",
      [](const py::dict& h, const py::dict& f) {
        return equivalent(height_from_dict(h), height_from_dict(f));
      },
      py::arg("h"), py::arg("f"));
  m.def(
      "equivalence_witness",
      [](const py::dict& h, const py::dict& f) {
        EquivalenceWitness w = equivalence_witness(height_from_dict(h), height_from_dict(f));
        return py::make_tuple(w.equivalent, w.m.str(), w.n.str(), w.detail);
      },
      py::arg("h"), py::arg("f"));
  m.def(
      "classify_cardinality",
      [](const py::dict& h) {
        return classify_in_neighbour_cardinality(height_from_dict(h)) ==
                       InNeighbourCardinality::AllInfinite
                   ? "AllInfinite"
                   : "AllFinite";
      },
      py::arg("h"));
  m.def(
      "height_contains",
      [](const py::dict& h, const std::string& x) {
        return contains(height_from_dict(h), Rational::parse(x));
      },
      py::arg("h"), py::arg("x"));
  m.def(
      "prime_swap",
      [](long long p, long long q, const std::string& x) {
        return prime_swap_iso(BigInt(p), BigInt(q), Rational::parse(x)).str();
      },
      py::arg("p"), py::arg("q"), py::arg("x"));
  m.def(
      "parse_height_file",
      [](const std::string& text) { return height_to_dict(parse_height_file(text)); },
      py::arg("text"));
  m.def(
      "serialize_height_file",
      [](const py::dict& h) { return serialize_height_file(height_from_dict(h)); }, py::arg("h"));

  // group elements (strings against a descriptor string)
  m.def(
      "identity",
      [](const std::string& group) { return identity(group_of(group)).str(); },
      py::arg("group"));
  m.def(
      "arc",
      [](const std::string& group, const std::string& x, const std::string& y) {
        GroupDescriptor g = group_of(group);
        return arc(g, Element::parse(g, x), Element::parse(g, y));
      },
      py::arg("group"), py::arg("x"), py::arg("y"));
  m.def(
      "adjacent",
      [](const std::string& group, const std::string& x, const std::string& y) {
        GroupDescriptor g = group_of(group);
        return adjacent(g, Element::parse(g, x), Element::parse(g, y));
      },
      py::arg("group"), py::arg("x"), py::arg("y"));
  m.def(
      "negate",
      [](const std::string& group, const std::string& x) {
        GroupDescriptor g = group_of(group);
        return negate(g, Element::parse(g, x)).str();
      },
      py::arg("group"), py::arg("x"));
  m.def(
      "maximal_cyclic_generator",
      [](const std::string& group, const std::string& x) {
        GroupDescriptor g = group_of(group);
        return maximal_cyclic_generator(g, Element::parse(g, x)).str();
      },
      py::arg("group"), py::arg("x"));
  m.def(
      "same_component",
      [](const std::string& group, const std::string& x, const std::string& y) {
        GroupDescriptor g = group_of(group);
        return same_component(g, Element::parse(g, x), Element::parse(g, y));
      },
      py::arg("group"), py::arg("x"), py::arg("y"));

  // windows and graphs
  m.def(
      "build_window",
      [](const std::string& group, const std::string& spec) {
        std::vector<std::string> out;
        for (const Element& e : build_window(group_of(group), WindowSpec::parse(spec))) {
          out.push_back(e.str());
        }
        return out;
      },
      py::arg("group"), py::arg("spec"));
  m.def(
      "power_graph",
      [](const std::string& group, const std::string& spec, bool directed) {
        GroupDescriptor g = group_of(group);
        WindowSpec w = WindowSpec::parse(spec);
        return directed ? directed_power_graph(g, w) : power_graph(g, w);
      },
      py::arg("group"), py::arg("spec"), py::arg("directed") = false);
  m.def(
      "s_set_window",
      [](const std::string& group, const std::string& spec, const std::string& a,
         const std::string& b) {
        GroupDescriptor g = group_of(group);
        std::vector<std::string> out;
        for (const Element& e : s_set_window(g, build_window(g, WindowSpec::parse(spec)),
                                             Element::parse(g, a), Element::parse(g, b))) {
          out.push_back(e.str());
        }
        return out;
      },
      py::arg("group"), py::arg("spec"), py::arg("a"), py::arg("b"));
  m.def(
      "s_set_exact",
      [](long long a, long long b) {
        SSetResult r = s_set_exact_Z(BigInt(a), BigInt(b));
        py::dict out;
        out["finite"] = r.finite;
        if (r.finite) {
          std::vector<std::string> members;
          for (const Element& e : r.members) members.push_back(e.str());
          out["members"] = members;
        } else {
          out["family"] = r.family;
          out["witness"] = r.witness.str();
        }
        return out;
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "classify_edge_exact",
      [](long long a, long long b) {
        return classification_tuple(classify_edge_exact_Z(BigInt(a), BigInt(b)));
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "classify_edge_window",
      [](const WindowGraph& g, const std::string& a, const std::string& b, long long margin) {
        return classification_tuple(
            classify_edge_window(g, g.index_of(a), g.index_of(b), margin));
      },
      py::arg("graph"), py::arg("a"), py::arg("b"), py::arg("margin") = 8);
  m.def(
      "recover_orientation",
      [](const WindowGraph& g, long long core_bound, long long margin) {
        OrientationReport r = recover_orientation(g, margin, core_bound);
        py::dict out;
        out["evaluated"] = r.evaluated;
        out["inverse_pairs"] = r.inverse_pairs;
        out["forward"] = r.forward;
        out["backward"] = r.backward;
        out["undetermined"] = r.undetermined;
        out["text"] = r.to_text(g);
        return out;
      },
      py::arg("graph"), py::arg("core_bound"), py::arg("margin") = 8);
  m.def(
      "involution_phi",
      [](const std::string& a, const std::string& x) {
        return involution_phi(Rational::parse(a), Rational::parse(x)).str();
      },
      py::arg("a"), py::arg("x"));
  m.def(
      "components",
      [](const WindowGraph& g) { return relabel(g, components(g)); }, py::arg("graph"));
  m.def(
      "neighborhood_complement_split",
      [](const WindowGraph& g, const std::string& x) {
        return relabel(g, neighborhood_complement_split(g, g.index_of(x)));
      },
      py::arg("graph"), py::arg("x"));
  m.def(
      "automorphism_orbits",
      [](const WindowGraph& g) { return relabel(g, automorphism_orbits(g)); }, py::arg("graph"));

  // formats
  m.def("emit_tsv", &emit_tsv, py::arg("graph"));
  m.def("parse_tsv", &parse_tsv, py::arg("text"));
  m.def("emit_dot", &emit_dot, py::arg("graph"));

  // named invariant suites
  m.def(
      "verify",
      [](std::uint64_t seed) {
        std::vector<py::tuple> out;
        for (const CheckResult& c : run_verify_suite(seed)) {
          out.push_back(py::make_tuple(c.name, c.pass, c.detail));
        }
        return out;
      },
      py::arg("seed") = 42);

  // the full command-line interface, in process
  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
