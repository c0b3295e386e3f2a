#include "powergraph/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "powergraph/formats.hpp"
#include "powergraph/verify.hpp"

namespace powergraph {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Group grammar: Z, Z^d, Q, Q^d, U:<heightfile>, U{...}, C<k>.
GroupDescriptor parse_group_arg(const std::string& s) {
  if (s.rfind("U:", 0) == 0) {
    return GroupDescriptor::Unitary(parse_height_file(read_file(s.substr(2))));
  }
  return GroupDescriptor::parse(s);
}

WindowSpec spec_from_flags(const GroupDescriptor& g, long long bound, long long num_bound,
                           long long den_bound) {
  switch (g.kind()) {
    case GroupKind::Z:
    case GroupKind::Zn:
      if (bound < 1) throw UsageError("--bound N (N >= 1) required for group " + g.str());
      return WindowSpec::with_bound(bound);
    case GroupKind::Q:
    case GroupKind::Qn:
    case GroupKind::Unitary:
      if (num_bound < 1 || den_bound < 1) {
        throw UsageError("--num-bound and --den-bound (>= 1) required for group " + g.str());
      }
      return WindowSpec::with_num_den(num_bound, den_bound);
    case GroupKind::FiniteCyclic:
      return WindowSpec::whole();
  }
  throw UsageError("unsupported group descriptor");
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file: " + path);
  f << content;
}

std::string vote_str(ComponentVote v) {
  switch (v) {
    case ComponentVote::Preserves:
      return "Preserves";
    case ComponentVote::Reverses:
      return "Reverses";
    case ComponentVote::Neither:
      return "Neither";
  }
  return "";
}

/// Shared tail of iso-check: report per-component votes, verify in the
/// expected mode, throw CheckFailure with the first counterexample.
void report_isomorphism(const std::vector<int>& f, const WindowGraph& d1, const WindowGraph& d2,
                        IsoMode expected, std::ostream& out) {
  std::vector<ComponentVerdict> votes = decide_preserve_or_reverse(f, d1, d2);
  for (std::size_t i = 0; i < votes.size(); ++i) {
    const ComponentVerdict& cv = votes[i];
    out << "component " << i << " (size " << cv.component.size() << ", strict arcs "
        << cv.strict_arcs << "): " << vote_str(cv.vote) << "\n";
  }
  std::string mode = expected == IsoMode::Preserve ? "Preserve" : "Reverse";
  IsoCheck iso = verify_digraph_isomorphism(f, d1, d2, expected);
  out << "digraph isomorphism (" << mode << "): " << (iso.ok ? "verified" : "failed") << "\n";
  if (!iso.ok) throw CheckFailure(iso.counterexample);
  ComponentVote want =
      expected == IsoMode::Preserve ? ComponentVote::Preserves : ComponentVote::Reverses;
  for (const ComponentVerdict& cv : votes) {
    if (cv.strict_arcs > 0 && cv.vote != want) {
      throw CheckFailure("component voted " + vote_str(cv.vote) + " instead of " +
                         vote_str(want) + ": " + cv.counterexample);
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite windows of power graphs of torsion-free abelian groups"};
  app.name("powergraph");
  app.require_subcommand(0, 1);

  std::string group_str, format = "tsv", out_path, a_str, b_str, phi_a = "1";
  long long bound = 0, num_bound = 0, den_bound = 0, margin = 8, core = 0;
  long long swap_p = 2, swap_q = 3;
  bool directed = false, exact = false;
  std::string map_kind;
  std::vector<std::string> equiv_files;
  std::string cardinality_file;
  std::uint64_t seed = 42;
  std::vector<std::string> only_checks;

  CLI::App* gen = app.add_subcommand("generate", "Materialize a power-graph window");
  gen->add_option("--group", group_str, "Group descriptor (Z, Z^2, Q, Q^3, U:<heightfile>, C6)")
      ->required();
  gen->add_option("--bound", bound, "Coordinate bound N for Z / Z^n windows");
  gen->add_option("--num-bound", num_bound, "Numerator bound D for Q / Q^n / U windows");
  gen->add_option("--den-bound", den_bound, "Denominator bound H for Q / Q^n / U windows");
  gen->add_flag("--directed", directed, "Emit the directed power graph");
  gen->add_option("--format", format, "Output format: tsv or dot")
      ->check(CLI::IsMember({"tsv", "dot"}));
  gen->add_option("--out", out_path, "Output file (default stdout)");

  CLI::App* ori = app.add_subcommand("orient", "Recover arc directions from undirected structure");
  ori->add_option("--group", group_str, "Group descriptor (Z only)")->required();
  ori->add_option("--bound", bound, "Window bound N")->required();
  ori->add_option("--margin", margin, "S-set size margin for the fallback rule");
  ori->add_option("--core", core, "Core bound for reported edges (default N/3)");
  ori->add_option("--out", out_path, "Output file (default stdout)");

  CLI::App* sset = app.add_subcommand("sset", "List an S-set, windowed or exact");
  sset->add_option("--group", group_str, "Group descriptor")->required();
  sset->add_option("--bound", bound, "Window bound N for Z / Z^n");
  sset->add_option("--num-bound", num_bound, "Numerator bound D");
  sset->add_option("--den-bound", den_bound, "Denominator bound H");
  sset->add_option("--a", a_str, "First element")->required();
  sset->add_option("--b", b_str, "Second element")->required();
  sset->add_flag("--exact", exact, "Exact verdict over all of Z (group Z only)");

  CLI::App* hts = app.add_subcommand("heights", "Height-function queries");
  hts->add_option("--equiv", equiv_files, "Two height files to compare for equivalence")
      ->expected(2);
  hts->add_option("--cardinality", cardinality_file,
                  "Height file: classify in-neighbour cardinality");

  CLI::App* iso = app.add_subcommand("iso-check", "Verify an explicit isomorphism on a window");
  iso->add_option("--map", map_kind, "Map to check: phi, prime-swap, or identity")
      ->required()
      ->check(CLI::IsMember({"phi", "prime-swap", "identity"}));
  iso->add_option("--a", phi_a, "Centre a of phi_a(x) = a^2/x");
  iso->add_option("--p", swap_p, "Source prime for prime-swap");
  iso->add_option("--q", swap_q, "Target prime for prime-swap");
  iso->add_option("--group", group_str, "Group descriptor for identity map");
  iso->add_option("--bound", bound, "Window bound N for Z / Z^n");
  iso->add_option("--num-bound", num_bound, "Numerator bound D");
  iso->add_option("--den-bound", den_bound, "Denominator bound H");

  CLI::App* ver = app.add_subcommand("verify", "Run the named invariant suites");
  ver->add_option("--seed", seed, "Seed for randomized instances");
  ver->add_option("--check", only_checks, "Run only the named checks (repeatable)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);

    if (app.get_subcommands().empty()) {
      out << app.help();
      return 0;
    }

    if (gen->parsed()) {
      GroupDescriptor g = parse_group_arg(group_str);
      WindowSpec spec = spec_from_flags(g, bound, num_bound, den_bound);
      WindowGraph w = directed ? directed_power_graph(g, spec) : power_graph(g, spec);
      write_output(out_path, format == "tsv" ? emit_tsv(w) : emit_dot(w), out);
      return 0;
    }

    if (ori->parsed()) {
      GroupDescriptor g = parse_group_arg(group_str);
      if (g.kind() != GroupKind::Z) {
        throw UsageError("orientation recovery is implemented for group Z");
      }
      WindowSpec spec = spec_from_flags(g, bound, num_bound, den_bound);
      WindowGraph undirected = power_graph(g, spec);
      WindowGraph truth = directed_power_graph(g, spec);
      long long core_bound = core > 0 ? core : bound / 3;
      OrientationReport r = recover_orientation(undirected, margin, core_bound, &truth);
      write_output(out_path, r.to_text(undirected), out);
      if (!r.mismatches.empty()) {
        err << "first mismatch: " << r.mismatches.front() << "\n";
        return 1;
      }
      return 0;
    }

    if (sset->parsed()) {
      GroupDescriptor g = parse_group_arg(group_str);
      if (exact) {
        if (g.kind() != GroupKind::Z) throw UsageError("--exact applies to group Z");
        SSetResult r = s_set_exact_Z(BigInt(a_str), BigInt(b_str));
        if (r.finite) {
          out << "finite\n";
          for (const Element& m : r.members) out << m.str() << "\n";
          out << "size: " << r.members.size() << "\n";
        } else {
          out << "infinite\n";
          out << "family: " << r.family << "\n";
          out << "witness: " << r.witness.str() << "\n";
        }
        return 0;
      }
      WindowSpec spec = spec_from_flags(g, bound, num_bound, den_bound);
      std::vector<Element> window = build_window(g, spec);
      std::vector<Element> members =
          s_set_window(g, window, Element::parse(g, a_str), Element::parse(g, b_str));
      for (const Element& m : members) out << m.str() << "\n";
      out << "size: " << members.size() << "\n";
      return 0;
    }

    if (hts->parsed()) {
      if (!equiv_files.empty() && !cardinality_file.empty()) {
        throw UsageError("choose one of --equiv and --cardinality");
      }
      if (!equiv_files.empty()) {
        HeightFunction h1 = parse_height_file(read_file(equiv_files[0]));
        HeightFunction h2 = parse_height_file(read_file(equiv_files[1]));
        EquivalenceWitness w = equivalence_witness(h1, h2);
        if (w.equivalent) {
          out << "equivalent (m=" << w.m.str() << ", n=" << w.n.str() << ")\n";
          return 0;
        }
        out << "not equivalent: " << w.detail << "\n";
        return 1;
      }
      if (!cardinality_file.empty()) {
        HeightFunction h = parse_height_file(read_file(cardinality_file));
        out << (classify_in_neighbour_cardinality(h) == InNeighbourCardinality::AllInfinite
                    ? "AllInfinite"
                    : "AllFinite")
            << "\n";
        return 0;
      }
      throw UsageError("heights requires --equiv or --cardinality");
    }

    if (iso->parsed()) {
      if (map_kind == "phi") {
        if (num_bound < 1 || den_bound < 1) {
          throw UsageError("--num-bound and --den-bound (>= 1) required for phi");
        }
        Rational a = Rational::parse(phi_a);
        std::vector<Element> window = phi_closed_window(a, num_bound, den_bound);
        WindowGraph d = power_graph_on(GroupDescriptor::Q(), window, true);
        out << "phi-closed window of " << window.size() << " vertices around a=" << a.str()
            << "\n";
        report_isomorphism(phi_index_map(a, d), d, d, IsoMode::Reverse, out);
        return 0;
      }
      if (map_kind == "prime-swap") {
        if (num_bound < 1 || den_bound < 1) {
          throw UsageError("--num-bound and --den-bound (>= 1) required for prime-swap");
        }
        BigInt p(swap_p), q(swap_q);
        GroupDescriptor gp = GroupDescriptor::Unitary(g_p(p));
        GroupDescriptor gq = GroupDescriptor::Unitary(g_p(q));
        std::vector<Element> domain =
            build_window(gp, WindowSpec::with_num_den(num_bound, den_bound));
        std::vector<Element> image;
        image.reserve(domain.size());
        for (const Element& x : domain) image.push_back(Element({prime_swap_iso(p, q, x.coords[0])}));
        WindowGraph d1 = power_graph_on(gp, domain, true);
        WindowGraph d2 = power_graph_on(gq, image, true);
        std::vector<int> f(static_cast<std::size_t>(d1.n()));
        for (int i = 0; i < d1.n(); ++i) {
          f[static_cast<std::size_t>(i)] =
              d2.index_of(prime_swap_iso(p, q, Rational::parse(d1.label(i))).str());
        }
        out << "swapping " << p.str() << " <-> " << q.str() << " on " << domain.size()
            << " vertices\n";
        report_isomorphism(f, d1, d2, IsoMode::Preserve, out);
        return 0;
      }
      // identity
      GroupDescriptor g = parse_group_arg(group_str.empty() ? "Z" : group_str);
      WindowSpec spec = spec_from_flags(g, bound, num_bound, den_bound);
      WindowGraph d = directed_power_graph(g, spec);
      std::vector<int> f(static_cast<std::size_t>(d.n()));
      for (int i = 0; i < d.n(); ++i) f[static_cast<std::size_t>(i)] = i;
      report_isomorphism(f, d, d, IsoMode::Preserve, out);
      return 0;
    }

    if (ver->parsed()) {
      std::vector<CheckResult> results = run_verify_suite(seed);
      for (const std::string& want : only_checks) {
        if (std::none_of(results.begin(), results.end(),
                         [&](const CheckResult& r) { return r.name == want; })) {
          err << "error: unknown check '" << want << "'; known checks:";
          for (const CheckResult& r : results) err << " " << r.name;
          err << "\n";
          return 2;
        }
      }
      bool all_pass = true;
      std::string first_failure;
      for (const CheckResult& r : results) {
        if (!only_checks.empty() &&
            std::find(only_checks.begin(), only_checks.end(), r.name) == only_checks.end()) {
          continue;
        }
        out << r.name << ": " << (r.pass ? "PASS" : "FAIL (" + r.detail + ")") << "\n";
        if (!r.pass && all_pass) {
          all_pass = false;
          first_failure = r.detail;
        }
      }
      if (!all_pass) {
        err << "first counterexample: " << first_failure << "\n";
        return 1;
      }
      return 0;
    }

    out << app.help();
    return 0;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const CheckFailure& e) {
    err << "first counterexample: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace powergraph
