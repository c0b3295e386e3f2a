#include "powergraph/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "powergraph/formats.hpp"

namespace powergraph {

std::vector<Element> phi_closed_window(const Rational& a, long long num_bound,
                                       long long den_bound) {
  GroupDescriptor q = GroupDescriptor::Q();
  std::vector<Element> window = build_window(q, WindowSpec::with_num_den(num_bound, den_bound));
  std::set<std::string> present;
  for (const Element& x : window) present.insert(x.str());
  std::vector<Element> closed;
  for (const Element& x : window) {
    if (present.count(involution_phi(a, x.coords[0]).str())) closed.push_back(x);
  }
  return closed;
}

std::vector<int> phi_index_map(const Rational& a, const WindowGraph& g) {
  std::vector<int> f(static_cast<std::size_t>(g.n()));
  for (int i = 0; i < g.n(); ++i) {
    Rational x = Rational::parse(g.label(i));
    f[static_cast<std::size_t>(i)] = g.index_of(involution_phi(a, x).str());
  }
  return f;
}

namespace {

using Check = CheckResult (*)(std::mt19937_64&);

CheckResult pass(const std::string& name) { return {name, true, ""}; }
CheckResult fail(const std::string& name, const std::string& detail) {
  return {name, false, detail};
}

BigInt label_int(const WindowGraph& g, int v) { return BigInt(g.label(v)); }

CheckResult check_lemma_order(std::mt19937_64&) {
  const std::string name = "lemma-order";
  struct Case {
    GroupDescriptor g;
    WindowSpec spec;
  };
  std::vector<Case> cases{
      {GroupDescriptor::Z(), WindowSpec::with_bound(30)},
      {GroupDescriptor::Q(), WindowSpec::with_num_den(8, 5)},
      {GroupDescriptor::Unitary(g_p(2)), WindowSpec::with_num_den(10, 8)},
      {GroupDescriptor::Zn(2), WindowSpec::with_bound(3)},
  };
  for (const Case& c : cases) {
    WindowGraph w = power_graph(c.g, c.spec);
    std::string id = identity(c.g).str();
    for (int i = 0; i < w.n(); ++i) {
      bool isolated = w.degree(i) == 0;
      bool is_id = w.label(i) == id;
      if (isolated != is_id) {
        return fail(name, c.g.str() + " " + c.spec.str() + ": vertex " + w.label(i) +
                              (isolated ? " is isolated but not the identity"
                                        : " is the identity but not isolated"));
      }
    }
    for (int i = 0; i + 1 < w.n(); ++i) {
      if (!(w.label(i) < w.label(i + 1))) {
        return fail(name, c.g.str() + ": vertex order broken at " + w.label(i));
      }
    }
  }
  return pass(name);
}

CheckResult check_lemma_inverse(std::mt19937_64&) {
  const std::string name = "lemma-inverse";
  WindowGraph w = power_graph(GroupDescriptor::Z(), WindowSpec::with_bound(50));
  for (auto [u, v] : w.edges()) {
    EdgeClassification c = classify_edge_window(w, u, v, 0);
    bool both_empty = *c.size_ab == 0 && *c.size_ba == 0;
    bool inverse = label_int(w, u) == -label_int(w, v);
    if (both_empty != inverse) {
      return fail(name, "edge {" + w.label(u) + "," + w.label(v) + "}: both-empty=" +
                            (both_empty ? "yes" : "no") + " but inverse=" +
                            (inverse ? "yes" : "no"));
    }
  }
  return pass(name);
}

CheckResult check_lemma_finite(std::mt19937_64&) {
  const std::string name = "lemma-finite";
  GroupDescriptor z = GroupDescriptor::Z();
  std::vector<Element> w40 = build_window(z, WindowSpec::with_bound(40));
  for (long long b = -40; b <= 40; ++b) {
    if (b == 0) continue;
    for (long long a = -40; a <= 40; ++a) {
      if (a == 0 || a == b || b % a != 0) continue;
      SSetResult exact = s_set_exact_Z(a, b);
      if (!exact.finite) return fail(name, "S(" + std::to_string(a) + "," + std::to_string(b) +
                                               ") reported infinite for a | b");
      std::vector<Element> win =
          s_set_window(z, w40, Element({Rational(a)}), Element({Rational(b)}));
      if (exact.members != win) {
        return fail(name, "S(" + std::to_string(a) + "," + std::to_string(b) +
                              ") exact/windowed disagree: " + std::to_string(exact.members.size()) +
                              " vs " + std::to_string(win.size()));
      }
    }
  }
  // Infinite-side counts must grow strictly with the window.
  std::vector<Element> w80 = build_window(z, WindowSpec::with_bound(80));
  for (auto [a, b] : std::vector<std::pair<long long, long long>>{{4, 2}, {9, 3}, {6, 2}}) {
    std::size_t n40 =
        s_set_window(z, w40, Element({Rational(a)}), Element({Rational(b)})).size();
    std::size_t n80 =
        s_set_window(z, w80, Element({Rational(a)}), Element({Rational(b)})).size();
    if (!(n40 < n80)) {
      return fail(name, "infinite S(" + std::to_string(a) + "," + std::to_string(b) +
                            ") did not grow: " + std::to_string(n40) + " then " +
                            std::to_string(n80));
    }
  }
  return pass(name);
}

CheckResult complement_structure(const std::string& name, const GroupDescriptor& g,
                                 const WindowSpec& spec, const std::vector<std::string>& samples) {
  WindowGraph d = directed_power_graph(g, spec);
  for (const std::string& label : samples) {
    int x = d.index_of(label);
    std::vector<int> in_strict, out_strict;
    for (int y = 0; y < d.n(); ++y) {
      if (y == x) continue;
      bool fwd = d.has_arc(x, y), bwd = d.has_arc(y, x);
      if (fwd && !bwd) out_strict.push_back(y);
      if (bwd && !fwd) in_strict.push_back(y);
    }
    // Separation: a complement edge between I(x) and O(x) would contradict
    // y -> x -> z implies y -> z.
    for (int y : in_strict) {
      for (int z : out_strict) {
        if (!d.adjacent(y, z)) {
          return fail(name, g.str() + " x=" + label + ": complement edge between in-neighbour " +
                                d.label(y) + " and out-neighbour " + d.label(z));
        }
      }
    }
    // Connectivity of the complement on the strict out-neighbourhood.
    if (out_strict.size() > 1) {
      std::map<int, std::size_t> pos;
      for (std::size_t i = 0; i < out_strict.size(); ++i) pos[out_strict[i]] = i;
      std::vector<bool> seen(out_strict.size(), false);
      std::vector<int> stack{out_strict[0]};
      seen[0] = true;
      std::size_t reached = 0;
      while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        ++reached;
        for (int other : out_strict) {
          if (!seen[pos[other]] && !d.adjacent(cur, other)) {
            seen[pos[other]] = true;
            stack.push_back(other);
          }
        }
      }
      if (reached != out_strict.size()) {
        return fail(name, g.str() + " x=" + label + ": complement on O(x) disconnected (" +
                              std::to_string(reached) + "/" + std::to_string(out_strict.size()) +
                              ")");
      }
    }
  }
  return pass(name);
}

CheckResult check_lemma_q(std::mt19937_64&) {
  const std::string name = "lemma-Q";
  CheckResult r = complement_structure(name, GroupDescriptor::Z(), WindowSpec::with_bound(60),
                                       {"2", "3", "-5"});
  if (!r.pass) return r;
  return complement_structure(name, GroupDescriptor::Unitary(g_p(2)),
                              WindowSpec::with_num_den(60, 16), {"1/2", "3/4"});
}

CheckResult check_lemma_component(std::mt19937_64& rng) {
  const std::string name = "lemma-component";
  // Unitary subgroups are closed under subtraction.
  HeightFunction h = HeightFunction::from_entries(
      {{BigInt(2), HeightValue::inf()}, {BigInt(3), HeightValue::fin(2)}});
  std::vector<Element> window =
      build_window(GroupDescriptor::Unitary(h), WindowSpec::with_num_den(40, 32));
  std::uniform_int_distribution<std::size_t> pick(0, window.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational& x = window[pick(rng)].coords[0];
    const Rational& y = window[pick(rng)].coords[0];
    if (!contains(h, x - y)) {
      return fail(name, "subtraction escaped the subgroup: " + x.str() + " - " + y.str());
    }
  }
  // Z^2: the maximal-cyclic generator is constant on components up to sign.
  GroupDescriptor z2 = GroupDescriptor::Zn(2);
  WindowGraph w = power_graph(z2, WindowSpec::with_bound(6));
  std::string id = identity(z2).str();
  for (const std::vector<int>& comp : components(w)) {
    if (comp.size() == 1 && w.label(comp[0]) == id) continue;
    Element gen = maximal_cyclic_generator(z2, Element::parse(z2, w.label(comp[0])));
    Element neg = negate(z2, gen);
    for (int v : comp) {
      Element g2 = maximal_cyclic_generator(z2, Element::parse(z2, w.label(v)));
      if (g2 != gen && g2 != neg) {
        return fail(name, "component of " + w.label(comp[0]) + " holds generator " + g2.str());
      }
    }
  }
  return pass(name);
}

CheckResult check_lemma_isomorphism(std::mt19937_64&) {
  const std::string name = "lemma-isomorphism";
  GroupDescriptor q = GroupDescriptor::Q();
  Rational a(2);
  std::vector<Element> window = phi_closed_window(a, 12, 8);
  WindowGraph d = power_graph_on(q, window, true);
  std::vector<int> f = phi_index_map(a, d);
  for (int i = 0; i < d.n(); ++i) {
    if (f[static_cast<std::size_t>(f[static_cast<std::size_t>(i)])] != i) {
      return fail(name, "phi is not an involution at " + d.label(i));
    }
  }
  for (const ComponentVerdict& cv : decide_preserve_or_reverse(f, d, d)) {
    if (cv.strict_arcs > 0 && cv.vote != ComponentVote::Reverses) {
      return fail(name, "phi component vote was not Reverses: " + cv.counterexample);
    }
  }
  IsoCheck iso = verify_digraph_isomorphism(f, d, d, IsoMode::Reverse);
  if (!iso.ok) return fail(name, iso.counterexample);
  return pass(name);
}

CheckResult check_thm_orientation(std::mt19937_64&) {
  const std::string name = "thm-orientation";
  GroupDescriptor z = GroupDescriptor::Z();
  WindowSpec spec = WindowSpec::with_bound(60);
  WindowGraph undirected = power_graph(z, spec);
  WindowGraph truth = directed_power_graph(z, spec);
  OrientationReport r = recover_orientation(undirected, 8, 20, &truth);
  if (!r.mismatches.empty()) return fail(name, r.mismatches.front());
  if (r.undetermined != 0) {
    return fail(name, std::to_string(r.undetermined) + " core edges left undetermined");
  }
  return pass(name);
}

CheckResult check_thm_uniquecyclic(std::mt19937_64&) {
  const std::string name = "thm-uniquecyclic";
  GroupDescriptor z2 = GroupDescriptor::Zn(2);
  long long n = 5;
  WindowGraph w = power_graph(z2, WindowSpec::with_bound(n));
  std::string id = identity(z2).str();
  std::set<std::string> generator_classes;
  std::size_t nontrivial = 0;
  for (const std::vector<int>& comp : components(w)) {
    if (comp.size() == 1 && w.label(comp[0]) == id) continue;
    ++nontrivial;
    std::set<std::string> gens;
    for (int v : comp) {
      Element g = maximal_cyclic_generator(z2, Element::parse(z2, w.label(v)));
      Element c = std::min(g, negate(z2, g));
      gens.insert(c.str());
    }
    if (gens.size() != 1) {
      return fail(name, "component mixes generators: " + *gens.begin() + " and " +
                            *std::next(gens.begin()));
    }
    generator_classes.insert(*gens.begin());
  }
  // Independent enumeration of primitive vectors up to sign.
  std::size_t primitive = 0;
  for (long long a = -n; a <= n; ++a) {
    for (long long b = -n; b <= n; ++b) {
      if (a == 0 && b == 0) continue;
      if (boost::multiprecision::gcd(BigInt(a < 0 ? -a : a), BigInt(b < 0 ? -b : b)) != 1)
        continue;
      if (a > 0 || (a == 0 && b > 0)) ++primitive;
    }
  }
  if (nontrivial != primitive || generator_classes.size() != primitive) {
    return fail(name, "components " + std::to_string(nontrivial) + ", generator classes " +
                          std::to_string(generator_classes.size()) + ", primitive vectors " +
                          std::to_string(primitive));
  }
  return pass(name);
}

CheckResult check_thm_q1_dichotomy(std::mt19937_64&) {
  const std::string name = "thm-q1-dichotomy";
  // Identity map on a Z window.
  WindowGraph d = directed_power_graph(GroupDescriptor::Z(), WindowSpec::with_bound(20));
  std::vector<int> idmap(static_cast<std::size_t>(d.n()));
  for (int i = 0; i < d.n(); ++i) idmap[static_cast<std::size_t>(i)] = i;
  for (const ComponentVerdict& cv : decide_preserve_or_reverse(idmap, d, d)) {
    if (cv.vote == ComponentVote::Neither) {
      return fail(name, "identity map voted Neither: " + cv.counterexample);
    }
  }
  // phi over several centres.
  for (const std::string& centre : {"1", "2", "3/2"}) {
    Rational a = Rational::parse(centre);
    std::vector<Element> window = phi_closed_window(a, 12, 8);
    WindowGraph dq = power_graph_on(GroupDescriptor::Q(), window, true);
    std::vector<int> f = phi_index_map(a, dq);
    for (const ComponentVerdict& cv : decide_preserve_or_reverse(f, dq, dq)) {
      if (cv.vote == ComponentVote::Neither) {
        return fail(name, "phi_" + centre + " voted Neither: " + cv.counterexample);
      }
    }
  }
  return pass(name);
}

CheckResult check_thm_prime_swap(std::mt19937_64&) {
  const std::string name = "thm-prime-swap";
  GroupDescriptor g2 = GroupDescriptor::Unitary(g_p(2));
  GroupDescriptor g3 = GroupDescriptor::Unitary(g_p(3));
  std::vector<Element> domain = build_window(g2, WindowSpec::with_num_den(40, 16));
  std::vector<Element> image;
  image.reserve(domain.size());
  for (const Element& x : domain) {
    image.push_back(Element({prime_swap_iso(2, 3, x.coords[0])}));
  }
  std::set<std::string> distinct;
  for (const Element& y : image) distinct.insert(y.str());
  if (distinct.size() != image.size()) return fail(name, "prime swap not injective");
  WindowGraph d1 = power_graph_on(g2, domain, true);
  WindowGraph d2 = power_graph_on(g3, image, true);
  std::vector<int> f(static_cast<std::size_t>(d1.n()));
  for (int i = 0; i < d1.n(); ++i) {
    Rational x = Rational::parse(d1.label(i));
    f[static_cast<std::size_t>(i)] = d2.index_of(prime_swap_iso(2, 3, x).str());
  }
  IsoCheck iso = verify_digraph_isomorphism(f, d1, d2, IsoMode::Preserve);
  if (!iso.ok) return fail(name, iso.counterexample);
  for (const ComponentVerdict& cv : decide_preserve_or_reverse(f, d1, d2)) {
    if (cv.strict_arcs > 0 && cv.vote != ComponentVote::Preserves) {
      return fail(name, "prime swap vote was not Preserves: " + cv.counterexample);
    }
  }
  return pass(name);
}

HeightFunction random_height(std::mt19937_64& rng) {
  static const long long primes[5] = {2, 3, 5, 7, 11};
  std::uniform_int_distribution<int> val(0, 5);  // 5 encodes infinity
  std::map<BigInt, HeightValue> entries;
  for (long long p : primes) {
    int v = val(rng);
    if (v == 0) continue;
    entries[BigInt(p)] = v == 5 ? HeightValue::inf() : HeightValue::fin(v);
  }
  return HeightFunction::from_entries(entries);
}

/// Exhaustive witness search for m*h == n*f over exponent vectors of m;
/// n's exponents are then forced, so the search is complete.
bool oracle_equivalent(const HeightFunction& h, const HeightFunction& f) {
  static const long long primes[5] = {2, 3, 5, 7, 11};
  for (long long p : primes) {
    bool hi = h.at(p).infinite, fi = f.at(p).infinite;
    if (hi != fi) return false;
  }
  std::vector<long long> hv, fv;
  for (long long p : primes) {
    if (h.at(p).infinite) continue;
    hv.push_back(h.at(p).finite);
    fv.push_back(f.at(p).finite);
  }
  std::size_t k = hv.size();
  std::vector<long long> e(k, 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < k; ++i) {
      if (hv[i] + e[i] - fv[i] < 0) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
    std::size_t i = 0;
    while (i < k && e[i] == 8) e[i++] = 0;
    if (i == k) return false;
    ++e[i];
  }
}

CheckResult check_thm_height_equivalence(std::mt19937_64& rng) {
  const std::string name = "thm-height-equivalence";
  std::vector<HeightFunction> pool;
  for (int i = 0; i < 40; ++i) pool.push_back(random_height(rng));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const HeightFunction& a = pool[pick(rng)];
    const HeightFunction& b = pool[pick(rng)];
    const HeightFunction& c = pool[pick(rng)];
    if (!equivalent(a, a)) return fail(name, "reflexivity failed for " + a.str());
    if (equivalent(a, b) != equivalent(b, a)) {
      return fail(name, "symmetry failed for " + a.str() + ", " + b.str());
    }
    if (equivalent(a, b) && equivalent(b, c) && !equivalent(a, c)) {
      return fail(name, "transitivity failed for " + a.str() + ", " + b.str() + ", " + c.str());
    }
  }
  std::uniform_int_distribution<long long> mdist(1, 30);
  for (int trial = 0; trial < 50; ++trial) {
    const HeightFunction& h = pool[pick(rng)];
    long long m = mdist(rng);
    if (!equivalent(h, scale(h, m))) {
      return fail(name, "scale by " + std::to_string(m) + " broke equivalence for " + h.str());
    }
  }
  for (int trial = 0; trial < 60; ++trial) {
    const HeightFunction& a = pool[pick(rng)];
    const HeightFunction& b = pool[pick(rng)];
    if (equivalent(a, b) != oracle_equivalent(a, b)) {
      return fail(name, "oracle disagrees on " + a.str() + " vs " + b.str());
    }
  }
  return pass(name);
}

CheckResult check_example_c6(std::mt19937_64&) {
  const std::string name = "example-c6";
  WindowGraph w = power_graph(GroupDescriptor::FiniteCyclic(6), WindowSpec::whole());
  if (w.edges().size() != 13) {
    return fail(name, "expected 13 edges, got " + std::to_string(w.edges().size()));
  }
  for (auto [u, v] : std::vector<std::pair<std::string, std::string>>{{"2", "3"}, {"3", "4"}}) {
    if (w.adjacent(w.index_of(u), w.index_of(v))) {
      return fail(name, "unexpected edge {" + u + "," + v + "}");
    }
  }
  std::vector<std::vector<int>> want{{w.index_of("0"), w.index_of("1"), w.index_of("5")},
                                     {w.index_of("2"), w.index_of("4")},
                                     {w.index_of("3")}};
  for (auto& o : want) std::sort(o.begin(), o.end());
  std::sort(want.begin(), want.end());
  if (automorphism_orbits(w) != want) return fail(name, "orbit partition mismatch");
  return pass(name);
}

CheckResult check_lemma_cardinalities(std::mt19937_64&) {
  const std::string name = "lemma-cardinalities";
  auto in_count = [](const HeightFunction& h, long long den_bound) {
    GroupDescriptor g = GroupDescriptor::Unitary(h);
    WindowGraph d = directed_power_graph(g, WindowSpec::with_num_den(20, den_bound));
    int one = d.index_of("1");
    std::size_t count = 0;
    for (int y = 0; y < d.n(); ++y) {
      if (y != one && d.has_arc(y, one)) ++count;
    }
    return count;
  };
  HeightFunction inf2 = g_p(2);
  if (classify_in_neighbour_cardinality(inf2) != InNeighbourCardinality::AllInfinite) {
    return fail(name, "g_2 classified AllFinite");
  }
  if (!(in_count(inf2, 8) < in_count(inf2, 32))) {
    return fail(name, "in-neighbour count of 1 in G_2 failed to grow");
  }
  HeightFunction fin = HeightFunction::from_entries({{BigInt(2), HeightValue::fin(5)}});
  if (classify_in_neighbour_cardinality(fin) != InNeighbourCardinality::AllFinite) {
    return fail(name, "{2:5} classified AllInfinite");
  }
  if (in_count(fin, 32) != in_count(fin, 128) || in_count(fin, 32) != 11) {
    return fail(name, "{2:5} in-neighbour count failed to stabilize at 11");
  }
  HeightFunction zero;
  if (classify_in_neighbour_cardinality(zero) != InNeighbourCardinality::AllFinite) {
    return fail(name, "all-zero height classified AllInfinite");
  }
  if (in_count(zero, 8) != 1) return fail(name, "all-zero height should give exactly {-1}");
  return pass(name);
}

CheckResult check_formats_roundtrip(std::mt19937_64&) {
  const std::string name = "formats-roundtrip";
  struct Case {
    GroupDescriptor g;
    WindowSpec spec;
    bool directed;
  };
  std::vector<Case> cases{
      {GroupDescriptor::Z(), WindowSpec::with_bound(10), false},
      {GroupDescriptor::Z(), WindowSpec::with_bound(6), true},
      {GroupDescriptor::Unitary(g_p(2)), WindowSpec::with_num_den(6, 4), true},
      {GroupDescriptor::FiniteCyclic(6), WindowSpec::whole(), false},
  };
  for (const Case& c : cases) {
    WindowGraph w =
        c.directed ? directed_power_graph(c.g, c.spec) : power_graph(c.g, c.spec);
    WindowGraph back = parse_tsv(emit_tsv(w));
    if (!(back == w)) return fail(name, c.g.str() + " " + c.spec.str() + " round trip changed");
    if (emit_tsv(back) != emit_tsv(w)) {
      return fail(name, c.g.str() + " round trip not byte-identical");
    }
  }
  return pass(name);
}

}  // namespace

std::vector<CheckResult> run_verify_suite(std::uint64_t seed) {
  std::vector<std::pair<std::string, Check>> checks{
      {"lemma-order", check_lemma_order},
      {"lemma-inverse", check_lemma_inverse},
      {"lemma-finite", check_lemma_finite},
      {"lemma-Q", check_lemma_q},
      {"lemma-component", check_lemma_component},
      {"lemma-isomorphism", check_lemma_isomorphism},
      {"lemma-cardinalities", check_lemma_cardinalities},
      {"thm-orientation", check_thm_orientation},
      {"thm-uniquecyclic", check_thm_uniquecyclic},
      {"thm-q1-dichotomy", check_thm_q1_dichotomy},
      {"thm-prime-swap", check_thm_prime_swap},
      {"thm-height-equivalence", check_thm_height_equivalence},
      {"example-c6", check_example_c6},
      {"formats-roundtrip", check_formats_roundtrip},
  };
  std::vector<CheckResult> out;
  out.reserve(checks.size());
  for (auto& [label, fn] : checks) {
    std::mt19937_64 rng(seed);
    CheckResult r = fn(rng);
    r.name = label;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace powergraph
