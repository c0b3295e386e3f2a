#include "powergraph/orient.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace powergraph {

std::string verdict_str(EdgeVerdict v) {
  switch (v) {
    case EdgeVerdict::InversePair:
      return "InversePair";
    case EdgeVerdict::Forward:
      return "Forward";
    case EdgeVerdict::Backward:
      return "Backward";
    case EdgeVerdict::Undetermined:
      return "Undetermined";
  }
  return "";
}

EdgeClassification classify_edge_exact_Z(const BigInt& a, const BigInt& b) {
  SSetResult ab = s_set_exact_Z(a, b);
  SSetResult ba = s_set_exact_Z(b, a);
  EdgeClassification out;
  if (ab.finite) out.size_ab = ab.members.size();
  if (ba.finite) out.size_ba = ba.members.size();
  if (ab.finite && ba.finite && ab.members.empty() && ba.members.empty()) {
    out.verdict = EdgeVerdict::InversePair;
    out.evidence = "both exact S-sets empty";
  } else if (ab.finite && !ba.finite) {
    out.verdict = EdgeVerdict::Forward;
    out.evidence = "S(" + a.str() + "," + b.str() + ") finite with " +
                   std::to_string(ab.members.size()) + " members; reverse infinite: " + ba.family;
  } else if (!ab.finite && ba.finite) {
    out.verdict = EdgeVerdict::Backward;
    out.evidence = "S(" + b.str() + "," + a.str() + ") finite with " +
                   std::to_string(ba.members.size()) + " members; reverse infinite: " + ab.family;
  } else {
    out.verdict = EdgeVerdict::Undetermined;
    out.evidence = "unexpected S-set shape";
  }
  return out;
}

namespace {

/// related inside the window, from adjacency alone (reflexive).
inline bool rel(const WindowGraph& g, int c, int x) { return c == x || g.adjacent(c, x); }

std::size_t windowed_s_size(const WindowGraph& g, int a, int b) {
  std::size_t count = 0;
  for (int c = 0; c < g.n(); ++c) {
    if (rel(g, c, b) && !rel(g, c, a)) ++count;
  }
  return count;
}

EdgeVerdict margin_verdict(std::size_t s_ab, std::size_t s_ba, long long margin) {
  std::size_t m = margin < 0 ? 0 : static_cast<std::size_t>(margin);
  if (s_ab == 0 && s_ba == 0) return EdgeVerdict::InversePair;
  if (s_ab <= m && s_ba > m) return EdgeVerdict::Forward;
  if (s_ba <= m && s_ab > m) return EdgeVerdict::Backward;
  return EdgeVerdict::Undetermined;
}

}  // namespace

EdgeClassification classify_edge_window(const WindowGraph& g, int a, int b, long long margin) {
  if (a == b || !g.adjacent(a, b)) {
    throw std::invalid_argument("S-set defined for adjacent pairs");
  }
  EdgeClassification out;
  std::size_t s_ab = windowed_s_size(g, a, b);
  std::size_t s_ba = windowed_s_size(g, b, a);
  out.size_ab = s_ab;
  out.size_ba = s_ba;
  out.verdict = margin_verdict(s_ab, s_ba, margin);
  out.evidence = "windowed sizes |S_ab|=" + std::to_string(s_ab) +
                 ", |S_ba|=" + std::to_string(s_ba) + ", margin=" + std::to_string(margin);
  return out;
}

std::string OrientationReport::to_text(const WindowGraph& g) const {
  std::ostringstream out;
  for (const OrientationEdge& e : edges) {
    out << g.label(e.u) << " " << g.label(e.v) << " " << verdict_str(e.verdict) << " " << e.s_uv
        << " " << e.s_vu << "\n";
  }
  out << "edges: " << evaluated << "\n";
  out << "inverse-pairs: " << inverse_pairs << "\n";
  out << "forward: " << forward << "\n";
  out << "backward: " << backward << "\n";
  out << "undetermined: " << undetermined << "\n";
  out << "mismatches: " << mismatches.size() << "\n";
  for (const std::string& m : mismatches) out << "mismatch: " << m << "\n";
  return out.str();
}

OrientationReport recover_orientation(const WindowGraph& g, long long margin,
                                      long long core_bound, const WindowGraph* ground_truth) {
  int n = g.n();
  // A Z window always holds 2N+1 vertices; recover N without reading labels.
  long long N = (n - 1) / 2;
  if (N < 1) throw std::invalid_argument("window too small to orient");

  // Largest divisor count among 1..N: a finite S-set consists of divisors
  // of one endpoint and their negatives, so it can never exceed 2*d_max.
  std::vector<int> divisor_count(static_cast<std::size_t>(N) + 1, 0);
  for (long long d = 1; d <= N; ++d) {
    for (long long m = d; m <= N; m += d) ++divisor_count[static_cast<std::size_t>(m)];
  }
  std::size_t threshold = 2 * static_cast<std::size_t>(
                                  *std::max_element(divisor_count.begin() + 1, divisor_count.end()));

  const auto& edge_list = g.edges();
  std::size_t ecount = edge_list.size();
  std::vector<std::size_t> s_uv(ecount), s_vu(ecount);
  // verdict per edge, from the label-free pipeline
  std::vector<EdgeVerdict> verdict(ecount, EdgeVerdict::Undetermined);
  std::vector<std::string> how(ecount, "margin");
  std::vector<bool> resolved(ecount, false);
  std::vector<std::vector<int>> kout(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> kin(static_cast<std::size_t>(n));

  auto add_arc = [&](int from, int to) {
    kout[static_cast<std::size_t>(from)].push_back(to);
    kin[static_cast<std::size_t>(to)].push_back(from);
  };
  auto resolve = [&](std::size_t e, EdgeVerdict v, const std::string& h) {
    verdict[e] = v;
    how[e] = h;
    resolved[e] = true;
    auto [u, vv] = edge_list[e];
    if (v == EdgeVerdict::InversePair) {
      add_arc(u, vv);
      add_arc(vv, u);
    } else if (v == EdgeVerdict::Forward) {
      add_arc(u, vv);
    } else if (v == EdgeVerdict::Backward) {
      add_arc(vv, u);
    }
  };

  // Stage 1/2: exact inverse-pair rule and the sound size threshold.
  for (std::size_t e = 0; e < ecount; ++e) {
    auto [u, v] = edge_list[e];
    s_uv[e] = windowed_s_size(g, u, v);
    s_vu[e] = windowed_s_size(g, v, u);
    if (s_uv[e] == 0 && s_vu[e] == 0) {
      resolve(e, EdgeVerdict::InversePair, "exact");
    } else if (s_uv[e] > threshold && s_vu[e] <= threshold) {
      resolve(e, EdgeVerdict::Backward, "threshold");
    } else if (s_vu[e] > threshold && s_uv[e] <= threshold) {
      resolve(e, EdgeVerdict::Forward, "threshold");
    }
  }

  // Stage 3: propagate through y -> x -> z implies y -> z.  The hypothesis
  // u -> v dies if a known arc c -> u has c unrelated to v, or a known arc
  // v -> d has d unrelated to u.
  auto hypothesis_alive = [&](int u, int v) {
    for (int c : kin[static_cast<std::size_t>(u)]) {
      if (c != v && !rel(g, c, v)) return false;
    }
    for (int d : kout[static_cast<std::size_t>(v)]) {
      if (d != u && !rel(g, u, d)) return false;
    }
    return true;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t e = 0; e < ecount; ++e) {
      if (resolved[e]) continue;
      auto [u, v] = edge_list[e];
      bool fwd = hypothesis_alive(u, v);
      bool bwd = hypothesis_alive(v, u);
      if (fwd && !bwd) {
        resolve(e, EdgeVerdict::Forward, "propagation");
        changed = true;
      } else if (bwd && !fwd) {
        resolve(e, EdgeVerdict::Backward, "propagation");
        changed = true;
      } else if (!fwd && !bwd) {
        verdict[e] = EdgeVerdict::Undetermined;
        how[e] = "contradiction";
        resolved[e] = true;
        changed = true;
      }
    }
  }

  // Stage 4: the margin rule decides whatever propagation left open.
  for (std::size_t e = 0; e < ecount; ++e) {
    if (resolved[e]) continue;
    verdict[e] = margin_verdict(s_uv[e], s_vu[e], margin);
    how[e] = "margin";
  }

  // Report the core edges, by label.
  auto core_value = [&](int v) -> std::optional<BigInt> {
    try {
      return boost::multiprecision::abs(BigInt(g.label(v)));
    } catch (const std::runtime_error&) {
      return std::nullopt;
    }
  };
  OrientationReport report;
  for (std::size_t e = 0; e < ecount; ++e) {
    auto [u, v] = edge_list[e];
    auto cu = core_value(u), cv = core_value(v);
    if (!cu || !cv) throw std::invalid_argument("orientation recovery requires integer labels");
    if (*cu > core_bound || *cv > core_bound) continue;
    OrientationEdge oe;
    oe.u = u;
    oe.v = v;
    oe.verdict = verdict[e];
    oe.s_uv = s_uv[e];
    oe.s_vu = s_vu[e];
    oe.how = how[e];
    report.edges.push_back(oe);
    switch (verdict[e]) {
      case EdgeVerdict::InversePair:
        ++report.inverse_pairs;
        break;
      case EdgeVerdict::Forward:
        ++report.forward;
        break;
      case EdgeVerdict::Backward:
        ++report.backward;
        break;
      case EdgeVerdict::Undetermined:
        ++report.undetermined;
        break;
    }
    if (ground_truth != nullptr) {
      int tu = ground_truth->index_of(g.label(u));
      int tv = ground_truth->index_of(g.label(v));
      bool fwd = ground_truth->has_arc(tu, tv);
      bool bwd = ground_truth->has_arc(tv, tu);
      EdgeVerdict truth = fwd && bwd   ? EdgeVerdict::InversePair
                          : fwd        ? EdgeVerdict::Forward
                          : bwd        ? EdgeVerdict::Backward
                                       : EdgeVerdict::Undetermined;
      if (verdict[e] != EdgeVerdict::Undetermined && verdict[e] != truth) {
        report.mismatches.push_back(g.label(u) + " " + g.label(v) + ": recovered " +
                                    verdict_str(verdict[e]) + " (" + how[e] + "), truth " +
                                    verdict_str(truth));
      }
    }
  }
  report.evaluated = report.edges.size();
  return report;
}

Rational involution_phi(const Rational& a, const Rational& x) {
  if (a.is_zero()) throw std::invalid_argument("involution defined for nonzero a");
  if (x.is_zero()) return Rational(0);
  return a * a / x;
}

namespace {

void require_undirected_iso(const std::vector<int>& f, const WindowGraph& d1,
                            const WindowGraph& d2) {
  if (d1.n() != d2.n() || static_cast<int>(f.size()) != d1.n()) {
    throw std::invalid_argument("f not an undirected isomorphism");
  }
  std::vector<bool> hit(f.size(), false);
  for (int img : f) {
    if (img < 0 || img >= d2.n() || hit[static_cast<std::size_t>(img)]) {
      throw std::invalid_argument("f not an undirected isomorphism");
    }
    hit[static_cast<std::size_t>(img)] = true;
  }
  for (int i = 0; i < d1.n(); ++i) {
    for (int j = i + 1; j < d1.n(); ++j) {
      if (d1.adjacent(i, j) !=
          d2.adjacent(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)])) {
        throw std::invalid_argument("f not an undirected isomorphism");
      }
    }
  }
}

}  // namespace

std::vector<ComponentVerdict> decide_preserve_or_reverse(const std::vector<int>& f,
                                                         const WindowGraph& d1,
                                                         const WindowGraph& d2) {
  require_undirected_iso(f, d1, d2);
  std::vector<ComponentVerdict> out;
  for (const std::vector<int>& comp : components(d1)) {
    ComponentVerdict cv;
    cv.component = comp;
    bool all_preserve = true, all_reverse = true;
    for (int u : comp) {
      for (int v = 0; v < d1.n(); ++v) {
        if (u == v) continue;
        // strict arcs only: bidirectional pairs carry no orientation signal
        if (!d1.has_arc(u, v) || d1.has_arc(v, u)) continue;
        ++cv.strict_arcs;
        int fu = f[static_cast<std::size_t>(u)], fv = f[static_cast<std::size_t>(v)];
        bool img_fwd = d2.has_arc(fu, fv) && !d2.has_arc(fv, fu);
        bool img_bwd = d2.has_arc(fv, fu) && !d2.has_arc(fu, fv);
        if (!img_fwd) {
          if (all_preserve && cv.counterexample.empty()) {
            cv.counterexample = "arc " + d1.label(u) + " -> " + d1.label(v) +
                                " does not map to a forward arc";
          }
          all_preserve = false;
        }
        if (!img_bwd) {
          if (all_reverse && cv.counterexample.empty()) {
            cv.counterexample = "arc " + d1.label(u) + " -> " + d1.label(v) +
                                " does not map to a reversed arc";
          }
          all_reverse = false;
        }
      }
    }
    if (cv.strict_arcs == 0 || all_preserve) {
      cv.vote = ComponentVote::Preserves;
      cv.counterexample.clear();
    } else if (all_reverse) {
      cv.vote = ComponentVote::Reverses;
      cv.counterexample.clear();
    } else {
      cv.vote = ComponentVote::Neither;
    }
    out.push_back(std::move(cv));
  }
  return out;
}

IsoCheck verify_digraph_isomorphism(const std::vector<int>& f, const WindowGraph& d1,
                                    const WindowGraph& d2, IsoMode mode) {
  IsoCheck res;
  if (d1.n() != d2.n() || static_cast<int>(f.size()) != d1.n()) {
    res.counterexample = "f is not a bijection between the vertex sets";
    return res;
  }
  std::vector<bool> hit(f.size(), false);
  for (int img : f) {
    if (img < 0 || img >= d2.n() || hit[static_cast<std::size_t>(img)]) {
      res.counterexample = "f is not a bijection between the vertex sets";
      return res;
    }
    hit[static_cast<std::size_t>(img)] = true;
  }
  for (int u = 0; u < d1.n(); ++u) {
    for (int v = 0; v < d1.n(); ++v) {
      if (u == v) continue;
      int fu = f[static_cast<std::size_t>(u)], fv = f[static_cast<std::size_t>(v)];
      bool here = d1.has_arc(u, v);
      bool there = mode == IsoMode::Preserve ? d2.has_arc(fu, fv) : d2.has_arc(fv, fu);
      if (here != there) {
        res.counterexample = "arc " + d1.label(u) + " -> " + d1.label(v) + " is " +
                             (here ? "present" : "absent") + " but its image is " +
                             (there ? "present" : "absent");
        return res;
      }
    }
  }
  res.ok = true;
  return res;
}

}  // namespace powergraph
