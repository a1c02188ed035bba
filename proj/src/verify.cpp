#include "toughspec/verify.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "toughspec/quotient.hpp"
#include "toughspec/spectra.hpp"

namespace toughspec {

std::string theorem_name(Theorem t) {
  switch (t) {
    case Theorem::T11_I: return "T11_I";
    case Theorem::T11_II: return "T11_II";
    case Theorem::T12_I: return "T12_I";
    case Theorem::T12_II: return "T12_II";
  }
  return "?";
}

Theorem parse_theorem_name(const std::string& name) {
  std::string norm;
  for (char c : name) norm += (c == '-') ? '_' : static_cast<char>(std::toupper(c));
  for (Theorem t : {Theorem::T11_I, Theorem::T11_II, Theorem::T12_I, Theorem::T12_II})
    if (theorem_name(t) == norm) return t;
  throw std::invalid_argument("unknown theorem \"" + name + "\"");
}

ExactRatio TheoremId::level() const {
  switch (id) {
    case Theorem::T11_I: return ExactRatio(tau, 1);
    case Theorem::T11_II: return ExactRatio(1, tau_inv);
    case Theorem::T12_I: return ExactRatio(r, 1);
    case Theorem::T12_II: return ExactRatio(1, r_inv);
  }
  return ExactRatio::infinite();
}

std::vector<FamilySpec> TheoremId::extremal_candidates() const {
  switch (id) {
    case Theorem::T11_I: return {FamilySpec::tough_int(n, tau)};
    case Theorem::T11_II: return {FamilySpec::tough_frac_delta(n, tau_inv, delta)};
    case Theorem::T12_I:
      if (r >= 1 && n % (2 * r) == 0) return {FamilySpec::bip_int_div(n, r)};
      return {FamilySpec::bip_int_nondiv_a(n, r), FamilySpec::bip_int_nondiv_b(n, r)};
    case Theorem::T12_II: return {FamilySpec::bip_frac(n, r_inv)};
  }
  return {};
}

void TheoremId::validate() const {
  for (const auto& spec : extremal_candidates()) spec.validate();
}

Threshold threshold(const TheoremId& t) {
  t.validate();
  Threshold out;
  bool first = true;
  for (const auto& spec : t.extremal_candidates()) {
    auto fg = build_family(spec);
    const double rho = spectral_radius(fg.graph).radius;
    out.candidates.emplace_back(spec, rho);
    if (first || rho > out.rho) {
      out.rho = rho;
      out.family = spec;
      out.extremal = std::move(fg);
      first = false;
    }
  }
  return out;
}

std::string status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::ConsistentBelow: return "CONSISTENT_BELOW";
    case VerdictStatus::ConsistentTough: return "CONSISTENT_TOUGH";
    case VerdictStatus::ConsistentExtremal: return "CONSISTENT_EXTREMAL";
    case VerdictStatus::Counterexample: return "COUNTEREXAMPLE";
  }
  return "?";
}

namespace {

bool is_clique(const Graph& g, const VertexSet& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.has_edge(vs[i], vs[j])) return false;
  return true;
}

// K_s join (K_clique + isolated K_1).
bool matches_clique_join(const Graph& g, int s, int clique, int isolated) {
  const int n = s + clique + isolated;
  if (g.order() != n) return false;

  std::vector<int> expected;
  expected.insert(expected.end(), static_cast<std::size_t>(s), n - 1);
  expected.insert(expected.end(), static_cast<std::size_t>(clique), isolated == 0 ? n - 1 : s + clique - 1);
  expected.insert(expected.end(), static_cast<std::size_t>(isolated), s);
  std::vector<int> actual;
  for (Vertex v = 0; v < n; ++v) actual.push_back(g.degree(v));
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  if (actual != expected) return false;

  VertexSet universal;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) universal.push_back(v);
  if (isolated == 0) return static_cast<int>(universal.size()) == n;
  if (static_cast<int>(universal.size()) != s) return false;

  std::vector<int> sizes;
  const Graph rest = delete_vertices(g, universal);
  for (const auto& comp : rest.components()) {
    if (!is_clique(rest, comp)) return false;
    sizes.push_back(static_cast<int>(comp.size()));
  }
  std::vector<int> want(static_cast<std::size_t>(isolated), 1);
  want.push_back(clique);
  std::sort(sizes.begin(), sizes.end());
  std::sort(want.begin(), want.end());
  return sizes == want;
}

// K_{p,q} bipartite-join O_{a,b} on balanced sides, i.e. K_{n/2,n/2} minus a
// complete K_{a,b} between X2 and Y2 (up to swapping the sides).
bool matches_missing_biclique(const Graph& g, int a, int b) {
  auto sides = two_coloring(g);
  if (!sides || !sides->balanced() || !g.is_connected()) return false;
  const int half = static_cast<int>(sides->x.size());
  if (g.order() != 2 * half) return false;

  VertexSet x2, y2;
  for (Vertex v : sides->x)
    if (g.degree(v) < half) x2.push_back(v);
  for (Vertex v : sides->y)
    if (g.degree(v) < half) y2.push_back(v);
  const auto nx = static_cast<long long>(x2.size()), ny = static_cast<long long>(y2.size());
  if (static_cast<long long>(g.size()) != 1LL * half * half - nx * ny) return false;
  for (Vertex u : x2)
    for (Vertex v : y2)
      if (g.has_edge(u, v)) return false;
  return (nx == a && ny == b) || (nx == b && ny == a);
}

}  // namespace

bool matches_extremal(const Graph& g, const FamilySpec& spec) {
  const int n = spec.n;
  switch (spec.family) {
    case Family::ToughInt:
      return matches_clique_join(g, spec.tau - 1, n - spec.tau, 1);
    case Family::ToughFracDelta: {
      const int b = spec.tau_inv, d = spec.delta;
      return matches_clique_join(g, d, n - (b + 1) * d - 1, b * d + 1);
    }
    case Family::BipIntDiv:
      return matches_missing_biclique(g, 1, n / (2 * spec.r));
    case Family::BipIntNondivA: {
      const int f = n / (2 * spec.r);
      return matches_missing_biclique(g, n / 2 - spec.r * f + 1, f);
    }
    case Family::BipIntNondivB:
      return matches_missing_biclique(g, n / 2 - spec.r + 1, 1);
    case Family::BipFrac:
      return matches_missing_biclique(g, n / 2 - 1, spec.r_inv + 1);
  }
  return false;
}

Verdict check_graph_against_theorem(const Graph& g, const TheoremId& t,
                                    const EnumerationOptions& opts) {
  return check_graph_against_theorem(g, t, threshold(t), opts);
}

Verdict check_graph_against_theorem(const Graph& g, const TheoremId& t, const Threshold& thr,
                                    const EnumerationOptions& opts) {
  t.validate();
  if (g.order() != t.n)
    throw HypothesisError("graph order " + std::to_string(g.order()) + " differs from n = " +
                          std::to_string(t.n));
  if (!g.is_connected()) throw HypothesisError("graph must be connected");
  if (t.id == Theorem::T11_II && g.min_degree() != t.delta)
    throw HypothesisError("minimum degree " + std::to_string(g.min_degree()) +
                          " differs from delta = " + std::to_string(t.delta));
  std::optional<SidePartition> sides;
  if (t.bipartite()) {
    sides = two_coloring(g);
    if (!sides) throw HypothesisError("graph is not bipartite");
    if (!sides->balanced()) throw HypothesisError("bipartite graph is not balanced");
  }

  Verdict v;
  v.rho = spectral_radius(g).radius;
  v.threshold = thr.rho;
  if (v.rho < thr.rho - kThresholdTolerance) {
    v.status = VerdictStatus::ConsistentBelow;
    return v;
  }

  bool tough = false;
  if (t.bipartite()) {
    auto result = bipartite_toughness(g, *sides, BipartiteKind::TauB, opts);
    tough = result.value >= t.level();
    if (!tough) v.witness = std::move(result.witness);
  } else {
    auto verdict = is_tau_tough(g, t.level(), opts);
    tough = verdict.tough;
    v.witness = std::move(verdict.witness);
  }
  if (tough) {
    v.status = VerdictStatus::ConsistentTough;
    return v;
  }
  for (const auto& [spec, rho] : thr.candidates) {
    if (rho >= thr.rho - kThresholdTolerance && matches_extremal(g, spec)) {
      v.status = VerdictStatus::ConsistentExtremal;
      return v;
    }
  }
  v.status = VerdictStatus::Counterexample;
  return v;
}

std::vector<RemarkRow> reproduce_remark() {
  struct Published {
    int r, n;
    double a, b;
  };
  constexpr Published kRows[] = {{3, 38, 18.472, 18.499}, {10, 270, 134.46, 134.50},
                                 {10, 402, 200.81, 200.50}};
  std::vector<RemarkRow> rows;
  for (const auto& p : kRows) {
    RemarkRow row;
    row.r = p.r;
    row.n = p.n;
    row.printed_a = p.a;
    row.printed_b = p.b;
    const auto ga = build_family(FamilySpec::bip_int_nondiv_a(p.n, p.r));
    const auto gb = build_family(FamilySpec::bip_int_nondiv_b(p.n, p.r));
    row.rho_a = spectral_radius(ga.graph).radius;
    row.rho_b = spectral_radius(gb.graph).radius;
    // Average degree bounds rho from below.
    const auto root = [&](const FamilyGraph& fg) {
      const double avg = 2.0 * static_cast<double>(fg.graph.size()) / p.n;
      return largest_real_root(char_poly(quotient_matrix(fg.graph, fg.partition)), avg, p.n / 2.0);
    };
    row.root_a = root(ga);
    row.root_b = root(gb);
    row.winner = row.rho_a > row.rho_b ? 'A' : 'B';
    rows.push_back(row);
  }
  return rows;
}

std::string bound_name(Bound b) {
  switch (b) {
    case Bound::Hong: return "HONG";
    case Bound::Nosal: return "NOSAL";
    case Bound::Degree: return "DEGREE";
  }
  return "?";
}

Bound parse_bound_name(const std::string& name) {
  std::string norm;
  for (char c : name) norm += static_cast<char>(std::toupper(c));
  for (Bound b : {Bound::Hong, Bound::Nosal, Bound::Degree})
    if (bound_name(b) == norm) return b;
  throw std::invalid_argument("unknown bound \"" + name + "\"");
}

bool bound_equality_structure(const Graph& g, Bound bound) {
  const int n = g.order();
  switch (bound) {
    case Bound::Hong: {
      if (g.is_complete()) return true;
      return n >= 2 && g.size() == static_cast<std::size_t>(n - 1) && g.max_degree() == n - 1;
    }
    case Bound::Degree: {
      const int delta = g.min_degree();
      for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) != delta && g.degree(v) != n - 1) return false;
      return true;
    }
    case Bound::Nosal: {
      if (g.size() == 0) return true;
      const VertexSet* nontrivial = nullptr;
      const auto comps = g.components();
      for (const auto& c : comps) {
        if (c.size() < 2) continue;
        if (nontrivial) return false;
        nontrivial = &c;
      }
      const Graph h = delete_vertices(g, [&] {
        VertexSet others;
        for (const auto& c : comps)
          if (&c != nontrivial) others.insert(others.end(), c.begin(), c.end());
        return others;
      }());
      auto sides = two_coloring(h);
      return sides && h.size() == sides->x.size() * sides->y.size();
    }
  }
  return false;
}

BoundReport check_bound(const Graph& g, Bound bound) {
  const double n = g.order();
  const double m = static_cast<double>(g.size());
  const int delta = g.min_degree();
  BoundReport rep;
  rep.bound = bound;
  switch (bound) {
    case Bound::Hong:
      if (delta < 1) throw HypothesisError("Hong's bound needs a graph without isolated vertices");
      rep.rhs = std::sqrt(2 * m - n + 1);
      break;
    case Bound::Degree:
      if (delta < 1) throw HypothesisError("degree bound needs minimum degree >= 1");
      rep.rhs = (delta - 1) / 2.0 + std::sqrt(2 * m - n * delta + (delta + 1) * (delta + 1) / 4.0);
      break;
    case Bound::Nosal:
      if (!two_coloring(g)) throw HypothesisError("Nosal's bound needs a bipartite graph");
      rep.rhs = std::sqrt(m);
      break;
  }
  rep.lhs = spectral_radius(g).radius;
  rep.slack = rep.rhs - rep.lhs;
  rep.equality_case = rep.slack <= 1e-7 && bound_equality_structure(g, bound);
  return rep;
}

BrouwerReport brouwer_margin(const Graph& g, const EnumerationOptions& opts) {
  if (!g.is_connected()) throw HypothesisError("graph must be connected");
  if (!g.is_regular()) throw HypothesisError("graph must be regular");
  if (g.is_complete()) throw HypothesisError("graph must not be complete");
  BrouwerReport rep;
  auto t = toughness(g, opts);
  rep.t = t.value;
  rep.witness = std::move(t.witness);
  rep.d = g.degree(0);
  rep.lambda = second_largest_absolute_eigenvalue(g);
  rep.margin = rep.t.to_double() - (rep.d / rep.lambda - 1);
  return rep;
}

}  // namespace toughspec
