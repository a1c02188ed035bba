#include "toughspec/lemmas.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "toughspec/families.hpp"
#include "toughspec/random_graph.hpp"
#include "toughspec/spectra.hpp"

namespace toughspec {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw HypothesisError(what);
}

ComparisonReport compare(Lemma lemma, Graph left, Graph right, bool left_smaller) {
  ComparisonReport rep{lemma, std::move(left), std::move(right)};
  rep.rho_left = spectral_radius(rep.left).radius;
  rep.rho_right = spectral_radius(rep.right).radius;
  rep.margin = left_smaller ? rep.rho_right - rep.rho_left : rep.rho_left - rep.rho_right;
  rep.holds = rep.margin > 0;
  return rep;
}

}  // namespace

std::string lemma_name(Lemma l) {
  switch (l) {
    case Lemma::L31: return "L31";
    case Lemma::L43: return "L43";
    case Lemma::L44: return "L44";
  }
  return "?";
}

Lemma parse_lemma_name(const std::string& name) {
  std::string norm;
  for (char c : name) norm += static_cast<char>(std::toupper(c));
  for (Lemma l : {Lemma::L31, Lemma::L43, Lemma::L44})
    if (lemma_name(l) == norm) return l;
  throw std::invalid_argument("unknown lemma \"" + name + "\"");
}

int L31Params::n() const { return s + std::accumulate(parts.begin(), parts.end(), 0); }

ComparisonReport check_lemma(const L31Params& p) {
  const int t = static_cast<int>(p.parts.size());
  require(p.s >= 1, "s >= 1 required");
  require(p.p >= 1, "p >= 1 required");
  require(t >= 2, "at least two parts required");
  require(std::is_sorted(p.parts.rbegin(), p.parts.rend()), "parts must be nonincreasing");
  require(p.parts.back() >= p.p, "every part must be at least p");
  const int big = p.n() - p.s - p.p * (t - 1);
  require(p.parts.front() < big, "n_1 < n - s - p(t-1) required (n_1 = " +
                                     std::to_string(p.parts.front()) + ", bound " +
                                     std::to_string(big) + ")");
  std::vector<int> extremal{big};
  extremal.insert(extremal.end(), static_cast<std::size_t>(t - 1), p.p);
  return compare(Lemma::L31, clique_join(p.s, p.parts), clique_join(p.s, extremal), true);
}

ComparisonReport check_lemma(const L43Params& p) {
  const int k = p.k, n = p.n;
  require(k >= 2, "k >= 2 required");
  require(n % 2 == 0, "n must be even");
  require(n >= 2 * k * k + 6 * k, "n >= 2k^2 + 6k required (n = " + std::to_string(n) +
                                      ", bound " + std::to_string(2 * k * k + 6 * k) + ")");
  require(n % (2 * k) == 0, "2k must divide n");
  const int h = n / 2, f = n / (2 * k);
  return compare(Lemma::L43, complete_minus_biclique(h - 1, h - f, 1, f).graph,
                 complete_minus_biclique(k - 1, h - 1, h - k + 1, 1).graph, false);
}

ComparisonReport check_lemma(const L44Params& p) {
  const int n = p.n, s = p.s;
  require(n % 2 == 0, "n must be even");
  require(s >= 1, "s >= 1 required");
  require(4 * s <= n - 4, "s <= (n-4)/4 required (s = " + std::to_string(s) + ", n = " +
                              std::to_string(n) + ")");
  const int h = n / 2;
  return compare(Lemma::L44, complete_minus_biclique(s, h - s - 1, h - s, s + 1).graph,
                 complete_minus_biclique(s + 1, h - s - 2, h - s - 1, s + 2).graph, false);
}

std::vector<L31Params> l31_grid() {
  std::vector<L31Params> out;
  std::set<std::pair<int, std::vector<int>>> seen;
  auto add = [&](int s, int p, std::vector<int> parts) {
    std::sort(parts.rbegin(), parts.rend());
    if (parts.back() < p) return;
    L31Params params{s, p, parts};
    const int t = static_cast<int>(parts.size());
    if (parts.front() >= params.n() - s - p * (t - 1)) return;
    if (!seen.emplace(s * 10 + p, parts).second) return;
    out.push_back(std::move(params));
  };
  for (int t = 2; t <= 6; ++t)
    for (int s = 1; s <= 3; ++s)
      for (int p = 1; p <= 2; ++p)
        for (int rest = t * p + 1; rest <= t * p + 40; ++rest) {
          // One short of the extremal split.
          std::vector<int> near(static_cast<std::size_t>(t), p);
          near[0] = rest - p * (t - 1) - 1;
          near[1] = p + 1;
          add(s, p, near);
          // As even as possible.
          std::vector<int> even(static_cast<std::size_t>(t), rest / t);
          for (int i = 0; i < rest % t; ++i) ++even[static_cast<std::size_t>(i)];
          add(s, p, even);
          // Two large parts, the rest minimal.
          std::vector<int> two(static_cast<std::size_t>(t), p);
          const int spare = rest - p * (t - 2);
          two[0] = spare - spare / 2;
          two[1] = spare / 2;
          add(s, p, two);
        }
  return out;
}

std::vector<L43Params> l43_grid() {
  std::vector<L43Params> out;
  for (int k = 2; k <= 6; ++k) {
    const int lo = 2 * k * k + 6 * k;
    for (int n = lo; n <= lo + 40; n += 2 * k) out.push_back({k, n});
  }
  return out;
}

std::vector<L44Params> l44_grid() {
  std::vector<L44Params> out;
  for (int s = 1; s <= 6; ++s)
    for (int n = 4 * s + 4; n <= 4 * s + 44; n += 2) out.push_back({n, s});
  return out;
}

RotationReport rotation_experiment(const Graph& g, const VertexSet& s1, const VertexSet& s2,
                                   const VertexSet& t) {
  if (!g.is_connected()) throw HypothesisError("graph must be connected");
  require(!s1.empty() && !s2.empty() && !t.empty(), "S1, S2 and T must be nonempty");
  std::vector<int> owner(static_cast<std::size_t>(g.order()), 0);
  for (const auto* set : {&s1, &s2, &t})
    for (Vertex v : *set) {
      if (v < 0 || v >= g.order()) throw GraphError("vertex out of range");
      require(owner[v]++ == 0, "S1, S2 and T must be pairwise disjoint");
    }
  std::vector<Edge> add, remove;
  for (Vertex j : t) {
    for (Vertex i : s1) {
      require(!g.has_edge(i, j), "e(T, S1) = 0 required");
      add.emplace_back(std::min(i, j), std::max(i, j));
    }
    for (Vertex i : s2) {
      require(g.has_edge(i, j), "e(T, S2) = |T||S2| required");
      remove.emplace_back(std::min(i, j), std::max(i, j));
    }
  }
  RotationReport rep{with_edges(g, add, remove)};
  const auto before = spectral_radius(g);
  rep.rho_before = before.radius;
  rep.rho_after = spectral_radius(rep.rotated).radius;
  for (Vertex v : s1) rep.sum_s1 += (*before.perron)(v);
  for (Vertex v : s2) rep.sum_s2 += (*before.perron)(v);
  rep.condition_holds = rep.sum_s1 >= rep.sum_s2;
  rep.increased = rep.rho_after > rep.rho_before;
  return rep;
}

std::vector<RotationConfig> random_rotation_configs(int count, std::uint64_t seed) {
  std::vector<RotationConfig> out;
  constexpr int kAttemptsPerConfig = 1000;
  for (int i = 0; static_cast<int>(out.size()) < count; ++i) {
    if (i >= count * kAttemptsPerConfig)
      throw std::runtime_error("could not generate enough rotation configurations");
    Rng rng = sample_rng(seed, static_cast<std::uint64_t>(i));
    const int n = std::uniform_int_distribution<int>(9, 50)(rng);
    const double p = std::uniform_real_distribution<double>(0.15, 0.6)(rng);
    const Graph base = random_graph(RandomModel::gnp(n, p), rng);

    VertexSet order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::uniform_int_distribution<int> size(1, 3);
    const auto nt = static_cast<std::size_t>(size(rng));
    const auto n1 = static_cast<std::size_t>(size(rng));
    const auto n2 = static_cast<std::size_t>(size(rng));
    VertexSet t(order.begin(), order.begin() + nt);
    VertexSet s1(order.begin() + nt, order.begin() + nt + n1);
    VertexSet s2(order.begin() + nt + n1, order.begin() + nt + n1 + n2);

    std::vector<Edge> add, remove;
    for (Vertex j : t) {
      for (Vertex v : s1)
        if (base.has_edge(v, j)) remove.emplace_back(std::min(v, j), std::max(v, j));
      for (Vertex v : s2)
        if (!base.has_edge(v, j)) add.emplace_back(std::min(v, j), std::max(v, j));
    }
    Graph g = with_edges(base, add, remove);
    if (!g.is_connected()) continue;
    const auto perron = *spectral_radius(g).perron;
    double a = 0, b = 0;
    for (Vertex v : s1) a += perron(v);
    for (Vertex v : s2) b += perron(v);
    if (a < b) continue;
    out.push_back({std::move(g), std::move(s1), std::move(s2), std::move(t)});
  }
  return out;
}

}  // namespace toughspec
