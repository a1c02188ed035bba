#include "toughspec/search.hpp"

#include <algorithm>
#include <optional>
#include <thread>

#include "toughspec/random_graph.hpp"

namespace toughspec {
namespace {

constexpr int kAttempts = 1000;

Edge ordered(Vertex u, Vertex v) { return {std::min(u, v), std::max(u, v)}; }

// Pairs eligible for an edge: all pairs, or X-Y pairs when sides are given.
std::vector<Edge> candidate_pairs(const FamilyGraph& base) {
  std::vector<Edge> out;
  const int n = base.graph.order();
  if (base.sides) {
    for (Vertex u : base.sides->x)
      for (Vertex v : base.sides->y) out.push_back(ordered(u, v));
    std::sort(out.begin(), out.end());
  } else {
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) out.emplace_back(u, v);
  }
  return out;
}

// Toggles (or, with add_only, adds) one to three distinct eligible pairs.
Graph perturb(const FamilyGraph& base, bool add_only, Rng& rng) {
  const Graph& g = base.graph;
  std::vector<Edge> pool = candidate_pairs(base);
  if (add_only)
    std::erase_if(pool, [&](const Edge& e) { return g.has_edge(e.first, e.second); });
  if (pool.empty()) return g;
  std::shuffle(pool.begin(), pool.end(), rng);
  const auto k = std::min<std::size_t>(pool.size(), std::uniform_int_distribution<std::size_t>(1, 3)(rng));
  std::vector<Edge> add, remove;
  for (std::size_t i = 0; i < k; ++i)
    (g.has_edge(pool[i].first, pool[i].second) ? remove : add).push_back(pool[i]);
  return with_edges(g, add, remove);
}

// Lowers one vertex to degree delta by dropping edges to neighbours that can
// spare them.
Graph force_min_degree(const Graph& g, int delta, Rng& rng) {
  const Vertex v = std::uniform_int_distribution<Vertex>(0, g.order() - 1)(rng);
  std::vector<Vertex> nbrs(g.neighbors(v).begin(), g.neighbors(v).end());
  std::shuffle(nbrs.begin(), nbrs.end(), rng);
  std::vector<Edge> remove;
  int deg = g.degree(v);
  for (Vertex w : nbrs) {
    if (deg <= delta) break;
    if (g.degree(w) > delta) {
      remove.push_back(ordered(v, w));
      --deg;
    }
  }
  return with_edges(g, {}, remove);
}

bool admissible(const Graph& g, const TheoremId& t) {
  if (!g.is_connected()) return false;
  if (t.id == Theorem::T11_II && g.min_degree() != t.delta) return false;
  if (t.bipartite()) {
    auto sides = two_coloring(g);
    if (!sides || !sides->balanced()) return false;
  }
  return true;
}

std::optional<Graph> draw(const TheoremId& t, const Threshold& thr, std::uint64_t seed,
                          std::uint64_t index) {
  Rng rng = sample_rng(seed, index);
  const int n = t.n;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Graph g;
    switch (index % 4) {
      case 0:
      case 1: {
        const double lo = index % 4 == 0 ? 0.3 : 0.8;
        const double p = std::uniform_real_distribution<double>(lo, 1.0)(rng);
        g = t.bipartite() ? random_graph(RandomModel::balanced_bipartite(n, p), rng)
                          : random_graph(RandomModel::gnp(n, p), rng);
        break;
      }
      case 2: g = perturb(thr.extremal, false, rng); break;
      default: g = perturb(thr.extremal, true, rng); break;
    }
    if (t.id == Theorem::T11_II && g.min_degree() > t.delta) g = force_min_degree(g, t.delta, rng);
    if (admissible(g, t)) return g;
  }
  return std::nullopt;
}

}  // namespace

SearchReport search_counterexamples(const TheoremId& t, int samples, std::uint64_t seed,
                                    unsigned threads) {
  if (samples < 0) throw std::invalid_argument("samples must be nonnegative");
  SearchReport rep;
  rep.theorem = t;
  rep.seed = seed;
  for (auto s : {VerdictStatus::ConsistentBelow, VerdictStatus::ConsistentTough,
                 VerdictStatus::ConsistentExtremal, VerdictStatus::Counterexample})
    rep.histogram[status_name(s)] = 0;
  t.validate();
  if (samples == 0) return rep;

  const Threshold thr = threshold(t);
  struct Slot {
    std::optional<Graph> graph;
    Verdict verdict;
  };
  std::vector<Slot> slots(static_cast<std::size_t>(samples));
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      slots[i].graph = draw(t, thr, seed, i);
      if (slots[i].graph) slots[i].verdict = check_graph_against_theorem(*slots[i].graph, t, thr);
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(samples));
  if (threads <= 1) {
    work(0, slots.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (slots.size() + threads - 1) / threads;
    for (std::size_t b = 0; b < slots.size(); b += chunk)
      pool.emplace_back(work, b, std::min(slots.size(), b + chunk));
  }

  for (auto& slot : slots) {
    if (!slot.graph) continue;
    ++rep.checked;
    ++rep.histogram[status_name(slot.verdict.status)];
    if (slot.verdict.status == VerdictStatus::Counterexample)
      rep.counterexamples.push_back({std::move(*slot.graph), std::move(slot.verdict)});
  }
  return rep;
}

}  // namespace toughspec
