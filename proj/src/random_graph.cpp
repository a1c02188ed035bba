#include "toughspec/random_graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace toughspec {

Rng sample_rng(std::uint64_t master, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

SidePartition balanced_sides(int n) {
  SidePartition s;
  for (Vertex v = 0; v < n / 2; ++v) s.x.push_back(v);
  for (Vertex v = n / 2; v < n; ++v) s.y.push_back(v);
  return s;
}

namespace {

bool coin(Rng& rng, double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

Graph random_regular(int n, int d, Rng& rng) {
  // Dense case: complement of a sparse regular graph.
  if (2 * d > n - 1) {
    const Graph sparse = random_regular(n, n - 1 - d, rng);
    std::vector<Edge> list;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (!sparse.has_edge(u, v)) list.emplace_back(u, v);
    return Graph(n, list);
  }
  // Pairing model: shuffle n*d points, pair consecutive ones, reject loops
  // and multi-edges.
  std::vector<Vertex> points;
  for (Vertex v = 0; v < n; ++v) points.insert(points.end(), static_cast<std::size_t>(d), v);
  constexpr int kAttempts = 100000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::shuffle(points.begin(), points.end(), rng);
    std::set<Edge> edges;
    bool ok = true;
    for (std::size_t i = 0; ok && i < points.size(); i += 2) {
      const Vertex u = std::min(points[i], points[i + 1]);
      const Vertex v = std::max(points[i], points[i + 1]);
      ok = u != v && edges.emplace(u, v).second;
    }
    if (ok) {
      std::vector<Edge> list(edges.begin(), edges.end());
      return Graph(n, list);
    }
  }
  throw std::runtime_error("pairing model found no simple graph after " +
                           std::to_string(kAttempts) + " attempts");
}

}  // namespace

Graph random_graph(const RandomModel& model, Rng& rng) {
  const int n = model.n;
  if (n < 1) throw std::invalid_argument("random graph needs at least one vertex");
  switch (model.kind) {
    case RandomModelKind::Gnp: {
      if (!(model.p >= 0 && model.p <= 1)) throw std::invalid_argument("p must lie in [0, 1]");
      std::vector<Edge> e;
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (coin(rng, model.p)) e.emplace_back(u, v);
      return Graph(n, e);
    }
    case RandomModelKind::Regular:
      if (model.d < 0 || model.d >= n) throw std::invalid_argument("need 0 <= d < n");
      if ((static_cast<long long>(n) * model.d) % 2 != 0)
        throw std::invalid_argument("n d must be even for a d-regular graph");
      return random_regular(n, model.d, rng);
    case RandomModelKind::BalancedBipartite: {
      if (n % 2 != 0) throw std::invalid_argument("balanced bipartite graph needs even n");
      if (!(model.p >= 0 && model.p <= 1)) throw std::invalid_argument("p must lie in [0, 1]");
      std::vector<Edge> e;
      for (Vertex u = 0; u < n / 2; ++u)
        for (Vertex v = n / 2; v < n; ++v)
          if (coin(rng, model.p)) e.emplace_back(u, v);
      return Graph(n, e);
    }
  }
  throw std::invalid_argument("unknown random model");
}

Graph random_graph(const RandomModel& model, std::uint64_t seed) {
  Rng rng(seed);
  return random_graph(model, rng);
}

}  // namespace toughspec
