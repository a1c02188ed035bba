#include "toughspec/graph.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <set>

namespace toughspec {

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw GraphError("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") has an endpoint outside [0, " + std::to_string(n) + ")");
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (Vertex u = 0; u < n; ++u) {
    auto& nb = adj_[u];
    std::sort(nb.begin(), nb.end());
    auto dup = std::adjacent_find(nb.begin(), nb.end());
    if (dup != nb.end())
      throw GraphError("duplicate edge (" + std::to_string(std::min(u, *dup)) + ", " +
                       std::to_string(std::max(u, *dup)) + ")");
  }
  edge_count_ = edges.size();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= order()) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int Graph::min_degree() const {
  int d = order() == 0 ? 0 : degree(0);
  for (Vertex v = 1; v < order(); ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (Vertex v = 0; v < order(); ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::is_complete() const {
  const auto n = static_cast<std::size_t>(order());
  return edge_count_ == n * (n - (n > 0 ? 1 : 0)) / 2;
}

bool Graph::is_regular() const { return min_degree() == max_degree(); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  std::vector<char> seen(adj_.size(), 0);
  for (Vertex s = 0; s < order(); ++s) {
    if (seen[s]) continue;
    VertexSet comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (Vertex w : adj_[comp[head]])
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::is_connected() const { return order() > 0 && components().size() == 1; }

void check_sides(const Graph& g, const SidePartition& sides) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  auto mark = [&](const VertexSet& vs, int label) {
    for (Vertex v : vs) {
      if (v < 0 || v >= g.order()) throw GraphError("side vertex out of range");
      if (side[v] != -1) throw GraphError("vertex " + std::to_string(v) + " is on both sides");
      side[v] = label;
    }
  };
  mark(sides.x, 0);
  mark(sides.y, 1);
  for (Vertex v = 0; v < g.order(); ++v)
    if (side[v] == -1) throw GraphError("vertex " + std::to_string(v) + " has no side");
  for (auto [u, v] : g.edges())
    if (side[u] == side[v])
      throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") lies inside one side");
}

std::optional<SidePartition> two_coloring(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          q.push(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  SidePartition sides;
  for (Vertex v = 0; v < g.order(); ++v) (color[v] == 0 ? sides.x : sides.y).push_back(v);
  return sides;
}

Graph complete(int n) {
  if (n < 1) throw GraphError("complete graph needs at least one vertex");
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

BipartiteGraph complete_bipartite(int p, int q) {
  if (p < 1 || q < 1) throw GraphError("complete bipartite graph needs two nonempty sides");
  BipartiteGraph b;
  std::vector<Edge> e;
  for (Vertex u = 0; u < p; ++u) {
    b.sides.x.push_back(u);
    for (Vertex v = p; v < p + q; ++v) e.emplace_back(u, v);
  }
  for (Vertex v = p; v < p + q; ++v) b.sides.y.push_back(v);
  b.graph = Graph(p + q, e);
  return b;
}

BipartiteGraph empty_bipartite(int a, int b) {
  if (a < 0 || b < 0 || a + b < 1) throw GraphError("empty bipartite graph needs a vertex");
  BipartiteGraph out;
  out.graph = empty_graph(a + b);
  for (Vertex v = 0; v < a; ++v) out.sides.x.push_back(v);
  for (Vertex v = a; v < a + b; ++v) out.sides.y.push_back(v);
  return out;
}

Graph empty_graph(int n) {
  if (n < 1) throw GraphError("graph needs at least one vertex");
  return Graph(n, {});
}

Graph cycle(int n) {
  if (n < 3) throw GraphError("cycle needs at least three vertices");
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
  return Graph(n, e);
}

Graph path(int n) {
  if (n < 1) throw GraphError("path needs at least one vertex");
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);      // outer 5-cycle
    e.emplace_back(i, i + 5);            // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, e);
}

Graph disjoint_union(std::span<const Graph> parts) {
  if (parts.empty()) throw GraphError("disjoint union of no graphs");
  std::vector<Edge> e;
  int offset = 0;
  for (const Graph& g : parts) {
    for (auto [u, v] : g.edges()) e.emplace_back(u + offset, v + offset);
    offset += g.order();
  }
  return Graph(offset, e);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const Graph parts[] = {g1, g2};
  return disjoint_union(parts);
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  std::vector<Edge> e = g1.edges();
  for (auto [u, v] : g2.edges()) e.emplace_back(u + n1, v + n1);
  for (Vertex u = 0; u < n1; ++u)
    for (Vertex v = 0; v < g2.order(); ++v) e.emplace_back(u, v + n1);
  return Graph(n1 + g2.order(), e);
}

BipartiteGraph bipartite_join(const BipartiteGraph& b1, const BipartiteGraph& b2) {
  check_sides(b1.graph, b1.sides);
  check_sides(b2.graph, b2.sides);
  const int n1 = b1.graph.order();
  std::vector<Edge> e = b1.graph.edges();
  for (auto [u, v] : b2.graph.edges()) e.emplace_back(u + n1, v + n1);
  for (Vertex x1 : b1.sides.x)
    for (Vertex y2 : b2.sides.y) e.emplace_back(x1, y2 + n1);
  for (Vertex y1 : b1.sides.y)
    for (Vertex x2 : b2.sides.x) e.emplace_back(y1, x2 + n1);

  BipartiteGraph out;
  out.graph = Graph(n1 + b2.graph.order(), e);
  out.sides.x = b1.sides.x;
  out.sides.y = b1.sides.y;
  for (Vertex v : b2.sides.x) out.sides.x.push_back(v + n1);
  for (Vertex v : b2.sides.y) out.sides.y.push_back(v + n1);
  std::sort(out.sides.x.begin(), out.sides.x.end());
  std::sort(out.sides.y.begin(), out.sides.y.end());
  return out;
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> cut) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : cut) {
    if (v < 0 || v >= g.order()) throw GraphError("cut vertex out of range");
    index[v] = -1;
  }
  int next = 0;
  for (auto& i : index) i = (i == -1) ? -1 : next++;
  std::vector<Edge> e;
  for (auto [u, v] : g.edges())
    if (index[u] >= 0 && index[v] >= 0) e.emplace_back(index[u], index[v]);
  return Graph(next, e);
}

Graph with_edges(const Graph& g, std::span<const Edge> add, std::span<const Edge> remove) {
  std::set<Edge> e;
  for (auto ed : g.edges()) e.insert(ed);
  auto norm = [](Edge ed) { return Edge{std::min(ed.first, ed.second), std::max(ed.first, ed.second)}; };
  for (auto ed : remove) e.erase(norm(ed));
  for (auto ed : add) {
    if (!e.insert(norm(ed)).second)
      throw GraphError("edge (" + std::to_string(ed.first) + ", " + std::to_string(ed.second) +
                       ") already present");
  }
  std::vector<Edge> list(e.begin(), e.end());
  return Graph(g.order(), list);
}

}  // namespace toughspec
