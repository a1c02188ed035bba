#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace toughspec {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;

/// Raised for structurally invalid graphs or operands (self-loops, duplicate
/// edges, out-of-range endpoints, side violations).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable undirected simple graph on vertices 0..n-1.
///
/// Neighbor lists are kept sorted and duplicate-free; every mutation-like
/// operation in this library returns a new Graph.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Throws GraphError on self-loops,
  /// duplicate edges (in either orientation) or endpoints outside [0, n).
  Graph(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  int min_degree() const;
  int max_degree() const;
  bool is_complete() const;
  bool is_regular() const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Connected components as sorted vertex lists, ordered by smallest vertex.
  std::vector<VertexSet> components() const;
  bool is_connected() const;

  /// Dense 0/1 adjacency matrix.
  template <typename Scalar = double>
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> adjacency_matrix() const {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a =
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(order(), order());
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adj_[u]) a(u, v) = Scalar(1);
    return a;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

/// Side labels of a bipartite graph. Both lists are sorted and together cover
/// every vertex exactly once.
struct SidePartition {
  VertexSet x;
  VertexSet y;

  int size() const { return static_cast<int>(x.size() + y.size()); }
  bool balanced() const { return x.size() == y.size(); }
  friend bool operator==(const SidePartition&, const SidePartition&) = default;
};

struct BipartiteGraph {
  Graph graph;
  SidePartition sides;
};

/// Throws GraphError unless `sides` covers the vertices of `g` disjointly and
/// every edge crosses between the two sides.
void check_sides(const Graph& g, const SidePartition& sides);

/// Proper 2-coloring of a bipartite graph; each component puts its smallest
/// vertex in X. Returns nothing when `g` has an odd cycle.
std::optional<SidePartition> two_coloring(const Graph& g);

// Constructors.
Graph complete(int n);
BipartiteGraph complete_bipartite(int p, int q);
BipartiteGraph empty_bipartite(int a, int b);
Graph empty_graph(int n);
Graph cycle(int n);
Graph path(int n);
Graph petersen();

// Operations. Vertices of the first operand keep their indices; later
// operands are shifted past them.
Graph disjoint_union(std::span<const Graph> parts);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join(const Graph& g1, const Graph& g2);
BipartiteGraph bipartite_join(const BipartiteGraph& b1, const BipartiteGraph& b2);

/// Subgraph induced on V \ cut, relabeled in increasing vertex order.
Graph delete_vertices(const Graph& g, std::span<const Vertex> cut);

/// Same vertex set with `add` inserted and `remove` deleted.
Graph with_edges(const Graph& g, std::span<const Edge> add, std::span<const Edge> remove);

}  // namespace toughspec
