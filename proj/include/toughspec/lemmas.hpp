#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toughspec/graph.hpp"

namespace toughspec {

enum class Lemma { L31, L43, L44 };
std::string lemma_name(Lemma l);  // "L31"
Lemma parse_lemma_name(const std::string& name);

/// K_s join (K_{n_1} + ... + K_{n_t}) against K_s join (K_{n-s-p(t-1)} + (t-1) K_p).
/// Requires n_1 >= ... >= n_t >= p and n_1 < n - s - p(t-1).
struct L31Params {
  int s = 0;
  int p = 0;
  std::vector<int> parts;
  int n() const;
};

/// K_{n/2-1, n/2-n/(2k)} bipartite-join O_{1, n/(2k)} against
/// K_{k-1, n/2-1} bipartite-join O_{n/2-k+1, 1}. Requires k >= 2, n even,
/// n >= 2k^2+6k, 2k | n.
struct L43Params {
  int k = 0;
  int n = 0;
};

/// K_{s, n/2-s-1} bipartite-join O_{n/2-s, s+1} against
/// K_{s+1, n/2-s-2} bipartite-join O_{n/2-s-1, s+2}. Requires n even and
/// 1 <= s <= (n-4)/4.
struct L44Params {
  int n = 0;
  int s = 0;
};

struct ComparisonReport {
  Lemma lemma = Lemma::L31;
  Graph left;   ///< the graph the lemma says has larger radius comes second for L31
  Graph right;
  double rho_left = 0;
  double rho_right = 0;
  /// Signed amount by which the claimed strict inequality holds.
  double margin = 0;
  bool holds = false;
};

/// Each throws HypothesisError naming the failing hypothesis.
/// L31 claims rho_left < rho_right; L43 and L44 claim rho_left > rho_right.
ComparisonReport check_lemma(const L31Params& p);
ComparisonReport check_lemma(const L43Params& p);
ComparisonReport check_lemma(const L44Params& p);

/// Parameter grids: t in 2..6, s in 1..3, p in 1..2, n - s from t p + 1 to
/// t p + 40 with three part shapes per n; k in 2..6 with n stepping by 2k
/// from 2k^2+6k over a 40-wide window; s in 1..6 with n stepping by 2 from
/// 4s+4 over a 40-wide window. Tuples violating the hypotheses are skipped.
std::vector<L31Params> l31_grid();
std::vector<L43Params> l43_grid();
std::vector<L44Params> l44_grid();

struct RotationReport {
  Graph rotated;
  double rho_before = 0;
  double rho_after = 0;
  double sum_s1 = 0;  ///< Perron mass on S1 in the original graph
  double sum_s2 = 0;
  bool condition_holds = false;  ///< sum_s1 >= sum_s2
  bool increased = false;        ///< rho_after > rho_before
};

/// G' = G + {ij : i in S1, j in T} - {ij : i in S2, j in T}. Requires G
/// connected, S1, S2, T nonempty and pairwise disjoint, e(T, S1) = 0 and
/// e(T, S2) = |T||S2|.
RotationReport rotation_experiment(const Graph& g, const VertexSet& s1, const VertexSet& s2,
                                   const VertexSet& t);

struct RotationConfig {
  Graph graph;
  VertexSet s1, s2, t;
};

/// Random connected graphs (9 <= n <= 50) with rotation sets satisfying the
/// adjacency preconditions and the Perron-sum condition.
std::vector<RotationConfig> random_rotation_configs(int count, std::uint64_t seed);

}  // namespace toughspec
