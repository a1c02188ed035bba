#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "toughspec/exact_ratio.hpp"
#include "toughspec/graph.hpp"

namespace toughspec {

enum class Side { X, Y };

/// A disconnecting vertex set with the component count it produces.
struct CutWitness {
  VertexSet cut;
  int components = 0;
  ExactRatio ratio;
  /// Side the cut was drawn from, for one-sided (bipartite) enumeration.
  std::optional<Side> side;
};

struct ToughnessResult {
  ExactRatio value;
  std::optional<CutWitness> witness;  // empty iff value is infinite
};

struct EnumerationOptions {
  int max_vertices = 22;
  /// Only count cuts where |S| and c(G-S)-1 divide one another (variation
  /// toughness only).
  bool divisible_cuts_only = false;
};

/// c(G - S) by breadth-first traversal of the induced subgraph on V \ S.
/// Throws GraphError when S covers V.
int components_after_deletion(const Graph& g, std::span<const Vertex> cut);

/// min |S| / c(G-S) over proper S with c(G-S) >= 2. Subsets are visited by
/// increasing size, lexicographically within a size; the first minimizer is
/// the witness. Complete graphs give the infinite value.
ToughnessResult toughness(const Graph& g, const EnumerationOptions& opts = {});

/// min |S| / (c(G-S) - 1) over the same cuts.
ToughnessResult variation_toughness(const Graph& g, const EnumerationOptions& opts = {});

struct TauToughVerdict {
  bool tough = false;
  /// Present when not tough: a cut with |S| < tau (c - 1).
  std::optional<CutWitness> witness;
};

TauToughVerdict is_tau_tough(const Graph& g, const ExactRatio& tau,
                             const EnumerationOptions& opts = {});

enum class BipartiteKind { TB, TauB };

/// One-sided toughness of a bipartite graph: cuts range over nonempty proper
/// subsets of X and of Y; the overall minimum is reported with its side.
/// TauB requires a balanced partition. `opts.max_vertices` caps each side.
ToughnessResult bipartite_toughness(const Graph& g, const SidePartition& sides, BipartiteKind kind,
                                    const EnumerationOptions& opts = {});

}  // namespace toughspec
