#pragma once

#include <cstdint>
#include <random>

#include "toughspec/graph.hpp"

namespace toughspec {

enum class RandomModelKind { Gnp, Regular, BalancedBipartite };

struct RandomModel {
  RandomModelKind kind = RandomModelKind::Gnp;
  int n = 0;
  double p = 0.5;  // Gnp, BalancedBipartite
  int d = 0;       // Regular

  static RandomModel gnp(int n, double p) { return {RandomModelKind::Gnp, n, p, 0}; }
  static RandomModel regular(int n, int d) { return {RandomModelKind::Regular, n, 0, d}; }
  static RandomModel balanced_bipartite(int n, double p) {
    return {RandomModelKind::BalancedBipartite, n, p, 0};
  }
};

using Rng = std::mt19937_64;

/// Independent stream for sample `index` of a run seeded with `master`.
Rng sample_rng(std::uint64_t master, std::uint64_t index);

/// Deterministic given the seed. Connectivity is not guaranteed.
Graph random_graph(const RandomModel& model, std::uint64_t seed);
Graph random_graph(const RandomModel& model, Rng& rng);

/// Balanced bipartite samples put X = [0, n/2) and Y = [n/2, n).
SidePartition balanced_sides(int n);

}  // namespace toughspec
