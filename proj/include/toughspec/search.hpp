#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "toughspec/graph.hpp"
#include "toughspec/verify.hpp"

namespace toughspec {

struct Counterexample {
  Graph graph;
  Verdict verdict;
};

struct SearchReport {
  TheoremId theorem;
  std::uint64_t seed = 0;
  int checked = 0;
  /// Keyed by status_name; every status is present.
  std::map<std::string, int> histogram;
  std::vector<Counterexample> counterexamples;
};

/// Draws `samples` random connected graphs meeting the theorem's side
/// conditions and classifies each. Sample i uses its own stream
/// sample_rng(seed, i) and cycles through four generators: dense G(n,p),
/// very dense G(n,p), the extremal graph with a few pairs toggled, and the
/// extremal graph with a few edges added (cross pairs only for bipartite
/// theorems). Results are merged in sample order, so the report does not
/// depend on `threads`.
SearchReport search_counterexamples(const TheoremId& t, int samples, std::uint64_t seed,
                                    unsigned threads = 0);

}  // namespace toughspec
