#include "toughspec/toughness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <queue>

namespace toughspec {

double ExactRatio::to_double() const {
  return infinite_ ? INFINITY : static_cast<double>(num_) / static_cast<double>(den_);
}

std::string ExactRatio::to_string() const {
  if (infinite_) return "inf";
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

ExactRatio parse_ratio(const std::string& text) {
  if (text == "inf") return ExactRatio::infinite();
  try {
    const auto slash = text.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const long long v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return ExactRatio(v, 1);
    }
    const auto num_text = text.substr(0, slash), den_text = text.substr(slash + 1);
    const long long num = std::stoll(num_text, &used);
    if (used != num_text.size()) throw std::invalid_argument(text);
    const long long den = std::stoll(den_text, &used);
    if (used != den_text.size()) throw std::invalid_argument(text);
    return ExactRatio(num, den);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("malformed ratio \"" + text + "\"");
  }
}

int components_after_deletion(const Graph& g, std::span<const Vertex> cut) {
  std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
  int removed = 0;
  for (Vertex v : cut) {
    if (v < 0 || v >= g.order()) throw GraphError("cut vertex out of range");
    if (!gone[v]) ++removed;
    gone[v] = 1;
  }
  if (removed == g.order()) throw GraphError("cut removes every vertex");

  int count = 0;
  std::queue<Vertex> q;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (gone[s]) continue;
    ++count;
    gone[s] = 1;
    q.push(s);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u))
        if (!gone[w]) {
          gone[w] = 1;
          q.push(w);
        }
    }
  }
  return count;
}

namespace {

using Mask = std::uint64_t;

class MaskGraph {
 public:
  explicit MaskGraph(const Graph& g) : n_(g.order()), adj_(static_cast<std::size_t>(g.order()), 0) {
    if (n_ > 64) throw std::invalid_argument("bitmask enumeration supports at most 64 vertices");
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w : g.neighbors(v)) adj_[v] |= Mask{1} << w;
  }

  Mask all() const { return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1; }

  int components(Mask alive) const {
    int count = 0;
    while (alive) {
      Mask comp = alive & (~alive + 1);
      Mask frontier = comp;
      while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
        frontier = next & alive & ~comp;
        comp |= frontier;
      }
      alive &= ~comp;
      ++count;
    }
    return count;
  }

 private:
  int n_;
  std::vector<Mask> adj_;
};

enum class Denominator { Components, ComponentsMinusOne };

struct CutSearch {
  Denominator denominator = Denominator::Components;
  bool divisible_only = false;
};

// Scans nonempty subsets of `pool` with size at most `max_size`, by size then
// lexicographically, keeping the first strict minimizer.
void scan_cuts(const MaskGraph& mg, const VertexSet& pool, int max_size, const CutSearch& search,
               std::optional<Side> side, ToughnessResult& best) {
  const int m = static_cast<int>(pool.size());
  std::vector<int> idx;
  for (int k = 1; k <= std::min(max_size, m); ++k) {
    idx.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      Mask cut = 0;
      for (int i : idx) cut |= Mask{1} << pool[i];
      const int c = mg.components(mg.all() & ~cut);
      if (c >= 2) {
        const int den = search.denominator == Denominator::Components ? c : c - 1;
        const bool admissible = !search.divisible_only || k % den == 0 || den % k == 0;
        if (admissible) {
          ExactRatio ratio(k, den);
          if (ratio < best.value) {
            best.value = ratio;
            CutWitness w;
            for (int i : idx) w.cut.push_back(pool[i]);
            w.components = c;
            w.ratio = ExactRatio(k, den);
            w.side = side;
            best.witness = std::move(w);
          }
        }
      }
      int i = k - 1;
      while (i >= 0 && idx[i] == m - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

ToughnessResult exhaustive(const Graph& g, const EnumerationOptions& opts, const CutSearch& search) {
  if (g.order() > opts.max_vertices)
    throw std::invalid_argument("graph order " + std::to_string(g.order()) +
                                " exceeds the enumeration cap " + std::to_string(opts.max_vertices));
  if (!g.is_connected()) throw GraphError("toughness requires a connected graph");
  ToughnessResult best{ExactRatio::infinite(), std::nullopt};
  if (g.is_complete()) return best;
  VertexSet pool(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) pool[v] = v;
  scan_cuts(MaskGraph(g), pool, g.order() - 2, search, std::nullopt, best);
  return best;
}

}  // namespace

ToughnessResult toughness(const Graph& g, const EnumerationOptions& opts) {
  return exhaustive(g, opts, {Denominator::Components, false});
}

ToughnessResult variation_toughness(const Graph& g, const EnumerationOptions& opts) {
  return exhaustive(g, opts, {Denominator::ComponentsMinusOne, opts.divisible_cuts_only});
}

TauToughVerdict is_tau_tough(const Graph& g, const ExactRatio& tau, const EnumerationOptions& opts) {
  auto result = variation_toughness(g, opts);
  if (result.value >= tau) return {true, std::nullopt};
  return {false, std::move(result.witness)};
}

ToughnessResult bipartite_toughness(const Graph& g, const SidePartition& sides, BipartiteKind kind,
                                    const EnumerationOptions& opts) {
  check_sides(g, sides);
  if (kind == BipartiteKind::TauB && !sides.balanced())
    throw GraphError("variation of bipartite toughness needs a balanced bipartite graph");
  const int largest = static_cast<int>(std::max(sides.x.size(), sides.y.size()));
  if (largest > opts.max_vertices)
    throw std::invalid_argument("side size " + std::to_string(largest) +
                                " exceeds the enumeration cap " + std::to_string(opts.max_vertices));
  if (!g.is_connected()) throw GraphError("bipartite toughness requires a connected graph");

  const CutSearch search{
      kind == BipartiteKind::TB ? Denominator::Components : Denominator::ComponentsMinusOne,
      kind == BipartiteKind::TauB && opts.divisible_cuts_only};
  ToughnessResult best{ExactRatio::infinite(), std::nullopt};
  const MaskGraph mg(g);
  scan_cuts(mg, sides.x, static_cast<int>(sides.x.size()) - 1, search, Side::X, best);
  scan_cuts(mg, sides.y, static_cast<int>(sides.y.size()) - 1, search, Side::Y, best);
  return best;
}

}  // namespace toughspec
