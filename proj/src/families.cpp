#include "toughspec/families.hpp"

#include <algorithm>
#include <numeric>

namespace toughspec {
namespace {

VertexSet range(int from, int to) {
  VertexSet out(static_cast<std::size_t>(std::max(0, to - from)));
  std::iota(out.begin(), out.end(), from);
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw HypothesisError(what);
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::ToughInt: return "tough-int";
    case Family::ToughFracDelta: return "tough-frac";
    case Family::BipIntDiv: return "bip-div";
    case Family::BipIntNondivA: return "bip-nondiv-a";
    case Family::BipIntNondivB: return "bip-nondiv-b";
    case Family::BipFrac: return "bip-frac";
  }
  return "?";
}

Family parse_family_name(const std::string& name) {
  for (Family f : {Family::ToughInt, Family::ToughFracDelta, Family::BipIntDiv,
                   Family::BipIntNondivA, Family::BipIntNondivB, Family::BipFrac})
    if (family_name(f) == name) return f;
  throw std::invalid_argument("unknown family \"" + name + "\"");
}

void FamilySpec::validate() const {
  switch (family) {
    case Family::ToughInt:
      require(tau >= 2, "tau >= 2 required (tau = " + std::to_string(tau) + ")");
      require(n >= 2 * tau * tau + 3 * tau,
              "n >= 2 tau^2 + 3 tau required (n = " + std::to_string(n) + ", bound " +
                  std::to_string(2 * tau * tau + 3 * tau) + ")");
      return;
    case Family::ToughFracDelta: {
      require(tau_inv >= 1, "1/tau must be a positive integer");
      require(delta >= 1, "delta >= 1 required");
      const long long bound =
          std::max<long long>(5LL * delta + 4, 1LL * tau_inv * delta * delta * delta + delta);
      require(n >= bound, "n >= max{5 delta + 4, delta^3 / tau + delta} required (n = " +
                              std::to_string(n) + ", bound " + std::to_string(bound) + ")");
      return;
    }
    case Family::BipIntDiv:
    case Family::BipIntNondivA:
    case Family::BipIntNondivB:
      require(n % 2 == 0, "n must be even for a balanced bipartite graph");
      require(r >= 2, "r >= 2 required (r = " + std::to_string(r) + ")");
      require(n >= 2 * r * r + 6 * r, "n >= 2 r^2 + 6 r required (n = " + std::to_string(n) +
                                          ", bound " + std::to_string(2 * r * r + 6 * r) + ")");
      if (family == Family::BipIntDiv)
        require(n % (2 * r) == 0, "2r must divide n for the divisible family");
      else
        require(n % (2 * r) != 0, "2r must not divide n for the non-divisible candidates");
      return;
    case Family::BipFrac:
      require(n % 2 == 0, "n must be even for a balanced bipartite graph");
      require(r_inv >= 1, "1/r must be a positive integer");
      require(n >= 4 * r_inv + 6, "n >= 4/r + 6 required (n = " + std::to_string(n) + ")");
      return;
  }
}

FamilyGraph clique_join(int s, int clique, int isolated) {
  if (s < 1 || clique < 1 || isolated < 0) throw GraphError("invalid clique-join sizes");
  std::vector<Graph> inner{complete(clique)};
  if (isolated > 0) inner.push_back(empty_graph(isolated));
  FamilyGraph out;
  out.graph = join(complete(s), disjoint_union(inner));
  out.partition = {range(0, s), range(s + clique, s + clique + isolated), range(s, s + clique)};
  if (isolated == 0) out.partition.erase(out.partition.begin() + 1);
  return out;
}

Graph clique_join(int s, std::span<const int> parts) {
  if (s < 1 || parts.empty()) throw GraphError("invalid clique-join sizes");
  std::vector<Graph> inner;
  for (int p : parts) inner.push_back(complete(p));
  return join(complete(s), disjoint_union(inner));
}

FamilyGraph complete_minus_biclique(int p, int q, int a, int b) {
  auto joined = bipartite_join(complete_bipartite(p, q), empty_bipartite(a, b));
  FamilyGraph out;
  out.graph = std::move(joined.graph);
  out.sides = std::move(joined.sides);
  out.partition = {range(0, p), range(p, p + q), range(p + q, p + q + a),
                   range(p + q + a, p + q + a + b)};
  std::erase_if(out.partition, [](const VertexSet& c) { return c.empty(); });
  return out;
}

FamilyGraph build_family(const FamilySpec& spec) {
  spec.validate();
  const int n = spec.n;
  switch (spec.family) {
    case Family::ToughInt:
      return clique_join(spec.tau - 1, n - spec.tau, 1);
    case Family::ToughFracDelta: {
      const int b = spec.tau_inv, d = spec.delta;
      return clique_join(d, n - (b + 1) * d - 1, b * d + 1);
    }
    case Family::BipIntDiv: {
      const int f = n / (2 * spec.r);
      return complete_minus_biclique(n / 2 - 1, n / 2 - f, 1, f);
    }
    case Family::BipIntNondivA: {
      const int f = n / (2 * spec.r);
      return complete_minus_biclique(spec.r * f - 1, n / 2 - f, n / 2 - spec.r * f + 1, f);
    }
    case Family::BipIntNondivB:
      return complete_minus_biclique(spec.r - 1, n / 2 - 1, n / 2 - spec.r + 1, 1);
    case Family::BipFrac: {
      const int b = spec.r_inv;
      return complete_minus_biclique(1, n / 2 - b - 1, n / 2 - 1, b + 1);
    }
  }
  throw HypothesisError("unknown family");
}

}  // namespace toughspec
