#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toughspec/graph.hpp"

namespace toughspec {

/// Raised when family or theorem parameters fall outside the stated
/// hypotheses. The message names the failing condition.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family {
  ToughInt,        ///< K_{tau-1} join (K_{n-tau} + K_1)
  ToughFracDelta,  ///< K_delta join (K_{n-(b+1)delta-1} + (b*delta+1) K_1), b = 1/tau
  BipIntDiv,       ///< K_{n/2-1, n/2-n/(2r)} bipartite-join O_{1, n/(2r)}, 2r | n
  BipIntNondivA,   ///< K_{r f-1, n/2-f} bipartite-join O_{n/2-r f+1, f}, f = floor(n/(2r))
  BipIntNondivB,   ///< K_{r-1, n/2-1} bipartite-join O_{n/2-r+1, 1}
  BipFrac,         ///< K_{1, n/2-b-1} bipartite-join O_{n/2-1, b+1}, b = 1/r
};

std::string family_name(Family f);
Family parse_family_name(const std::string& name);

struct FamilySpec {
  Family family = Family::ToughInt;
  int n = 0;
  int tau = 0;      // ToughInt
  int tau_inv = 0;  // ToughFracDelta
  int delta = 0;    // ToughFracDelta
  int r = 0;        // BipInt*
  int r_inv = 0;    // BipFrac

  static FamilySpec tough_int(int n, int tau) { return {Family::ToughInt, n, tau}; }
  static FamilySpec tough_frac_delta(int n, int tau_inv, int delta) {
    return {Family::ToughFracDelta, n, 0, tau_inv, delta};
  }
  static FamilySpec bip_int_div(int n, int r) { return {Family::BipIntDiv, n, 0, 0, 0, r}; }
  static FamilySpec bip_int_nondiv_a(int n, int r) { return {Family::BipIntNondivA, n, 0, 0, 0, r}; }
  static FamilySpec bip_int_nondiv_b(int n, int r) { return {Family::BipIntNondivB, n, 0, 0, 0, r}; }
  static FamilySpec bip_frac(int n, int r_inv) { return {Family::BipFrac, n, 0, 0, 0, 0, r_inv}; }

  bool bipartite() const { return family >= Family::BipIntDiv; }

  /// Throws HypothesisError naming the first violated requirement.
  void validate() const;
};

/// An extremal graph together with the vertex partition that makes its
/// quotient matrix equitable.
///
/// Join families list classes as (join set, independent set, clique);
/// bipartite families as (X1, Y1, X2, Y2) for K_{p,q} bipartite-join O_{a,b}.
struct FamilyGraph {
  Graph graph;
  std::optional<SidePartition> sides;
  std::vector<VertexSet> partition;
};

/// K_s join (K_clique + isolated K_1). Vertices: join set first, then clique,
/// then the isolated vertices. Requires s >= 1, clique >= 1, isolated >= 0.
FamilyGraph clique_join(int s, int clique, int isolated);

/// K_s join (K_{parts[0]} + ... + K_{parts[t-1]}).
Graph clique_join(int s, std::span<const int> parts);

/// K_{p,q} bipartite-join O_{a,b}. Vertices: X1 = [0,p), Y1 = [p,p+q),
/// X2 = [p+q, p+q+a), Y2 = rest.
FamilyGraph complete_minus_biclique(int p, int q, int a, int b);

FamilyGraph build_family(const FamilySpec& spec);

}  // namespace toughspec
