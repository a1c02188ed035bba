#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toughspec/exact_ratio.hpp"
#include "toughspec/families.hpp"
#include "toughspec/graph.hpp"
#include "toughspec/toughness.hpp"

namespace toughspec {

/// Spectral radii within this distance of a threshold count as meeting it.
inline constexpr double kThresholdTolerance = 1e-8;

enum class Theorem {
  T11_I,   ///< tau >= 2 integer
  T11_II,  ///< 1/tau integer, minimum degree delta
  T12_I,   ///< balanced bipartite, r >= 2 integer
  T12_II,  ///< balanced bipartite, 1/r integer
};

std::string theorem_name(Theorem t);            // "T11_I"
Theorem parse_theorem_name(const std::string&);  // accepts "T11_I" or "t11-i"

struct TheoremId {
  Theorem id = Theorem::T11_I;
  int n = 0;
  int tau = 0;
  int tau_inv = 0;
  int delta = 0;
  int r = 0;
  int r_inv = 0;

  static TheoremId t11_i(int n, int tau) { return {Theorem::T11_I, n, tau}; }
  static TheoremId t11_ii(int n, int tau_inv, int delta) {
    return {Theorem::T11_II, n, 0, tau_inv, delta};
  }
  static TheoremId t12_i(int n, int r) { return {Theorem::T12_I, n, 0, 0, 0, r}; }
  static TheoremId t12_ii(int n, int r_inv) { return {Theorem::T12_II, n, 0, 0, 0, 0, r_inv}; }

  bool bipartite() const { return id == Theorem::T12_I || id == Theorem::T12_II; }
  /// The toughness level the theorem certifies, as an exact ratio.
  ExactRatio level() const;
  /// Extremal graph families named by the theorem; two for T12_I when 2r does
  /// not divide n, otherwise one.
  std::vector<FamilySpec> extremal_candidates() const;
  /// Throws HypothesisError when the parameters violate the theorem's range.
  void validate() const;
};

struct Threshold {
  double rho = 0;
  FamilySpec family;    ///< the candidate attaining the maximum
  FamilyGraph extremal;
  std::vector<std::pair<FamilySpec, double>> candidates;
};

/// Spectral radius of the theorem's extremal graph; for T12_I with 2r not
/// dividing n, the larger of the two candidates.
Threshold threshold(const TheoremId& t);

enum class VerdictStatus { ConsistentBelow, ConsistentTough, ConsistentExtremal, Counterexample };
std::string status_name(VerdictStatus s);  // "CONSISTENT_BELOW", ...

struct Verdict {
  VerdictStatus status = VerdictStatus::ConsistentBelow;
  double rho = 0;
  double threshold = 0;
  std::optional<CutWitness> witness;
};

/// Applies the theorem as a predicate on `g`:
///   rho < threshold                      -> ConsistentBelow
///   tough at the theorem's level         -> ConsistentTough
///   not tough, isomorphic to extremal    -> ConsistentExtremal
///   otherwise                            -> Counterexample
/// Side conditions (order n, delta(G) = delta, balanced bipartite) are checked
/// on the graph itself and violations throw HypothesisError.
Verdict check_graph_against_theorem(const Graph& g, const TheoremId& t,
                                    const EnumerationOptions& opts = {});
Verdict check_graph_against_theorem(const Graph& g, const TheoremId& t, const Threshold& thr,
                                    const EnumerationOptions& opts = {});

/// Exact isomorphism test against a rigid extremal family: join families are
/// recognized by their universal vertices and the cliques left after removing
/// them; bipartite families by the missing biclique of K_{n/2,n/2}.
bool matches_extremal(const Graph& g, const FamilySpec& spec);

struct RemarkRow {
  int r = 0;
  int n = 0;
  double rho_a = 0;   ///< K_{r f-1, n/2-f} bipartite-join O_{n/2-r f+1, f}
  double rho_b = 0;   ///< K_{r-1, n/2-1} bipartite-join O_{n/2-r+1, 1}
  double root_a = 0;  ///< largest root of the equitable quotient, same graph
  double root_b = 0;
  char winner = '?';
  double printed_a = 0;
  double printed_b = 0;
};

/// The three published comparisons (r, n) = (3, 38), (10, 270), (10, 402).
std::vector<RemarkRow> reproduce_remark();

enum class Bound { Hong, Nosal, Degree };
std::string bound_name(Bound b);
Bound parse_bound_name(const std::string&);

struct BoundReport {
  Bound bound = Bound::Hong;
  double lhs = 0;  ///< rho(G)
  double rhs = 0;  ///< bound value
  double slack = 0;
  bool equality_case = false;
};

/// Hong: rho <= sqrt(2m - n + 1), no isolated vertices.
/// Degree: rho <= (delta-1)/2 + sqrt(2m - n delta + (delta+1)^2/4), delta >= 1.
/// Nosal: rho <= sqrt(m), bipartite.
BoundReport check_bound(const Graph& g, Bound bound);

/// The structural equality condition of each bound.
bool bound_equality_structure(const Graph& g, Bound bound);

struct BrouwerReport {
  ExactRatio t;
  int d = 0;
  double lambda = 0;
  double margin = 0;
  std::optional<CutWitness> witness;
};

/// t(G) - (d / lambda - 1) for a connected non-complete d-regular graph.
BrouwerReport brouwer_margin(const Graph& g, const EnumerationOptions& opts = {});

}  // namespace toughspec
