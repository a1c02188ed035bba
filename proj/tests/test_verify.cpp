#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "toughspec/families.hpp"
#include "toughspec/lemmas.hpp"
#include "toughspec/quotient.hpp"
#include "toughspec/random_graph.hpp"
#include "toughspec/report.hpp"
#include "toughspec/search.hpp"
#include "toughspec/spectra.hpp"
#include "toughspec/verify.hpp"

using namespace toughspec;

TEST_CASE("theorem names") {
  CHECK(parse_theorem_name("t11-ii") == Theorem::T11_II);
  CHECK(theorem_name(Theorem::T12_I) == "T12_I");
  CHECK_THROWS(parse_theorem_name("T13"));
  CHECK(TheoremId::t11_ii(16, 2, 1).level() == ExactRatio(1, 2));
  CHECK(TheoremId::t12_i(38, 3).level() == ExactRatio(3, 1));
}

TEST_CASE("threshold picks the larger candidate when 2r does not divide n") {
  const auto a = threshold(TheoremId::t12_i(38, 3));
  CHECK(std::abs(a.rho - 18.499) <= 0.005);
  CHECK(a.family.family == Family::BipIntNondivB);
  CHECK(a.candidates.size() == 2);
  CHECK(matches_extremal(a.extremal.graph, FamilySpec::bip_int_nondiv_b(38, 3)));

  const auto b = threshold(TheoremId::t12_i(270, 10));
  CHECK(b.family.family == Family::BipIntNondivB);
  CHECK(std::abs(b.rho - 134.50) <= 0.005);

  const auto c = threshold(TheoremId::t12_i(402, 10));
  CHECK(c.family.family == Family::BipIntNondivA);
  CHECK(std::abs(c.rho - 200.81) <= 0.005);

  CHECK(threshold(TheoremId::t12_i(40, 2)).candidates.size() == 1);
  CHECK_THROWS_AS(threshold(TheoremId::t11_i(13, 2)), HypothesisError);
}

TEST_CASE("integer threshold exceeds n-2") {
  for (int tau = 2; tau <= 4; ++tau)
    for (int n = 2 * tau * tau + 3 * tau; n < 2 * tau * tau + 3 * tau + 15; ++n)
      CHECK(threshold(TheoremId::t11_i(n, tau)).rho > n - 2);
}

TEST_CASE("threshold equals the largest quotient root") {
  for (const auto& t : {TheoremId::t11_i(14, 2), TheoremId::t11_ii(16, 1, 2), TheoremId::t11_ii(30, 3, 2),
                        TheoremId::t12_i(38, 3), TheoremId::t12_i(40, 2), TheoremId::t12_ii(16, 2)}) {
    const auto thr = threshold(t);
    const auto q = quotient_matrix(thr.extremal.graph, thr.extremal.partition);
    REQUIRE(q.equitable);
    CHECK(std::abs(largest_real_root(char_poly(q), 0, t.n) - thr.rho) < 1e-8);
  }
}

TEST_CASE("verdicts") {
  const auto t = TheoremId::t11_i(14, 2);
  const auto ext = check_graph_against_theorem(build_family(FamilySpec::tough_int(14, 2)).graph, t);
  CHECK(ext.status == VerdictStatus::ConsistentExtremal);
  REQUIRE(ext.witness);
  CHECK(ext.witness->cut == VertexSet{0});

  const auto k14 = check_graph_against_theorem(complete(14), t);
  CHECK(k14.status == VerdictStatus::ConsistentTough);
  CHECK(std::abs(k14.rho - 13) < 1e-9);

  const auto c14 = check_graph_against_theorem(cycle(14), t);
  CHECK(c14.status == VerdictStatus::ConsistentBelow);
  CHECK(std::abs(c14.rho - 2) < 1e-9);
}

TEST_CASE("verdict side conditions") {
  CHECK_THROWS_AS(check_graph_against_theorem(cycle(13), TheoremId::t11_i(14, 2)), HypothesisError);
  CHECK_THROWS_AS(check_graph_against_theorem(disjoint_union(complete(7), complete(7)),
                                              TheoremId::t11_i(14, 2)),
                  HypothesisError);
  // delta(K_16) = 15, not 2.
  CHECK_THROWS_AS(check_graph_against_theorem(complete(16), TheoremId::t11_ii(16, 1, 2)),
                  HypothesisError);
  CHECK_THROWS_AS(check_graph_against_theorem(complete(16), TheoremId::t12_ii(16, 2)), HypothesisError);
  CHECK_THROWS_AS(
      check_graph_against_theorem(complete_bipartite(7, 9).graph, TheoremId::t12_ii(16, 2)),
      HypothesisError);
}

TEST_CASE("every family classifies as extremal under its own theorem") {
  const std::vector<std::pair<TheoremId, FamilySpec>> cases{
      {TheoremId::t11_i(14, 2), FamilySpec::tough_int(14, 2)},
      {TheoremId::t11_i(16, 2), FamilySpec::tough_int(16, 2)},
      {TheoremId::t11_ii(16, 1, 2), FamilySpec::tough_frac_delta(16, 1, 2)},
      {TheoremId::t11_ii(14, 2, 1), FamilySpec::tough_frac_delta(14, 2, 1)},
      {TheoremId::t12_ii(16, 2), FamilySpec::bip_frac(16, 2)},
      {TheoremId::t12_ii(14, 1), FamilySpec::bip_frac(14, 1)},
      {TheoremId::t12_i(20, 2), FamilySpec::bip_int_div(20, 2)},
  };
  for (const auto& [t, spec] : cases)
    CHECK(check_graph_against_theorem(build_family(spec).graph, t).status ==
          VerdictStatus::ConsistentExtremal);
}

TEST_CASE("extremal fingerprint rejects near misses") {
  const auto spec = FamilySpec::tough_int(14, 2);
  const Graph g = build_family(spec).graph;
  CHECK(matches_extremal(g, spec));
  const std::vector<Edge> e{{12, 13}};
  CHECK_FALSE(matches_extremal(with_edges(g, e, {}), spec));
  CHECK_FALSE(matches_extremal(complete(14), spec));
  CHECK_FALSE(matches_extremal(build_family(FamilySpec::tough_int(15, 2)).graph, spec));

  const auto bspec = FamilySpec::bip_frac(16, 2);
  const auto b = build_family(bspec);
  CHECK(matches_extremal(b.graph, bspec));
  CHECK_FALSE(matches_extremal(b.graph, FamilySpec::bip_frac(16, 1)));
  CHECK_FALSE(matches_extremal(complete_bipartite(8, 8).graph, bspec));

  // Relabelled copy: reverse the vertex order.
  std::vector<Edge> rev;
  for (auto [u, v] : b.graph.edges()) rev.emplace_back(15 - v, 15 - u);
  CHECK(matches_extremal(Graph(16, rev), bspec));
}

TEST_CASE("remark reproduction") {
  const auto rows = reproduce_remark();
  REQUIRE(rows.size() == 3);
  const char winners[] = {'B', 'B', 'A'};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(std::abs(rows[i].rho_a - rows[i].printed_a) <= 0.005);
    CHECK(std::abs(rows[i].rho_b - rows[i].printed_b) <= 0.005);
    CHECK(rows[i].winner == winners[i]);
    CHECK(std::abs(rows[i].root_a - rows[i].rho_a) < 1e-8);
    CHECK(std::abs(rows[i].root_b - rows[i].rho_b) < 1e-8);
  }
  CHECK(rows[0].r == 3);
  CHECK(rows[0].n == 38);
}

TEST_CASE("bounds") {
  const auto hong = check_bound(complete_bipartite(1, 3).graph, Bound::Hong);
  CHECK(std::abs(hong.rhs - std::sqrt(3.0)) < 1e-12);
  CHECK(std::abs(hong.slack) < 1e-9);
  CHECK(hong.equality_case);

  const auto nosal = check_bound(complete_bipartite(2, 3).graph, Bound::Nosal);
  CHECK(std::abs(nosal.rhs - std::sqrt(6.0)) < 1e-12);
  CHECK(nosal.equality_case);

  const auto deg = check_bound(complete(4), Bound::Degree);
  CHECK(std::abs(deg.rhs - 3.0) < 1e-12);
  CHECK(deg.equality_case);

  CHECK_FALSE(check_bound(cycle(5), Bound::Hong).equality_case);
  CHECK_FALSE(check_bound(path(4), Bound::Nosal).equality_case);
  CHECK(check_bound(disjoint_union(complete_bipartite(2, 4).graph, empty_graph(3)), Bound::Nosal)
            .equality_case);
  CHECK_THROWS_AS(check_bound(cycle(5), Bound::Nosal), HypothesisError);
  CHECK_THROWS_AS(check_bound(disjoint_union(complete(3), complete(1)), Bound::Hong), HypothesisError);
  CHECK_THROWS_AS(check_bound(empty_graph(2), Bound::Degree), HypothesisError);
  CHECK(parse_bound_name("nosal") == Bound::Nosal);
}

TEST_CASE("degree bound is tight on bidegreed joins") {
  // K_s join complement-of-nothing: s universal vertices over a d-regular part.
  for (int s = 1; s <= 3; ++s) {
    const Graph g = join(complete(s), cycle(7));
    const auto rep = check_bound(g, Bound::Degree);
    CHECK(std::abs(rep.slack) < 1e-7);
    CHECK(rep.equality_case);
  }
}

TEST_CASE("lemma comparisons") {
  const auto l31 = check_lemma(L31Params{2, 1, {4, 3, 3}});
  CHECK(l31.left.order() == 12);
  CHECK(l31.rho_left < l31.rho_right);
  CHECK(l31.holds);
  CHECK(std::abs(l31.rho_right - oracle::spectral_radius(clique_join(2, 8, 2).graph)) < 1e-8);

  const auto l43 = check_lemma(L43Params{2, 20});
  CHECK(l43.holds);
  CHECK(std::abs(l43.rho_left -
                 oracle::spectral_radius(complete_minus_biclique(9, 5, 1, 5).graph)) < 1e-8);
  CHECK(std::abs(l43.rho_right -
                 oracle::spectral_radius(complete_minus_biclique(1, 9, 9, 1).graph)) < 1e-8);

  const auto l44 = check_lemma(L44Params{12, 1});
  CHECK(l44.holds);
  CHECK(std::abs(l44.rho_left -
                 oracle::spectral_radius(complete_minus_biclique(1, 4, 5, 2).graph)) < 1e-8);

  CHECK_THROWS_AS(check_lemma(L31Params{2, 1, {8, 1, 1}}), HypothesisError);
  CHECK_THROWS_AS(check_lemma(L31Params{2, 2, {4, 3, 1}}), HypothesisError);
  CHECK_THROWS_AS(check_lemma(L43Params{2, 18}), HypothesisError);
  CHECK_THROWS_AS(check_lemma(L43Params{3, 38}), HypothesisError);
  CHECK_THROWS_AS(check_lemma(L44Params{12, 3}), HypothesisError);
  try {
    check_lemma(L43Params{2, 18});
  } catch (const HypothesisError& e) {
    CHECK(std::string(e.what()).find("2k^2 + 6k") != std::string::npos);
  }
}

TEST_CASE("L44 at s = (n-4)/4 compares isomorphic graphs") {
  const auto rep = check_lemma(L44Params{12, 2});
  CHECK(std::abs(rep.rho_left - rep.rho_right) < 1e-9);
  CHECK(char_poly(quotient_matrix(rep.left, complete_minus_biclique(2, 3, 4, 3).partition)) ==
        char_poly(quotient_matrix(rep.right, complete_minus_biclique(3, 2, 3, 4).partition)));
}

TEST_CASE("lemma grids respect the hypotheses") {
  CHECK(l31_grid().size() > 1000);
  for (const auto& p : l43_grid()) CHECK(p.n % (2 * p.k) == 0);
  for (const auto& p : l44_grid()) CHECK(4 * p.s <= p.n - 4);
}

TEST_CASE("rotation experiment") {
  // a=0, b=1, c=2, d=3 on the path a-b-c-d.
  const auto p4 = rotation_experiment(path(4), {2}, {1}, {0});
  CHECK(std::abs(p4.rho_before - (1 + std::sqrt(5.0)) / 2) < 1e-9);
  CHECK(std::abs(p4.rho_after - std::sqrt(3.0)) < 1e-9);
  CHECK(std::abs(p4.sum_s1 - p4.sum_s2) < 1e-9);
  CHECK(p4.condition_holds == (p4.sum_s1 >= p4.sum_s2));
  CHECK(p4.increased);

  const auto c4 = rotation_experiment(cycle(4), {2}, {1}, {0});
  CHECK(c4.rho_after > c4.rho_before);

  CHECK_THROWS_AS(rotation_experiment(path(4), {1}, {2}, {0}), HypothesisError);
  try {
    rotation_experiment(path(4), {1}, {2}, {0});
  } catch (const HypothesisError& e) {
    CHECK(std::string(e.what()).find("e(T, S1) = 0") != std::string::npos);
  }
  CHECK_THROWS_AS(rotation_experiment(path(4), {2}, {2}, {0}), HypothesisError);
  CHECK_THROWS_AS(rotation_experiment(path(4), {3}, {2}, {0}), HypothesisError);
}

TEST_CASE("random rotation configurations are valid") {
  const auto configs = random_rotation_configs(40, 9);
  CHECK(configs.size() == 40);
  for (const auto& c : configs) {
    const auto rep = rotation_experiment(c.graph, c.s1, c.s2, c.t);
    CHECK(rep.condition_holds);
    CHECK(rep.rho_after > rep.rho_before + 1e-12);
  }
}

TEST_CASE("brouwer margin") {
  const auto p = brouwer_margin(petersen());
  CHECK(p.t == ExactRatio(4, 3));
  CHECK(p.d == 3);
  CHECK(std::abs(p.lambda - 2) < 1e-9);
  CHECK(std::abs(p.margin - 5.0 / 6) < 1e-9);

  const auto c6 = brouwer_margin(cycle(6));
  CHECK(c6.t == ExactRatio(1, 1));
  CHECK(std::abs(c6.lambda - 2) < 1e-9);
  CHECK(std::abs(c6.margin - 1) < 1e-9);

  const auto k33 = brouwer_margin(complete_bipartite(3, 3).graph);
  CHECK(k33.t == ExactRatio(1, 1));
  CHECK(std::abs(k33.lambda - 3) < 1e-9);
  CHECK(std::abs(k33.margin - 1) < 1e-9);

  CHECK_THROWS_AS(brouwer_margin(path(4)), HypothesisError);
  CHECK_THROWS_AS(brouwer_margin(complete(5)), HypothesisError);
}

TEST_CASE("search reports") {
  const auto empty = search_counterexamples(TheoremId::t11_i(14, 2), 0, 1);
  CHECK(empty.checked == 0);
  CHECK(empty.histogram.size() == 4);

  const auto a = search_counterexamples(TheoremId::t12_ii(16, 2), 60, 3, 1);
  const auto b = search_counterexamples(TheoremId::t12_ii(16, 2), 60, 3, 4);
  CHECK(a.checked == 60);
  CHECK(a.counterexamples.empty());
  CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("search report json schema") {
  const auto j = to_json(search_counterexamples(TheoremId::t11_ii(16, 1, 2), 8, 2));
  for (const char* key : {"theorem", "params", "seed", "checked", "histogram", "counterexamples"})
    CHECK(j.contains(key));
  CHECK(j["theorem"] == "T11_II");
  CHECK(j["params"]["delta"] == 2);
  CHECK(Json::parse(j.dump()) == j);
}
