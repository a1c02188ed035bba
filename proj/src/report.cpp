#include "toughspec/report.hpp"

#include "toughspec/graph_io.hpp"

namespace toughspec {

Json to_json(const CutWitness& w) {
  Json j{{"cut", w.cut}, {"components", w.components}, {"ratio", w.ratio.to_string()}};
  if (w.side) j["side"] = *w.side == Side::X ? "X" : "Y";
  return j;
}

Json to_json(const ToughnessResult& r) {
  Json j{{"value", r.value.to_string()}};
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return j;
}

Json to_json(const TheoremId& t) {
  Json params{{"n", t.n}};
  switch (t.id) {
    case Theorem::T11_I: params["tau"] = t.tau; break;
    case Theorem::T11_II:
      params["tau_inv"] = t.tau_inv;
      params["delta"] = t.delta;
      break;
    case Theorem::T12_I: params["r"] = t.r; break;
    case Theorem::T12_II: params["r_inv"] = t.r_inv; break;
  }
  return {{"theorem", theorem_name(t.id)}, {"params", params}};
}

Json to_json(const Verdict& v) {
  Json j{{"status", status_name(v.status)}, {"rho", v.rho}, {"threshold", v.threshold}};
  j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  return j;
}

Json to_json(const SearchReport& r) {
  Json j = to_json(r.theorem);
  j["seed"] = r.seed;
  j["checked"] = r.checked;
  j["histogram"] = r.histogram;
  Json list = Json::array();
  for (const auto& c : r.counterexamples) {
    Json entry{{"graph", serialize_graph(c.graph, GraphFormat::EdgeList)},
               {"rho", c.verdict.rho},
               {"threshold", c.verdict.threshold}};
    entry["witness"] = c.verdict.witness ? to_json(*c.verdict.witness) : Json(nullptr);
    list.push_back(std::move(entry));
  }
  j["counterexamples"] = std::move(list);
  return j;
}

Json to_json(const RemarkRow& row) {
  return {{"r", row.r},
          {"n", row.n},
          {"rho_a", row.rho_a},
          {"rho_b", row.rho_b},
          {"root_a", row.root_a},
          {"root_b", row.root_b},
          {"winner", std::string(1, row.winner)},
          {"printed_a", row.printed_a},
          {"printed_b", row.printed_b}};
}

Json to_json(const std::vector<RemarkRow>& rows) {
  Json j = Json::array();
  for (const auto& row : rows) j.push_back(to_json(row));
  return j;
}

Json to_json(const BoundReport& b) {
  return {{"bound", bound_name(b.bound)},
          {"lhs", b.lhs},
          {"rhs", b.rhs},
          {"slack", b.slack},
          {"equality_case", b.equality_case}};
}

Json to_json(const ComparisonReport& c) {
  return {{"lemma", lemma_name(c.lemma)},
          {"left", serialize_graph(c.left, GraphFormat::EdgeList)},
          {"right", serialize_graph(c.right, GraphFormat::EdgeList)},
          {"rho_left", c.rho_left},
          {"rho_right", c.rho_right},
          {"margin", c.margin},
          {"holds", c.holds}};
}

Json to_json(const RotationReport& r) {
  return {{"rotated", serialize_graph(r.rotated, GraphFormat::EdgeList)},
          {"rho_before", r.rho_before},
          {"rho_after", r.rho_after},
          {"perron_sums", {r.sum_s1, r.sum_s2}},
          {"condition_holds", r.condition_holds},
          {"increased", r.increased}};
}

Json to_json(const BrouwerReport& b) {
  Json j{{"t", b.t.to_string()}, {"d", b.d}, {"lambda", b.lambda}, {"margin", b.margin}};
  j["witness"] = b.witness ? to_json(*b.witness) : Json(nullptr);
  return j;
}

}  // namespace toughspec
