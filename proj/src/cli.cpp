#include "toughspec/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "toughspec/families.hpp"
#include "toughspec/graph_io.hpp"
#include "toughspec/lemmas.hpp"
#include "toughspec/quotient.hpp"
#include "toughspec/report.hpp"
#include "toughspec/search.hpp"
#include "toughspec/spectra.hpp"
#include "toughspec/toughness.hpp"
#include "toughspec/verify.hpp"

namespace toughspec::cli {
namespace {

struct Options {
  std::string in;
  std::string format = "edge-list";
  bool json = false;
  std::uint64_t seed = 1;
  int samples = 500;
  double tol = 1e-10;

  std::string family;
  int n = 0, tau = 0, tau_inv = 0, delta = 0, r = 0, r_inv = 0;

  std::string kind = "variation";
  bool divisible = false;
  std::string theorem;
  std::string bound;
  std::string lemma;
  bool sweep = false;
  int s = 0, t = 0, p = 0, k = 0;
  std::string parts, s1, s2, t_set;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string fixed(double x, int digits = 9) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

std::string join_vertices(const VertexSet& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(flag + ": expected a comma-separated list of integers, got \"" + text + "\"");
    }
  }
  if (out.empty()) throw UsageError(flag + " must not be empty");
  return out;
}

void add_format(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Graph format: edge-list or graph6")
      ->check(CLI::IsMember({"edge-list", "graph6"}));
}

void add_json(CLI::App* sub, Options& o) { sub->add_flag("--json", o.json, "Emit JSON"); }

void add_family_params(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "Vertex count");
  sub->add_option("--tau", o.tau, "Integer toughness level");
  sub->add_option("--tau-inv", o.tau_inv, "1/tau for fractional levels");
  sub->add_option("--delta", o.delta, "Minimum degree");
  sub->add_option("--r", o.r, "Integer bipartite toughness level");
  sub->add_option("--r-inv", o.r_inv, "1/r for fractional bipartite levels");
}

void add_graph_source(CLI::App* sub, Options& o) {
  sub->add_option("--in", o.in, "Graph file, or - for stdin");
  add_format(sub, o);
  sub->add_option("--family", o.family,
                  "Extremal family instead of --in: tough-int, tough-frac, bip-div, "
                  "bip-nondiv-a, bip-nondiv-b, bip-frac");
  add_family_params(sub, o);
}

FamilySpec family_spec(const Options& o) {
  switch (parse_family_name(o.family)) {
    case Family::ToughInt: return FamilySpec::tough_int(o.n, o.tau);
    case Family::ToughFracDelta: return FamilySpec::tough_frac_delta(o.n, o.tau_inv, o.delta);
    case Family::BipIntDiv: return FamilySpec::bip_int_div(o.n, o.r);
    case Family::BipIntNondivA: return FamilySpec::bip_int_nondiv_a(o.n, o.r);
    case Family::BipIntNondivB: return FamilySpec::bip_int_nondiv_b(o.n, o.r);
    case Family::BipFrac: return FamilySpec::bip_frac(o.n, o.r_inv);
  }
  throw UsageError("unknown family");
}

TheoremId theorem_id(const Options& o) {
  if (o.theorem.empty()) throw UsageError("--theorem is required");
  switch (parse_theorem_name(o.theorem)) {
    case Theorem::T11_I: return TheoremId::t11_i(o.n, o.tau);
    case Theorem::T11_II: return TheoremId::t11_ii(o.n, o.tau_inv, o.delta);
    case Theorem::T12_I: return TheoremId::t12_i(o.n, o.r);
    case Theorem::T12_II: return TheoremId::t12_ii(o.n, o.r_inv);
  }
  throw UsageError("unknown theorem");
}

bool has_graph(const Options& o) { return !o.in.empty() || !o.family.empty(); }

Graph load_graph(const Options& o, std::istream& in) {
  if (!o.in.empty() && !o.family.empty()) throw UsageError("give either --in or --family, not both");
  if (!o.family.empty()) return build_family(family_spec(o)).graph;
  if (o.in.empty()) throw UsageError("a graph is required: --in FILE (or -) or --family NAME");
  std::string text;
  if (o.in == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream f(o.in, std::ios::binary);
    if (!f) throw UsageError("cannot read " + o.in);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  return parse_graph(text, parse_format_name(o.format));
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void print_witness(std::ostream& out, const std::optional<CutWitness>& w) {
  if (!w) return;
  out << "cut: " << join_vertices(w->cut) << "\n";
  out << "components: " << w->components << "\n";
  if (w->side) out << "side: " << (*w->side == Side::X ? "X" : "Y") << "\n";
}

// Subcommand bodies. Each returns an exit code.

int cmd_rho(const Options& o, std::istream& in, std::ostream& out) {
  const auto res = spectral_radius(load_graph(o, in), o.tol);
  if (o.json)
    print_json(out, {{"rho", res.radius}, {"iterations", res.iterations}, {"residual", res.residual}});
  else
    out << fixed(res.radius) << "\n";
  return kOk;
}

int cmd_spectrum(const Options& o, std::istream& in, std::ostream& out) {
  const auto eig = full_spectrum(load_graph(o, in));
  if (o.json) {
    print_json(out, {{"eigenvalues", eig}});
  } else {
    for (double x : eig) out << fixed(x) << "\n";
  }
  return kOk;
}

int cmd_tough(const Options& o, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(o, in);
  EnumerationOptions opts;
  opts.divisible_cuts_only = o.divisible;
  ToughnessResult res;
  if (o.kind == "chvatal") {
    res = toughness(g, opts);
  } else if (o.kind == "variation") {
    res = variation_toughness(g, opts);
  } else {
    const auto sides = two_coloring(g);
    if (!sides) throw HypothesisError("graph is not bipartite");
    res = bipartite_toughness(g, *sides, o.kind == "tb" ? BipartiteKind::TB : BipartiteKind::TauB,
                              opts);
  }
  if (o.json) {
    Json j = to_json(res);
    j["kind"] = o.kind;
    print_json(out, j);
  } else {
    out << "value: " << res.value.to_string() << "\n";
    print_witness(out, res.witness);
  }
  return kOk;
}

int cmd_construct(const Options& o, std::ostream& out) {
  if (o.family.empty()) throw UsageError("--family is required");
  const auto fg = build_family(family_spec(o));
  const auto format = parse_format_name(o.format);
  if (o.json) {
    Json parts = Json::array();
    for (const auto& c : fg.partition) parts.push_back(c);
    Json j{{"graph", serialize_graph(fg.graph, format)}, {"partition", parts},
           {"n", fg.graph.order()}, {"m", fg.graph.size()}};
    if (fg.sides) j["sides"] = {{"x", fg.sides->x}, {"y", fg.sides->y}};
    print_json(out, j);
  } else {
    out << serialize_graph(fg.graph, format) << "\n";
  }
  return kOk;
}

int cmd_bounds(const Options& o, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(o, in);
  std::vector<Bound> which;
  if (!o.bound.empty()) {
    which.push_back(parse_bound_name(o.bound));
  } else {
    if (g.min_degree() >= 1) which = {Bound::Hong, Bound::Degree};
    if (two_coloring(g)) which.push_back(Bound::Nosal);
    if (which.empty()) throw HypothesisError("no bound applies to this graph");
  }
  int code = kOk;
  Json arr = Json::array();
  for (Bound b : which) {
    const auto rep = check_bound(g, b);
    if (rep.slack < -1e-8) code = kFinding;
    if (o.json)
      arr.push_back(to_json(rep));
    else
      out << bound_name(b) << ": rho " << fixed(rep.lhs) << " <= " << fixed(rep.rhs) << " slack "
          << fixed(rep.slack, 12) << (rep.equality_case ? " (equality)" : "") << "\n";
  }
  if (o.json) print_json(out, arr);
  return code;
}

int cmd_lemma(const Options& o, std::ostream& out) {
  if (o.lemma.empty()) throw UsageError("--lemma is required");
  const Lemma lemma = parse_lemma_name(o.lemma);
  std::vector<ComparisonReport> reports;
  if (o.sweep) {
    switch (lemma) {
      case Lemma::L31: for (const auto& p : l31_grid()) reports.push_back(check_lemma(p)); break;
      case Lemma::L43: for (const auto& p : l43_grid()) reports.push_back(check_lemma(p)); break;
      case Lemma::L44: for (const auto& p : l44_grid()) reports.push_back(check_lemma(p)); break;
    }
  } else {
    switch (lemma) {
      case Lemma::L31: {
        L31Params p{o.s, o.p, parse_int_list(o.parts, "--parts")};
        if (o.t != 0 && o.t != static_cast<int>(p.parts.size()))
          throw UsageError("--t disagrees with the number of --parts");
        if (o.n != 0 && o.n != p.n()) throw UsageError("--n disagrees with s + sum of --parts");
        reports.push_back(check_lemma(p));
        break;
      }
      case Lemma::L43: reports.push_back(check_lemma(L43Params{o.k, o.n})); break;
      case Lemma::L44: reports.push_back(check_lemma(L44Params{o.n, o.s})); break;
    }
  }
  bool all = true;
  double worst = INFINITY;
  for (const auto& r : reports) {
    all = all && r.holds;
    worst = std::min(worst, r.margin);
  }
  if (o.json) {
    if (o.sweep) {
      Json j{{"lemma", lemma_name(lemma)}, {"tuples", reports.size()}, {"all_hold", all},
             {"min_margin", worst}};
      Json failures = Json::array();
      for (const auto& r : reports)
        if (!r.holds) failures.push_back(to_json(r));
      j["failures"] = failures;
      print_json(out, j);
    } else {
      print_json(out, to_json(reports.front()));
    }
  } else if (o.sweep) {
    out << lemma_name(lemma) << ": " << reports.size() << " tuples, "
        << (all ? "all hold" : "FAILURES") << ", min margin " << std::scientific
        << std::setprecision(3) << worst << std::defaultfloat << "\n";
  } else {
    const auto& r = reports.front();
    const char* rel = lemma == Lemma::L31 ? " < " : " > ";
    out << lemma_name(lemma) << ": " << fixed(r.rho_left) << rel << fixed(r.rho_right) << " "
        << (r.holds ? "holds" : "FAILS") << " (margin " << fixed(r.margin, 12) << ")\n";
  }
  return all ? kOk : kFinding;
}

int cmd_rotate(const Options& o, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(o, in);
  const auto to_set = [](const std::vector<int>& v) { return VertexSet(v.begin(), v.end()); };
  const auto rep = rotation_experiment(g, to_set(parse_int_list(o.s1, "--s1")),
                                       to_set(parse_int_list(o.s2, "--s2")),
                                       to_set(parse_int_list(o.t_set, "--t-set")));
  if (o.json) {
    print_json(out, to_json(rep));
  } else {
    out << "rho_before: " << fixed(rep.rho_before) << "\n"
        << "rho_after: " << fixed(rep.rho_after) << "\n"
        << "perron_sums: " << fixed(rep.sum_s1) << " " << fixed(rep.sum_s2) << "\n"
        << "condition: " << (rep.condition_holds ? "holds" : "fails") << "\n"
        << "increased: " << (rep.increased ? "yes" : "no") << "\n";
  }
  return rep.condition_holds && !rep.increased ? kFinding : kOk;
}

int cmd_brouwer(const Options& o, std::istream& in, std::ostream& out) {
  const auto rep = brouwer_margin(load_graph(o, in));
  if (o.json) {
    print_json(out, to_json(rep));
  } else {
    out << "t: " << rep.t.to_string() << "\n"
        << "d: " << rep.d << "\n"
        << "lambda: " << fixed(rep.lambda) << "\n"
        << "margin: " << fixed(rep.margin) << "\n";
  }
  return rep.margin > 0 ? kOk : kFinding;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  const TheoremId t = theorem_id(o);
  const Threshold thr = threshold(t);
  if (!has_graph(o)) {
    if (o.json) {
      Json j = to_json(t);
      j["threshold"] = thr.rho;
      j["family"] = family_name(thr.family.family);
      j["extremal"] = serialize_graph(thr.extremal.graph, GraphFormat::EdgeList);
      print_json(out, j);
    } else {
      out << "threshold: " << fixed(thr.rho) << "\n"
          << "extremal: " << family_name(thr.family.family) << "\n";
    }
    return kOk;
  }
  const auto v = check_graph_against_theorem(load_graph(o, in), t, thr);
  if (o.json) {
    Json j = to_json(t);
    j["verdict"] = to_json(v);
    print_json(out, j);
  } else {
    out << "status: " << status_name(v.status) << "\n"
        << "rho: " << fixed(v.rho) << "\n"
        << "threshold: " << fixed(v.threshold) << "\n";
    print_witness(out, v.witness);
  }
  return v.status == VerdictStatus::Counterexample ? kFinding : kOk;
}

int cmd_search(const Options& o, std::ostream& out) {
  const auto rep = search_counterexamples(theorem_id(o), o.samples, o.seed);
  if (o.json) {
    print_json(out, to_json(rep));
  } else {
    out << theorem_name(rep.theorem.id) << " seed " << rep.seed << ": " << rep.checked
        << " checked\n";
    for (const auto& [name, count] : rep.histogram) out << "  " << name << " " << count << "\n";
    for (const auto& c : rep.counterexamples)
      out << "counterexample rho " << fixed(c.verdict.rho) << "\n"
          << serialize_graph(c.graph, GraphFormat::EdgeList) << "\n";
  }
  return rep.counterexamples.empty() ? kOk : kFinding;
}

int cmd_remark(const Options& o, std::ostream& out) {
  const auto rows = reproduce_remark();
  bool ok = true;
  for (const auto& row : rows) {
    const char expected = row.printed_a > row.printed_b ? 'A' : 'B';
    ok = ok && std::abs(row.rho_a - row.printed_a) <= 0.005 &&
         std::abs(row.rho_b - row.printed_b) <= 0.005 && row.winner == expected;
  }
  if (o.json) {
    print_json(out, to_json(rows));
  } else {
    out << std::left << std::setw(4) << "r" << std::setw(6) << "n" << std::setw(16) << "rho_A"
        << std::setw(16) << "rho_B" << std::setw(8) << "winner" << "printed (A, B)\n";
    for (const auto& row : rows)
      out << std::setw(4) << row.r << std::setw(6) << row.n << std::setw(16) << fixed(row.rho_a)
          << std::setw(16) << fixed(row.rho_b) << std::setw(8) << row.winner << fixed(row.printed_a, 3)
          << ", " << fixed(row.printed_b, 3) << "\n";
  }
  return ok ? kOk : kFinding;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Toughness and spectral radius toolkit", "toughspec"};
  app.require_subcommand(1);

  auto* rho = app.add_subcommand("rho", "Spectral radius by power iteration");
  add_graph_source(rho, o);
  rho->add_option("--tol", o.tol, "Residual tolerance");
  add_json(rho, o);

  auto* spectrum = app.add_subcommand("spectrum", "All adjacency eigenvalues, nonincreasing");
  add_graph_source(spectrum, o);
  add_json(spectrum, o);

  auto* tough = app.add_subcommand("tough", "Exact toughness by cut enumeration");
  add_graph_source(tough, o);
  tough->add_option("--kind", o.kind, "chvatal, variation, tb or taub")
      ->check(CLI::IsMember({"chvatal", "variation", "tb", "taub"}));
  tough->add_flag("--divisible", o.divisible,
                  "Variation kinds: only cuts where |S| and c-1 divide one another");
  add_json(tough, o);

  auto* construct = app.add_subcommand("construct", "Build an extremal family graph");
  construct->add_option("--family", o.family, "Family name")->required();
  add_family_params(construct, o);
  add_format(construct, o);
  add_json(construct, o);

  auto* bounds = app.add_subcommand("bounds", "Check spectral radius upper bounds");
  add_graph_source(bounds, o);
  bounds->add_option("--bound", o.bound, "hong, nosal or degree (default: all that apply)");
  add_json(bounds, o);

  auto* lemma = app.add_subcommand("lemma", "Check a spectral comparison lemma");
  lemma->add_option("--lemma", o.lemma, "L31, L43 or L44")->required();
  lemma->add_flag("--sweep", o.sweep, "Run the whole parameter grid");
  lemma->add_option("--s", o.s, "Join size (L31) or s (L44)");
  lemma->add_option("--t", o.t, "Number of parts (L31, optional check)");
  lemma->add_option("--p", o.p, "Minimum part size (L31)");
  lemma->add_option("--parts", o.parts, "Part sizes, comma separated (L31)");
  lemma->add_option("--k", o.k, "k (L43)");
  lemma->add_option("--n", o.n, "Vertex count (L43, L44)");
  add_json(lemma, o);

  auto* rotate = app.add_subcommand("rotate", "Edge rotation experiment");
  add_graph_source(rotate, o);
  rotate->add_option("--s1", o.s1, "S1, comma separated")->required();
  rotate->add_option("--s2", o.s2, "S2, comma separated")->required();
  rotate->add_option("--t-set", o.t_set, "T, comma separated")->required();
  add_json(rotate, o);

  auto* brouwer = app.add_subcommand("brouwer", "t(G) - (d/lambda - 1) for a regular graph");
  add_graph_source(brouwer, o);
  add_json(brouwer, o);

  auto* verify = app.add_subcommand("verify", "Classify a graph against a theorem");
  verify->add_option("--theorem", o.theorem, "T11_I, T11_II, T12_I or T12_II")->required();
  add_graph_source(verify, o);
  add_json(verify, o);

  auto* search = app.add_subcommand("search", "Random counterexample search");
  search->add_option("--theorem", o.theorem, "T11_I, T11_II, T12_I or T12_II")->required();
  add_family_params(search, o);
  search->add_option("--samples", o.samples, "Number of samples")->check(CLI::NonNegativeNumber);
  search->add_option("--seed", o.seed, "Master seed");
  add_json(search, o);

  auto* remark = app.add_subcommand("remark", "Reproduce the published candidate comparison");
  add_json(remark, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kUsage;
  }

  try {
    if (rho->parsed()) return cmd_rho(o, in, out);
    if (spectrum->parsed()) return cmd_spectrum(o, in, out);
    if (tough->parsed()) return cmd_tough(o, in, out);
    if (construct->parsed()) return cmd_construct(o, out);
    if (bounds->parsed()) return cmd_bounds(o, in, out);
    if (lemma->parsed()) return cmd_lemma(o, out);
    if (rotate->parsed()) return cmd_rotate(o, in, out);
    if (brouwer->parsed()) return cmd_brouwer(o, in, out);
    if (verify->parsed()) return cmd_verify(o, in, out);
    if (search->parsed()) return cmd_search(o, out);
    if (remark->parsed()) return cmd_remark(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

CommandOutcome run(const std::vector<std::string>& args) {
  std::istringstream in;
  std::ostringstream out, err;
  CommandOutcome res;
  res.exit_code = run(args, in, out, err);
  res.out = out.str();
  res.err = err.str();
  return res;
}

}  // namespace toughspec::cli
