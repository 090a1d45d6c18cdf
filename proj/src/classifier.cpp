#include "cutideal/classifier.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "cutideal/cut_algebra.hpp"
#include "cutideal/errors.hpp"
#include "cutideal/koszul.hpp"
#include "cutideal/minor.hpp"
#include "cutideal/toric_ideal.hpp"

namespace cutideal {

namespace {

using Json = nlohmann::ordered_json;

bool has_k5_minor(const Graph& g) {
  if (g.order() < 5 || g.size() < 10 || !has_k4_minor(g)) return false;
  return has_minor(g, complete_graph(5));
}

Json cut_pair_json(const CutMatrix& m, std::size_t i, std::size_t j) {
  return Json::array({m.cut(i).to_string(), m.cut(j).to_string()});
}

ComputationalCheck koszul_check(const ClassificationReport& report, const CutMatrix& m,
                                const CrossValidateOptions& options) {
  const KoszulVerdict verdict = is_strongly_koszul_up_to(m, options.degree, {.exhaustive = options.exhaustive});
  ComputationalCheck check;
  check.name = "strongly_koszul";
  check.bound = options.degree;
  check.verdict = verdict.passed() ? "pass-up-to-" + std::to_string(options.degree) : "fail";
  check.status = agreement_of(report.strongly_koszul_theorem, verdict.passed());
  auto witness_json = [&](const KoszulWitness& w) {
    return Json{{"pair", {w.i, w.j}},
                {"cuts", cut_pair_json(m, w.i, w.j)},
                {"degree", w.degree},
                {"element", w.element.coords()}};
  };
  if (verdict.witness) {
    check.witness = witness_json(*verdict.witness);
    if (options.exhaustive) {
      Json all = Json::array();
      for (const KoszulWitness& w : verdict.all_failures) all.push_back(witness_json(w));
      check.witness["all_failures"] = std::move(all);
    }
  }
  return check;
}

ComputationalCheck quadratic_generation_check(const ClassificationReport& report, const CutMatrix& m,
                                              const CrossValidateOptions& options) {
  ComputationalCheck check;
  check.name = "quadratic_generation";
  check.bound = options.degree;
  std::vector<Binomial> gens;
  if (m.cols() >= 2) gens = markov_generators_up_to(m, options.degree);
  auto high = std::find_if(gens.begin(), gens.end(), [](const Binomial& b) { return b.lead.degree() > 2; });
  const bool quadratic = high == gens.end();
  check.verdict = quadratic ? "quadratic-up-to-" + std::to_string(options.degree)
                            : "degree-" + std::to_string(high->lead.degree()) + "-generator";
  check.status = agreement_of(report.quadratic_generation_theorem, quadratic);
  if (!quadratic) check.witness = Json{{"degree", high->lead.degree()}, {"binomial", high->to_string()}};
  return check;
}

ComputationalCheck compressed_check(const ClassificationReport& report, const CrossValidateOptions& options) {
  const ProbeResult probe = compressed_probe(report.graph, options.trials, options.seed, options.degree);
  ComputationalCheck check;
  check.name = "compressed";
  check.bound = options.degree;
  check.verdict = to_string(probe.verdict);
  check.status = agreement_of(report.compressed_theorem, !probe.witness.has_value());
  if (probe.witness) {
    check.witness = Json{{"trial", probe.witness->trial},
                         {"seed", options.seed},
                         {"ascending_variables", probe.witness->order.ascending_variables()},
                         {"lead", probe.witness->lead.to_string()}};
  }
  return check;
}

std::optional<ComputationalCheck> closed_form_check(const ClassificationReport& report,
                                                    const CrossValidateOptions& options) {
  const GraphFamily& family = report.family;
  if (family.m < 2 || (family.tag != FamilyTag::star && family.tag != FamilyTag::bipartite_two)) {
    return std::nullopt;
  }
  std::vector<Binomial> candidates;
  Graph base;
  if (family.tag == FamilyTag::star) {
    candidates = lemma_families_k1m(family.m + 2);
    base = star_for_lemma(family.m + 2);
  } else {
    candidates = theorem_families_k2m(family.m + 2).all();
    base = make_family(family);
  }
  const CutMatrix m(base);
  const int bound = std::max(options.degree, 4);
  const GroebnerCertificate cert = is_groebner_basis(candidates, paper_order(base.order()), m, bound);

  ComputationalCheck check;
  check.name = "closed_form_gb";
  check.bound = bound;
  check.verdict = cert.holds() ? "certified" : "not-certified";
  // The families are quadratic, so they only exist where the theorem says so.
  check.status = agreement_of(report.quadratic_gb_theorem.value_or(false), cert.holds());
  check.witness = Json{{"family", to_string(family)},
                       {"size", candidates.size()},
                       {"spairs_reduce", cert.spairs_reduce},
                       {"hilbert_ok", cert.hilbert_ok},
                       {"leads_first", cert.leads_first}};
  return check;
}

}  // namespace

std::set<int> induced_cycles(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) adj[v - 1] = g.neighbor_mask(v);
  std::set<int> lengths;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t s = 7; s < limit; ++s) {
    const auto set = static_cast<std::uint32_t>(s);
    if (std::popcount(set) < 3) continue;
    bool two_regular = true;
    for (std::uint32_t rest = set; rest && two_regular; rest &= rest - 1) {
      two_regular = std::popcount(adj[std::countr_zero(rest)] & set) == 2;
    }
    if (!two_regular) continue;
    // A 2-regular graph is a cycle iff it is connected.
    std::uint32_t reached = set & -set;
    std::uint32_t frontier = reached;
    while (frontier) {
      std::uint32_t grow = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) grow |= adj[std::countr_zero(f)] & set;
      frontier = grow & ~reached;
      reached |= grow;
    }
    if (reached == set) lengths.insert(std::popcount(set));
  }
  return lengths;
}

std::string to_string(Agreement agreement) {
  switch (agreement) {
    case Agreement::confirmed: return "confirmed";
    case Agreement::consistent: return "consistent";
    case Agreement::inconclusive: return "inconclusive";
    case Agreement::contradiction: return "contradiction";
  }
  return "?";
}

Agreement agreement_of(bool theorem, bool check_passed) {
  if (theorem) return check_passed ? Agreement::consistent : Agreement::contradiction;
  return check_passed ? Agreement::inconclusive : Agreement::confirmed;
}

const ComputationalCheck* ClassificationReport::check(const std::string& name) const {
  for (const auto& c : computational_checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<std::string> ClassificationReport::disagreements() const {
  std::vector<std::string> names;
  for (const auto& c : computational_checks)
    if (!c.agrees()) names.push_back(c.name);
  return names;
}

ClassificationReport classify(const Graph& g, std::string descriptor) {
  ClassificationReport report;
  report.descriptor = descriptor.empty() ? edge_list_string(g) : std::move(descriptor);
  report.graph = g;
  report.family = recognize_family(g);
  report.k4_minor = has_k4_minor(g);
  report.c5_minor = has_c5_minor(g);
  report.k5_minor = has_k5_minor(g);
  report.induced_cycle_lengths = induced_cycles(g);

  report.strongly_koszul_theorem = true;
  for (const auto& part : components(g)) {
    const Graph h = induced_subgraph(g, part);
    report.strongly_koszul_theorem = report.strongly_koszul_theorem && !has_k4_minor(h) && !has_c5_minor(h);
  }
  report.quadratic_generation_theorem = !report.k4_minor;
  const bool short_cycles = std::all_of(report.induced_cycle_lengths.begin(), report.induced_cycle_lengths.end(),
                                        [](int len) { return len <= 4; });
  report.compressed_theorem = !report.k5_minor && short_cycles;
  if (!report.k4_minor && !report.c5_minor) report.quadratic_gb_theorem = true;
  return report;
}

ClassificationReport cross_validate(const Graph& g, const CrossValidateOptions& options, std::string descriptor) {
  if (g.order() > kCrossValidateGuard && !options.override_guard) {
    throw ResourceGuardError("cross-validation refuses n = " + std::to_string(g.order()) + " > " +
                             std::to_string(kCrossValidateGuard) + " without the override");
  }
  if (options.degree < 3) throw DomainError("cross-validation needs a degree bound >= 3");
  ClassificationReport report = classify(g, std::move(descriptor));
  const CutMatrix m(g);
  report.computational_checks.push_back(koszul_check(report, m, options));
  report.computational_checks.push_back(quadratic_generation_check(report, m, options));
  report.computational_checks.push_back(compressed_check(report, options));
  if (auto check = closed_form_check(report, options)) report.computational_checks.push_back(std::move(*check));
  return report;
}

nlohmann::ordered_json to_json(const ClassificationReport& report) {
  Json edges = Json::array();
  for (const Edge& e : report.graph.edges()) edges.push_back({e.u, e.v});
  Json checks = Json::array();
  for (const auto& c : report.computational_checks) {
    checks.push_back(Json{{"name", c.name},
                          {"verdict", c.verdict},
                          {"bound", c.bound},
                          {"agreement", c.agrees()},
                          {"status", to_string(c.status)},
                          {"witness", c.witness}});
  }
  return Json{{"graph",
               {{"descriptor", report.descriptor},
                {"n", report.graph.order()},
                {"edges", std::move(edges)},
                {"family", to_string(report.family)},
                {"canonical_form", edge_list_string(canonical_form(report.graph))}}},
              {"k4_minor", report.k4_minor},
              {"c5_minor", report.c5_minor},
              {"k5_minor", report.k5_minor},
              {"induced_cycle_lengths", report.induced_cycle_lengths},
              {"strongly_koszul_theorem", report.strongly_koszul_theorem},
              {"quadratic_generation_theorem", report.quadratic_generation_theorem},
              {"compressed_theorem", report.compressed_theorem},
              {"quadratic_gb_theorem", report.quadratic_gb_theorem ? Json(true) : Json(nullptr)},
              {"computational_checks", std::move(checks)}};
}

std::string csv_header() {
  return "n,edges,canonical_form,k4_minor,c5_minor,strongly_koszul_theorem,"
         "quadratic_generation_theorem,compressed_theorem,quadratic_gb_theorem,agreement";
}

std::string csv_row(const ClassificationReport& report) {
  auto flag = [](bool b) { return b ? "true" : "false"; };
  std::string agreement = "agree";
  const auto bad = report.disagreements();
  if (!bad.empty()) {
    agreement = "disagree:";
    for (std::size_t i = 0; i < bad.size(); ++i) agreement += (i ? ";" : "") + bad[i];
  }
  std::string row = std::to_string(report.graph.order()) + "," + std::to_string(report.graph.size()) + "," +
                    edge_list_string(canonical_form(report.graph)) + ",";
  row += flag(report.k4_minor);
  row += ",";
  row += flag(report.c5_minor);
  row += ",";
  row += flag(report.strongly_koszul_theorem);
  row += ",";
  row += flag(report.quadratic_generation_theorem);
  row += ",";
  row += flag(report.compressed_theorem);
  row += ",";
  row += report.quadratic_gb_theorem ? "true" : "unknown";
  row += "," + agreement;
  return row;
}

std::vector<Graph> graph_classes(int n, const std::function<bool(const Graph&)>& keep) {
  if (n < 1 || n > 8) throw DomainError("graph_classes supports 1..8 vertices");
  std::vector<Edge> slots;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) slots.emplace_back(i, j);
  std::map<std::pair<std::size_t, CanonicalCode>, Graph> found;
  const std::uint64_t limit = std::uint64_t{1} << slots.size();
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    edges.clear();
    for (std::size_t k = 0; k < slots.size(); ++k)
      if ((mask >> k) & 1u) edges.push_back(slots[k]);
    const Graph g(n, edges);
    if (!keep(g)) continue;
    const CanonicalCode code = canonical_code(g);
    const auto key = std::make_pair(g.size(), code);
    if (!found.contains(key)) found.emplace(key, canonical_form(g));
  }
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [key, g] : found) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> connected_graph_classes(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto level = graph_classes(n, [](const Graph& g) { return is_connected(g); });
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<ClassificationReport> run_corpus(int max_n, const CorpusOptions& options) {
  const std::vector<Graph> graphs = connected_graph_classes(max_n);
  return parallel_map(graphs.size(), options.jobs,
                      [&](std::size_t i) { return cross_validate(graphs[i], options.validate); });
}

}  // namespace cutideal
