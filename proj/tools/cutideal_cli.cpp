#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "cutideal/classifier.hpp"
#include "cutideal/cut_algebra.hpp"
#include "cutideal/descriptor.hpp"
#include "cutideal/errors.hpp"
#include "cutideal/toric_ideal.hpp"

namespace {

using namespace cutideal;

constexpr int kExitParse = 2;
constexpr int kExitGuard = 3;
constexpr int kExitOther = 1;

struct Output {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw std::runtime_error("cannot write " + path);
    stream = &file;
  }
};

void check_guard(const Graph& g, bool override_guard) {
  if (g.order() > kCrossValidateGuard && !override_guard) {
    throw ResourceGuardError("n = " + std::to_string(g.order()) + " exceeds the guard of " +
                             std::to_string(kCrossValidateGuard) + "; pass --override-guard");
  }
}

TieBreak tie_break_of(const std::string& name) {
  static const std::map<std::string, TieBreak> names = {{"default", TieBreak::standard},
                                                        {"alt1", TieBreak::descending},
                                                        {"alt2", TieBreak::by_side_size},
                                                        {"alt3", TieBreak::shuffled}};
  return names.at(name);
}

void run_gb(const std::string& input, const std::string& order_name, bool certify, int degree,
            bool override_guard, const std::string& out_path) {
  const Graph g = load_graph(input);
  check_guard(g, override_guard);
  const CutMatrix m(g);
  const MonomialOrder order = paper_order(g.order(), tie_break_of(order_name));
  std::vector<Binomial> gb;
  if (m.cols() >= 2) gb = buchberger(m, markov_generators_up_to(m, degree), order, {.degree_cap = degree});

  std::vector<std::string> header = {"graph " + input + ": " + edge_list_string(g),
                                     "order " + order.name() + ", complete up to degree " + std::to_string(degree),
                                     std::to_string(gb.size()) + " binomials"};
  Output out(out_path);
  *out.stream << format_binomials(gb, header);
  if (!certify) return;

  const GraphFamily family = recognize_family(g);
  std::vector<std::pair<std::string, std::vector<Binomial>>> parts;
  if (family.tag == FamilyTag::star && family.m >= 2) {
    parts.emplace_back("lemma family", lemma_families_k1m(family.m + 2));
  } else if (family.tag == FamilyTag::bipartite_two && family.m >= 2) {
    const TheoremFamilies f = theorem_families_k2m(family.m + 2);
    parts = {{"family (i)", f.crossing}, {"family (ii)", f.split}, {"family (iii)", f.joined}};
  } else {
    *out.stream << "# certify: no closed-form family for " << to_string(family) << "\n";
    return;
  }
  // The closed forms use the canonical labeling of the family.
  const Graph base = make_family(family);
  if (!(base == g)) *out.stream << "# certify: input relabeled to " << edge_list_string(base) << "\n";
  const CutMatrix bm(base);
  const MonomialOrder base_order = paper_order(base.order(), tie_break_of(order_name));
  std::vector<Binomial> all;
  for (const auto& [name, family_part] : parts) {
    const std::vector<std::string> part_header = {name + " of " + to_string(family) + ", " +
                                                  std::to_string(family_part.size()) + " binomials"};
    *out.stream << format_binomials(family_part, part_header);
    all.insert(all.end(), family_part.begin(), family_part.end());
  }
  const GroebnerCertificate cert = is_groebner_basis(all, base_order, bm, std::max(degree, 4));
  *out.stream << "# certified " << (cert.holds() ? "true" : "false") << " (s-pairs "
              << (cert.spairs_reduce ? "reduce" : "fail") << ", hilbert up to " << cert.bound << " "
              << (cert.hilbert_ok ? "match" : "differ") << ", leads first " << (cert.leads_first ? "yes" : "no")
              << ")\n";
}

int run_enumerate(int max_n, const CorpusOptions& options, bool override_guard, const std::string& out_path) {
  if (max_n < 1) throw DomainError("--max-n must be >= 1");
  if (max_n > 6 && !override_guard) {
    throw ResourceGuardError("--max-n " + std::to_string(max_n) + " exceeds 6; pass --override-guard");
  }
  const auto reports = run_corpus(max_n, options);
  Output out(out_path);
  *out.stream << csv_header() << "\n";
  std::size_t disagreeing = 0;
  for (const auto& r : reports) {
    *out.stream << csv_row(r) << "\n";
    if (!r.disagreements().empty()) ++disagreeing;
  }
  std::cerr << reports.size() << " classes, " << disagreeing << " with disagreements\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cut ideals of graphs: classification, Groebner bases and corpus runs"};
  app.require_subcommand(1);

  std::string input;
  std::string out_path;
  CrossValidateOptions validate;
  bool theorem_only = false;

  auto* classify_cmd = app.add_subcommand("classify", "Emit the JSON classification report");
  classify_cmd->add_option("input", input, "Graph file or family descriptor")->required();
  classify_cmd->add_flag("--theorem-only", theorem_only, "Skip the computational checks");
  classify_cmd->add_option("--degree", validate.degree, "Degree bound of the checks")->capture_default_str();
  classify_cmd->add_option("--trials", validate.trials, "Random orders in the compressedness probe")
      ->capture_default_str();
  classify_cmd->add_option("--seed", validate.seed, "Seed of the compressedness probe")->capture_default_str();
  classify_cmd->add_flag("--override-guard", validate.override_guard, "Allow graphs above the size guard");
  classify_cmd->add_flag("--exhaustive", validate.exhaustive, "List every failing Koszul pair");

  std::string order_name = "default";
  bool certify = false;
  int gb_degree = 4;
  bool gb_override = false;
  auto* gb_cmd = app.add_subcommand("gb", "Emit a Groebner basis of the cut ideal");
  gb_cmd->add_option("input", input, "Graph file or family descriptor")->required();
  gb_cmd->add_option("--order", order_name, "Tie-break of the monomial order")
      ->check(CLI::IsMember({"default", "alt1", "alt2", "alt3"}))
      ->capture_default_str();
  gb_cmd->add_flag("--certify", certify, "Certify the closed-form family of K1,m or K2,m");
  gb_cmd->add_option("--degree", gb_degree, "Degree bound")->check(CLI::Range(2, 12))->capture_default_str();
  gb_cmd->add_flag("--override-guard", gb_override, "Allow graphs above the size guard");
  gb_cmd->add_option("--out", out_path, "Output file (default: standard output)");

  int max_n = 4;
  CorpusOptions corpus;
  bool enum_override = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "Cross-validate every connected graph up to --max-n");
  enum_cmd->add_option("--max-n", max_n, "Largest vertex count")->capture_default_str();
  enum_cmd->add_option("--degree", corpus.validate.degree, "Degree bound of the checks")->capture_default_str();
  enum_cmd->add_option("--trials", corpus.validate.trials, "Random orders in the compressedness probe")
      ->capture_default_str();
  enum_cmd->add_option("--seed", corpus.validate.seed, "Seed of the compressedness probe")->capture_default_str();
  enum_cmd->add_option("--jobs", corpus.jobs, "Worker threads")->capture_default_str();
  enum_cmd->add_flag("--override-guard", enum_override, "Allow --max-n above 6");
  enum_cmd->add_option("--out", out_path, "CSV file (default: standard output)");

  auto* matrix_cmd = app.add_subcommand("matrix", "Print the cut matrix");
  matrix_cmd->add_option("input", input, "Graph file or family descriptor")->required();

  auto* graph_cmd = app.add_subcommand("graph", "Print the graph in the edge-list file format");
  graph_cmd->add_option("input", input, "Graph file or family descriptor")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify_cmd->parsed()) {
      const Graph g = load_graph(input);
      const ClassificationReport report =
          theorem_only ? classify(g, input) : cross_validate(g, validate, input);
      std::cout << to_json(report).dump(2) << "\n";
    } else if (gb_cmd->parsed()) {
      run_gb(input, order_name, certify, gb_degree, gb_override, out_path);
    } else if (enum_cmd->parsed()) {
      return run_enumerate(max_n, corpus, enum_override, out_path);
    } else if (matrix_cmd->parsed()) {
      std::cout << CutMatrix(load_graph(input)).to_text();
    } else if (graph_cmd->parsed()) {
      write_graph(std::cout, load_graph(input));
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ResourceGuardError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOther;
  }
  return 0;
}
