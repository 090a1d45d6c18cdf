#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "cutideal/graph.hpp"

namespace cutideal {

/// Lengths of the chordless cycles of g, by search over vertex subsets.
std::set<int> induced_cycles(const Graph& g);

/// How a bounded computation relates to the theorem's prediction.
///   confirmed     theorem false, computation found a conclusive failure
///   consistent    theorem true, computation passed up to its bound
///   inconclusive  theorem false, computation found nothing up to its bound
///   contradiction theorem true, computation found a failure
enum class Agreement { confirmed, consistent, inconclusive, contradiction };

std::string to_string(Agreement agreement);

/// Combines a theorem value with the outcome of its bounded check.
Agreement agreement_of(bool theorem, bool check_passed);

struct ComputationalCheck {
  std::string name;
  std::string verdict;
  int bound = 0;
  Agreement status = Agreement::consistent;
  nlohmann::ordered_json witness;  // null when there is nothing to show

  /// Strict agreement: a false theorem needs a failure, a true one a pass.
  bool agrees() const { return status == Agreement::confirmed || status == Agreement::consistent; }
};

struct ClassificationReport {
  std::string descriptor;
  Graph graph;
  GraphFamily family;
  bool k4_minor = false;
  bool c5_minor = false;
  bool k5_minor = false;
  std::set<int> induced_cycle_lengths;
  bool strongly_koszul_theorem = false;
  bool quadratic_generation_theorem = false;
  bool compressed_theorem = false;
  std::optional<bool> quadratic_gb_theorem;  // true or unknown, never false
  std::vector<ComputationalCheck> computational_checks;

  const ComputationalCheck* check(const std::string& name) const;
  /// Names of the checks whose strict agreement flag is false.
  std::vector<std::string> disagreements() const;
};

/// Theorem-derived fields only. Disconnected graphs combine the per-component
/// strongly Koszul predictions by conjunction.
ClassificationReport classify(const Graph& g, std::string descriptor = {});

struct CrossValidateOptions {
  int degree = 4;
  int trials = 50;
  std::uint64_t seed = 0;
  bool override_guard = false;
  bool exhaustive = false;  // collect every failing Koszul pair
};

inline constexpr int kCrossValidateGuard = 8;

/// classify() followed by the bounded computations: strong Koszul pair check,
/// degree of the Markov generators, compressedness probe and, for stars and
/// K_{2,m}, certification of the closed-form Gröbner bases. Throws
/// ResourceGuardError when n > kCrossValidateGuard without the override.
ClassificationReport cross_validate(const Graph& g, const CrossValidateOptions& options,
                                    std::string descriptor = {});

nlohmann::ordered_json to_json(const ClassificationReport& report);

std::string csv_header();
/// n, edge count, canonical form, six theorem columns, agreement flag
/// ("agree", or "disagree:" followed by the failing check names).
std::string csv_row(const ClassificationReport& report);

/// Canonical forms of the isomorphism classes on n vertices accepted by keep,
/// which must be invariant under relabeling. Ordered by (size, canonical code).
std::vector<Graph> graph_classes(int n, const std::function<bool(const Graph&)>& keep);

/// Connected classes on 1..max_n vertices, ordered by n first.
std::vector<Graph> connected_graph_classes(int max_n);

/// Applies fn to 0..count-1 on up to `jobs` threads and returns the results
/// in index order.
template <class Fn>
auto parallel_map(std::size_t count, unsigned jobs, Fn fn) -> std::vector<decltype(fn(std::size_t{}))>;

struct CorpusOptions {
  CrossValidateOptions validate;
  unsigned jobs = 1;
};

/// Cross-validates every connected class on up to max_n vertices.
std::vector<ClassificationReport> run_corpus(int max_n, const CorpusOptions& options);

}  // namespace cutideal

#include "cutideal/parallel_impl.hpp"
