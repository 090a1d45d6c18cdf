#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cutideal/cut_algebra.hpp"

namespace cutideal {

/// Exact test that w is a nonnegative integer combination of the columns of
/// m, using exactly w.s_degree() columns. Depth-first with pruning.
bool semigroup_membership(const CutMatrix& m, const SemigroupElement& w);

/// A degree-d element of (u_i) ∩ (u_j) that no degree-2 element divides.
struct KoszulWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  int degree = 0;
  SemigroupElement element;
};

struct KoszulVerdict {
  enum class Status { pass_up_to_bound, fail };
  Status status = Status::pass_up_to_bound;
  int bound = 0;
  std::optional<KoszulWitness> witness;    // first failure, present iff fail
  std::vector<KoszulWitness> all_failures;  // exhaustive mode only

  bool passed() const { return status == Status::pass_up_to_bound; }
};

std::string to_string(KoszulVerdict::Status status);

/// Semigroup slices up to a degree bound, shared by the intersection checks
/// of one cut matrix.
class IntersectionChecker {
 public:
  IntersectionChecker(const CutMatrix& m, int max_degree);

  const CutMatrix& matrix() const noexcept { return *matrix_; }
  int max_degree() const noexcept { return levels_.max_degree(); }

  /// Degree-d elements w with w - u_i and w - u_j both in the semigroup,
  /// sorted by coordinates.
  std::vector<SemigroupElement> intersection_elements(std::size_t i, std::size_t j, int d) const;

  /// Checks degrees 3..max_degree for an element not reachable from the
  /// degree-2 part; returns the first (lowest degree, smallest) failure.
  KoszulVerdict pair_verdict(std::size_t i, std::size_t j) const;

  /// True when w - v is in the semigroup for some degree-2 element v of the
  /// intersection.
  bool generated_in_degree_two(const SemigroupElement& w, std::span<const SemigroupElement> degree_two) const;

  bool contains(const SemigroupElement& w) const { return levels_.contains(w); }

 private:
  const CutMatrix* matrix_;
  SemigroupLevels levels_;
};

std::vector<SemigroupElement> intersection_elements(const CutMatrix& m, std::size_t i, std::size_t j, int d);

KoszulVerdict is_pair_degree2_generated(const CutMatrix& m, std::size_t i, std::size_t j, int max_degree);

struct KoszulOptions {
  bool exhaustive = false;  // collect every failing pair instead of stopping
};

/// Runs the pair check over all i < j in lexicographic order.
KoszulVerdict is_strongly_koszul_up_to(const CutMatrix& m, int max_degree, KoszulOptions options = {});

}  // namespace cutideal
