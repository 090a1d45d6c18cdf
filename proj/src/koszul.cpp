#include "cutideal/koszul.hpp"

#include <algorithm>
#include <functional>

#include "cutideal/errors.hpp"

namespace cutideal {

bool semigroup_membership(const CutMatrix& m, const SemigroupElement& w) {
  if (w.num_edges() != m.graph().size()) throw DomainError("element size does not match cut matrix");
  if (!w.nonnegative()) return false;
  const std::size_t edges = m.graph().size();
  std::vector<std::int32_t> rest = w.coords();

  std::function<bool(std::size_t, std::int32_t)> search = [&](std::size_t start, std::int32_t left) {
    if (left == 0) return std::all_of(rest.begin(), rest.end(), [](std::int32_t x) { return x == 0; });
    for (std::size_t r = 0; r < edges; ++r)
      if (rest[r] > left) return false;
    for (std::size_t c = start; c < m.cols(); ++c) {
      const auto& col = m.column(c).coords();
      bool fits = true;
      for (std::size_t r = 0; r < edges && fits; ++r) fits = col[r] <= rest[r];
      if (!fits) continue;
      for (std::size_t r = 0; r <= edges; ++r) rest[r] -= col[r];
      const bool found = search(c, left - 1);
      for (std::size_t r = 0; r <= edges; ++r) rest[r] += col[r];
      if (found) return true;
    }
    return false;
  };
  return search(0, w.s_degree());
}

std::string to_string(KoszulVerdict::Status status) {
  return status == KoszulVerdict::Status::fail ? "fail" : "pass-up-to-D";
}

IntersectionChecker::IntersectionChecker(const CutMatrix& m, int max_degree)
    : matrix_(&m), levels_(m, max_degree) {}

std::vector<SemigroupElement> IntersectionChecker::intersection_elements(std::size_t i, std::size_t j, int d) const {
  if (i == j) throw DomainError("intersection needs two distinct generators");
  if (i >= matrix_->cols() || j >= matrix_->cols()) throw DomainError("cut index out of range");
  if (d < 1) throw DomainError("intersection degree must be >= 1");
  if (d > max_degree()) throw DomainError("intersection degree exceeds the checker's bound");
  const CutVector& ui = matrix_->column(i);
  const CutVector& uj = matrix_->column(j);
  std::vector<SemigroupElement> out;
  for (const SemigroupElement& x : levels_.level(d - 1)) {
    SemigroupElement w = x + ui;
    if (levels_.contains(w - uj)) out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool IntersectionChecker::generated_in_degree_two(const SemigroupElement& w,
                                                  std::span<const SemigroupElement> degree_two) const {
  return std::any_of(degree_two.begin(), degree_two.end(),
                     [&](const SemigroupElement& v) { return levels_.contains(w - v); });
}

KoszulVerdict IntersectionChecker::pair_verdict(std::size_t i, std::size_t j) const {
  KoszulVerdict verdict;
  verdict.bound = max_degree();
  const auto degree_two = intersection_elements(i, j, 2);
  for (int d = 3; d <= max_degree(); ++d) {
    for (const SemigroupElement& w : intersection_elements(i, j, d)) {
      if (!generated_in_degree_two(w, degree_two)) {
        verdict.status = KoszulVerdict::Status::fail;
        verdict.witness = KoszulWitness{i, j, d, w};
        return verdict;
      }
    }
  }
  return verdict;
}

std::vector<SemigroupElement> intersection_elements(const CutMatrix& m, std::size_t i, std::size_t j, int d) {
  const IntersectionChecker checker(m, std::max(d, 1));
  return checker.intersection_elements(i, j, d);
}

KoszulVerdict is_pair_degree2_generated(const CutMatrix& m, std::size_t i, std::size_t j, int max_degree) {
  if (max_degree < 3) throw DomainError("strong Koszul check needs a bound >= 3");
  const IntersectionChecker checker(m, max_degree);
  return checker.pair_verdict(i, j);
}

KoszulVerdict is_strongly_koszul_up_to(const CutMatrix& m, int max_degree, KoszulOptions options) {
  if (max_degree < 3) throw DomainError("strong Koszul check needs a bound >= 3");
  const IntersectionChecker checker(m, max_degree);
  KoszulVerdict verdict;
  verdict.bound = max_degree;
  for (std::size_t i = 0; i < m.cols(); ++i) {
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      KoszulVerdict pair = checker.pair_verdict(i, j);
      if (pair.passed()) continue;
      if (!verdict.witness) {
        verdict.status = KoszulVerdict::Status::fail;
        verdict.witness = pair.witness;
      }
      if (!options.exhaustive) return verdict;
      verdict.all_failures.push_back(*pair.witness);
    }
  }
  return verdict;
}

}  // namespace cutideal
