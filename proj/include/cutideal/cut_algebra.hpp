#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "cutideal/graph.hpp"
#include "cutideal/monomial.hpp"

namespace cutideal {

/// Unordered bipartition A | ([n] \ A) stored by its canonical side, the one
/// not containing vertex 1. Bit (v - 1) of `side` marks vertex v, so the
/// canonical index of the cut is side >> 1.
class Cut {
 public:
  Cut() = default;
  /// Any side may be given; it is complemented when it contains vertex 1.
  Cut(int n, std::uint32_t side_mask);
  static Cut from_vertices(int n, std::span<const int> side);
  static Cut from_index(int n, std::uint32_t index);

  int n() const noexcept { return n_; }
  std::uint32_t side() const noexcept { return side_; }
  std::uint32_t index() const noexcept { return side_ >> 1; }
  bool contains(int v) const { return (side_ >> (v - 1)) & 1u; }
  /// min(|A|, |B|)
  int min_side_size() const;
  std::vector<int> side_vertices() const;
  std::vector<int> complement_vertices() const;
  /// "{2,5}|{1,3,4}", canonical side first.
  std::string to_string() const;

  auto operator<=>(const Cut&) const = default;

 private:
  int n_ = 0;
  std::uint32_t side_ = 0;
};

/// All 2^(n-1) canonical cuts, index order (binary counting over {2..n}).
std::vector<Cut> enumerate_cuts(int n);

/// Element of the affine semigroup generated by the cut matrix columns:
/// one exponent per edge (sorted edge order) followed by the s-degree.
class SemigroupElement {
 public:
  SemigroupElement() = default;
  explicit SemigroupElement(std::size_t num_edges) : coords_(num_edges + 1, 0) {}
  SemigroupElement(std::vector<std::int32_t> edge_exponents, std::int32_t s_degree);

  std::size_t num_edges() const noexcept { return coords_.empty() ? 0 : coords_.size() - 1; }
  std::span<const std::int32_t> edge_exponents() const {
    return std::span<const std::int32_t>(coords_).first(num_edges());
  }
  std::int32_t s_degree() const { return coords_.back(); }
  const std::vector<std::int32_t>& coords() const noexcept { return coords_; }

  bool nonnegative() const;

  SemigroupElement& operator+=(const SemigroupElement& other);
  SemigroupElement& operator-=(const SemigroupElement& other);
  friend SemigroupElement operator+(SemigroupElement a, const SemigroupElement& b) { return a += b; }
  friend SemigroupElement operator-(SemigroupElement a, const SemigroupElement& b) { return a -= b; }

  auto operator<=>(const SemigroupElement&) const = default;

 private:
  std::vector<std::int32_t> coords_;
};

struct SemigroupElementHash {
  std::size_t operator()(const SemigroupElement& e) const noexcept;
};

using SemigroupSet = std::unordered_set<SemigroupElement, SemigroupElementHash>;

/// A cut vector is the degree-one semigroup element of a single cut.
using CutVector = SemigroupElement;

CutVector cut_vector(const Graph& g, const Cut& c);

/// Homogenized cut matrix X_G: columns are cut vectors in canonical cut order.
class CutMatrix {
 public:
  explicit CutMatrix(Graph g);

  const Graph& graph() const noexcept { return graph_; }
  std::size_t rows() const noexcept { return graph_.size() + 1; }
  std::size_t cols() const noexcept { return columns_.size(); }
  const CutVector& column(std::size_t i) const { return columns_.at(i); }
  const std::vector<CutVector>& columns() const noexcept { return columns_; }
  Cut cut(std::size_t i) const { return cuts_.at(i); }

  /// Rows of space-separated 0/1 entries, one per edge, then the s-row.
  std::string to_text() const;

 private:
  Graph graph_;
  std::vector<Cut> cuts_;
  std::vector<CutVector> columns_;
};

inline CutMatrix cut_matrix(const Graph& g) { return CutMatrix(g); }

/// Image of a monomial under the cut map: column sum weighted by exponents.
SemigroupElement evaluate_monomial(const CutMatrix& m, const Monomial& mono);

/// Degree-graded slices of the semigroup, levels[d] = elements of s-degree d.
class SemigroupLevels {
 public:
  SemigroupLevels(const CutMatrix& m, int max_degree);

  int max_degree() const noexcept { return static_cast<int>(levels_.size()) - 1; }
  const SemigroupSet& level(int d) const { return levels_.at(static_cast<std::size_t>(d)); }
  /// Exact membership for elements of degree <= max_degree().
  bool contains(const SemigroupElement& w) const;

 private:
  std::vector<SemigroupSet> levels_;
};

/// Forms the 0-sum of g1 and g2 (vertex 1 of each glued) and checks that its
/// cut matrix columns are exactly the pairings of one g1 column with one g2
/// column, after mapping each edge back to the summand it came from.
bool zero_sum_segre_check(const Graph& g1, const Graph& g2);

}  // namespace cutideal
