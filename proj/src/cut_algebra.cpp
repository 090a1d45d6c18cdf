#include "cutideal/cut_algebra.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "cutideal/errors.hpp"

namespace cutideal {

Cut::Cut(int n, std::uint32_t side_mask) : n_(n) {
  if (n < 1 || n > Graph::kMaxVertices) throw DomainError("cut needs 1 <= n <= 31");
  const std::uint32_t all = n == 32 ? ~0u : (std::uint32_t{1} << n) - 1;
  if (side_mask & ~all) throw DomainError("cut side has a vertex outside 1..n");
  side_ = (side_mask & 1u) ? (all & ~side_mask) : side_mask;
}

Cut Cut::from_vertices(int n, std::span<const int> side) {
  std::uint32_t mask = 0;
  for (int v : side) {
    if (v < 1 || v > n) throw DomainError("cut vertex outside 1..n");
    mask |= std::uint32_t{1} << (v - 1);
  }
  return Cut(n, mask);
}

Cut Cut::from_index(int n, std::uint32_t index) {
  if (n < 1) throw DomainError("cut needs n >= 1");
  if (n <= 31 && index >= (std::uint32_t{1} << (n - 1))) throw DomainError("cut index out of range");
  return Cut(n, index << 1);
}

int Cut::min_side_size() const {
  const int a = std::popcount(side_);
  return std::min(a, n_ - a);
}

std::vector<int> Cut::side_vertices() const {
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

std::vector<int> Cut::complement_vertices() const {
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v)
    if (!contains(v)) out.push_back(v);
  return out;
}

std::string Cut::to_string() const {
  auto fmt = [](const std::vector<int>& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
    return s + "}";
  };
  return fmt(side_vertices()) + "|" + fmt(complement_vertices());
}

std::vector<Cut> enumerate_cuts(int n) {
  if (n < 1) throw DomainError("enumerate_cuts needs n >= 1");
  if (n > 24) throw DomainError("enumerate_cuts limited to n <= 24");
  std::vector<Cut> cuts;
  const std::uint32_t count = std::uint32_t{1} << (n - 1);
  cuts.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) cuts.push_back(Cut::from_index(n, i));
  return cuts;
}

SemigroupElement::SemigroupElement(std::vector<std::int32_t> edge_exponents, std::int32_t s_degree)
    : coords_(std::move(edge_exponents)) {
  coords_.push_back(s_degree);
}

bool SemigroupElement::nonnegative() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int32_t x) { return x >= 0; });
}

SemigroupElement& SemigroupElement::operator+=(const SemigroupElement& other) {
  if (coords_.size() != other.coords_.size()) throw DomainError("semigroup element size mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

SemigroupElement& SemigroupElement::operator-=(const SemigroupElement& other) {
  if (coords_.size() != other.coords_.size()) throw DomainError("semigroup element size mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

std::size_t SemigroupElementHash::operator()(const SemigroupElement& e) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::int32_t x : e.coords()) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
    h *= 1099511628211ull;
  }
  return h;
}

CutVector cut_vector(const Graph& g, const Cut& c) {
  if (c.n() != g.order()) throw DomainError("cut and graph disagree on vertex count");
  std::vector<std::int32_t> coords;
  coords.reserve(g.size());
  for (const Edge& e : g.edges()) coords.push_back(c.contains(e.u) != c.contains(e.v) ? 1 : 0);
  return SemigroupElement(std::move(coords), 1);
}

CutMatrix::CutMatrix(Graph g) : graph_(std::move(g)), cuts_(enumerate_cuts(graph_.order())) {
  columns_.reserve(cuts_.size());
  for (const Cut& c : cuts_) columns_.push_back(cut_vector(graph_, c));
}

std::string CutMatrix::to_text() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) out << (c ? " " : "") << columns_[c].coords()[r];
    out << '\n';
  }
  return out.str();
}

SemigroupElement evaluate_monomial(const CutMatrix& m, const Monomial& mono) {
  SemigroupElement out(m.graph().size());
  std::vector<std::int32_t> acc(m.rows(), 0);
  for (const auto& t : mono.terms()) {
    if (t.var >= m.cols()) throw DomainError("monomial variable index out of range");
    const auto& col = m.column(t.var).coords();
    for (std::size_t r = 0; r < acc.size(); ++r) {
      const std::int64_t v = acc[r] + static_cast<std::int64_t>(col[r]) * t.exp;
      if (v > INT32_MAX) throw DomainError("semigroup coordinate overflow");
      acc[r] = static_cast<std::int32_t>(v);
    }
  }
  const std::int32_t s = acc.back();
  acc.pop_back();
  return SemigroupElement(std::move(acc), s);
}

SemigroupLevels::SemigroupLevels(const CutMatrix& m, int max_degree) {
  if (max_degree < 0) throw DomainError("max_degree must be >= 0");
  levels_.resize(static_cast<std::size_t>(max_degree) + 1);
  levels_[0].insert(SemigroupElement(m.graph().size()));
  for (int d = 1; d <= max_degree; ++d) {
    auto& cur = levels_[d];
    cur.reserve(levels_[d - 1].size() * 4);
    for (const auto& e : levels_[d - 1])
      for (const auto& col : m.columns()) cur.insert(e + col);
  }
}

bool SemigroupLevels::contains(const SemigroupElement& w) const {
  const std::int32_t d = w.s_degree();
  if (d < 0 || !w.nonnegative()) return false;
  if (d > max_degree()) throw DomainError("element degree exceeds precomputed levels");
  return levels_[d].count(w) > 0;
}

bool zero_sum_segre_check(const Graph& g1, const Graph& g2) {
  const std::pair<int, int> glue[] = {{1, 1}};
  const Graph sum = clique_sum(g1, g2, glue).graph;
  const int n1 = g1.order();

  // Map g2 vertices into the sum's labels as clique_sum does.
  std::vector<int> map2(g2.order() + 1, 0);
  map2[1] = 1;
  int next = n1;
  for (int v = 2; v <= g2.order(); ++v) map2[v] = ++next;

  // For every edge of the sum: which summand and which edge index there.
  std::vector<std::pair<int, std::size_t>> origin(sum.size());
  for (std::size_t i = 0; i < g1.size(); ++i) origin[sum.edge_index(g1.edges()[i])] = {1, i};
  for (std::size_t i = 0; i < g2.size(); ++i) {
    const Edge& e = g2.edges()[i];
    origin[sum.edge_index(Edge(map2[e.u], map2[e.v]))] = {2, i};
  }

  const CutMatrix x1(g1), x2(g2), x(sum);
  std::map<std::vector<std::int32_t>, std::size_t> index1, index2;
  for (std::size_t c = 0; c < x1.cols(); ++c) index1.emplace(x1.column(c).coords(), c);
  for (std::size_t c = 0; c < x2.cols(); ++c) index2.emplace(x2.column(c).coords(), c);
  if (index1.size() != x1.cols() || index2.size() != x2.cols()) return false;
  if (x.cols() != x1.cols() * x2.cols()) return false;

  std::vector<char> hit(x.cols(), 0);
  for (const auto& col : x.columns()) {
    std::vector<std::int32_t> part1(g1.size() + 1, 1), part2(g2.size() + 1, 1);
    for (std::size_t r = 0; r < sum.size(); ++r) {
      auto [which, idx] = origin[r];
      (which == 1 ? part1 : part2)[idx] = col.coords()[r];
    }
    auto a = index1.find(part1);
    auto b = index2.find(part2);
    if (a == index1.end() || b == index2.end()) return false;
    char& slot = hit[a->second * x2.cols() + b->second];
    if (slot) return false;
    slot = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

}  // namespace cutideal
