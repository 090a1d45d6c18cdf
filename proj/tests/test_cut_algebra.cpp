#include <doctest.h>

#include <random>

#include "cutideal/cut_algebra.hpp"
#include "cutideal/errors.hpp"
#include "oracles.hpp"

using namespace cutideal;

namespace {

std::vector<std::int32_t> coords(std::initializer_list<int> values) { return {values.begin(), values.end()}; }

}  // namespace

TEST_CASE("enumerate_cuts") {
  const auto three = enumerate_cuts(3);
  REQUIRE(three.size() == 4);
  CHECK(three[0].to_string() == "{}|{1,2,3}");
  CHECK(three[1].to_string() == "{2}|{1,3}");
  CHECK(three[2].to_string() == "{3}|{1,2}");
  CHECK(three[3].to_string() == "{2,3}|{1}");
  CHECK(enumerate_cuts(5).size() == 16);
  REQUIRE(enumerate_cuts(1).size() == 1);
  CHECK(enumerate_cuts(1)[0].to_string() == "{}|{1}");
  CHECK_THROWS_AS(enumerate_cuts(0), DomainError);
}

TEST_CASE("cuts canonicalize by complement") {
  const int side[] = {1, 3, 4};
  const Cut c = Cut::from_vertices(5, side);
  CHECK(c.side_vertices() == std::vector<int>{2, 5});
  CHECK(c.index() == Cut::from_vertices(5, std::vector<int>{2, 5}).index());
  CHECK(c.min_side_size() == 2);
}

TEST_CASE("cut_vector") {
  const Graph c3 = cycle_graph(3);
  CHECK(cut_vector(c3, Cut::from_index(3, 0)).coords() == coords({0, 0, 0, 1}));
  CHECK(cut_vector(c3, Cut::from_vertices(3, std::vector<int>{2})).coords() == coords({1, 0, 1, 1}));
  // K_{1,2} on {1,3,4} relabeled compactly: edges 12 (was 13) and 13 (was 14),
  // cut {3}|{1,4} becomes {2}|{1,3}.
  const Graph star(3, {{1, 2}, {1, 3}});
  CHECK(cut_vector(star, Cut::from_vertices(3, std::vector<int>{2})).coords() == coords({1, 0, 1}));
  CHECK_THROWS_AS(cut_vector(c3, Cut::from_index(4, 1)), DomainError);
}

TEST_CASE("cut vectors match the definition and ignore the chosen side") {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(2 + trial % 5, rng);
    const CutMatrix m(g);
    const auto reference = oracle::cut_columns(g);
    REQUIRE(m.cols() == reference.size());
    const std::uint32_t all = (std::uint32_t{1} << g.order()) - 1;
    for (std::size_t i = 0; i < m.cols(); ++i) {
      std::vector<int> got(m.column(i).coords().begin(), m.column(i).coords().end());
      CHECK(got == reference[i]);
      const std::uint32_t side = m.cut(i).side();
      CHECK(cut_vector(g, Cut(g.order(), all & ~side)) == m.column(i));
    }
  }
}

TEST_CASE("cut_matrix") {
  const CutMatrix k2(complete_graph(2));
  CHECK(k2.cols() == 2);
  CHECK(k2.column(0).coords() == coords({0, 1}));
  CHECK(k2.column(1).coords() == coords({1, 1}));

  const CutMatrix c3(cycle_graph(3));
  CHECK(c3.column(1).coords() == coords({1, 0, 1, 1}));
  CHECK(c3.column(2).coords() == coords({0, 1, 1, 1}));
  CHECK(c3.column(3).coords() == coords({1, 1, 0, 1}));
  CHECK(c3.to_text() == "0 1 0 1\n0 0 1 1\n0 1 1 0\n1 1 1 1\n");

  const CutMatrix k22(make_family({FamilyTag::bipartite_two, 2}));
  CHECK(k22.cols() == 8);
  CHECK(k22.rows() == 5);
  for (const auto& col : k22.columns()) CHECK(col.s_degree() == 1);
}

TEST_CASE("evaluate_monomial") {
  const CutMatrix c3(cycle_graph(3));
  CHECK(evaluate_monomial(c3, Monomial()).coords() == coords({0, 0, 0, 0}));
  CHECK(evaluate_monomial(c3, Monomial::from_terms({{0, 2}})).coords() == coords({0, 0, 0, 2}));
  CHECK(evaluate_monomial(c3, Monomial::variable(1) * Monomial::variable(2)).coords() == coords({1, 1, 2, 2}));
  CHECK_THROWS_AS(evaluate_monomial(c3, Monomial::variable(4)), DomainError);
}

TEST_CASE("evaluate_monomial is additive") {
  std::mt19937 rng(2);
  const CutMatrix m(make_family({FamilyTag::bipartite_two, 3}));
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::uint32_t> a(m.cols()), b(m.cols());
    for (auto& x : a) x = rng() % 3;
    for (auto& x : b) x = rng() % 3;
    const Monomial ma = Monomial::from_dense(a);
    const Monomial mb = Monomial::from_dense(b);
    CHECK(evaluate_monomial(m, ma * mb) == evaluate_monomial(m, ma) + evaluate_monomial(m, mb));
  }
}

TEST_CASE("semigroup levels match brute-force images") {
  for (const Graph& g : {cycle_graph(4), complete_graph(4), make_family({FamilyTag::double_cone, 2})}) {
    const CutMatrix m(g);
    const SemigroupLevels levels(m, 3);
    const auto cols = oracle::cut_columns(g);
    for (int d = 0; d <= 3; ++d) {
      const auto reference = oracle::semigroup_level(cols, d);
      CHECK(levels.level(d).size() == reference.size());
      for (const auto& w : levels.level(d)) {
        std::vector<int> v(w.coords().begin(), w.coords().end());
        CHECK(reference.contains(v));
      }
    }
  }
}

TEST_CASE("zero_sum_segre_check") {
  CHECK(zero_sum_segre_check(complete_graph(2), complete_graph(2)));
  CHECK(zero_sum_segre_check(cycle_graph(3), cycle_graph(3)));
  CHECK(zero_sum_segre_check(cycle_graph(4), cycle_graph(3)));
}

TEST_CASE("zero_sum_segre_check holds for connected pairs up to 4 vertices") {
  std::vector<Graph> small;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& [key, g] : oracle::classes(n, [](const Graph& x) { return is_connected(x); })) small.push_back(g);
  }
  for (const Graph& a : small)
    for (const Graph& b : small) CHECK(zero_sum_segre_check(a, b));
}
