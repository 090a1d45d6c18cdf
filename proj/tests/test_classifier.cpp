#include <doctest.h>

#include "cutideal/classifier.hpp"
#include "cutideal/descriptor.hpp"
#include "cutideal/errors.hpp"
#include "cutideal/minor.hpp"
#include "oracles.hpp"

using namespace cutideal;

TEST_CASE("descriptors") {
  CHECK(parse_descriptor("K4") == complete_graph(4));
  CHECK(parse_descriptor("K2,3") == make_family({FamilyTag::bipartite_two, 3}));
  CHECK(parse_descriptor("K1,1,3") == make_family({FamilyTag::double_cone, 3}));
  CHECK(parse_descriptor("K1,3") == make_family({FamilyTag::star, 3}));
  CHECK(parse_descriptor("C5") == cycle_graph(5));
  CHECK(parse_descriptor("P3") == path_graph(3));
  CHECK(parse_descriptor("K4-e") == k4_minus_edge());
  CHECK(parse_descriptor("clique-sum:K2+K2@vertex") == path_graph(3));
  CHECK(is_isomorphic(parse_descriptor("clique-sum:C3+C3@edge"), k4_minus_edge()));
  CHECK(parse_descriptor("clique-sum:C4+C3@edge") == target_graph(ContractionTarget::c4_sum_c3));
  CHECK(parse_descriptor("clique-sum:K4-e+C3@edge") == target_graph(ContractionTarget::k4_minus_e_sum_c3));
  CHECK(parse_descriptor("clique-sum:C4+C3@1-2").size() == 6);
  CHECK(parse_descriptor("clique-sum:C4+C3@2").order() == 6);
  for (const char* bad : {"", "X3", "K", "K0", "C2", "K2,", "Kx", "clique-sum:C4", "clique-sum:C4+C3@1-3",
                          "clique-sum:C4+C3@9", "clique-sum:C4+C3@edges"}) {
    CHECK_THROWS_AS(parse_descriptor(bad), ParseError);
  }
}

TEST_CASE("induced_cycles") {
  CHECK(induced_cycles(cycle_graph(5)) == std::set<int>{5});
  CHECK(induced_cycles(make_family({FamilyTag::bipartite_two, 3})) == std::set<int>{4});
  CHECK(induced_cycles(complete_graph(4)) == std::set<int>{3});
  CHECK(induced_cycles(path_graph(4)).empty());
}

TEST_CASE("induced_cycles matches the ordered-sequence oracle") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = oracle::random_graph(3 + trial % 5, rng);
    CHECK(induced_cycles(g) == oracle::induced_cycles(g));
  }
}

TEST_CASE("classify examples") {
  const ClassificationReport k23 = classify(parse_descriptor("K2,3"));
  CHECK(k23.strongly_koszul_theorem);
  CHECK(k23.quadratic_gb_theorem == std::optional<bool>(true));
  CHECK(k23.compressed_theorem);
  CHECK(k23.computational_checks.empty());

  const ClassificationReport c5 = classify(cycle_graph(5));
  CHECK_FALSE(c5.strongly_koszul_theorem);
  CHECK(c5.c5_minor);
  CHECK(c5.quadratic_generation_theorem);
  CHECK_FALSE(c5.compressed_theorem);
  CHECK_FALSE(c5.quadratic_gb_theorem.has_value());

  const ClassificationReport k4 = classify(complete_graph(4));
  CHECK_FALSE(k4.strongly_koszul_theorem);
  CHECK_FALSE(k4.quadratic_generation_theorem);

  const ClassificationReport k5 = classify(complete_graph(5));
  CHECK(k5.k5_minor);
  CHECK_FALSE(k5.compressed_theorem);
}

TEST_CASE("classification invariants hold on every connected graph up to 6 vertices") {
  for (const Graph& g : connected_graph_classes(6)) {
    const ClassificationReport r = classify(g);
    CHECK(r.strongly_koszul_theorem == !(r.k4_minor || r.c5_minor));
    CHECK(r.quadratic_generation_theorem == !r.k4_minor);
    const bool short_cycles = std::all_of(r.induced_cycle_lengths.begin(), r.induced_cycle_lengths.end(),
                                          [](int len) { return len == 3 || len == 4; });
    CHECK(r.compressed_theorem == (!r.k5_minor && short_cycles));
    CHECK(r.quadratic_gb_theorem.has_value() == r.strongly_koszul_theorem);
    if (r.quadratic_gb_theorem) CHECK(*r.quadratic_gb_theorem);
    CHECK(r.k5_minor == has_minor(g, complete_graph(5)));
  }
}

TEST_CASE("strong Koszulness predictions are minor closed") {
  for (const Graph& g : connected_graph_classes(6)) {
    if (!classify(g).strongly_koszul_theorem) continue;
    for (const Edge& e : g.edges()) {
      CHECK(classify(contract_edge(g, e)).strongly_koszul_theorem);
      CHECK(classify(delete_edge(g, e)).strongly_koszul_theorem);
    }
    for (int v = 1; v <= g.order() && g.order() > 1; ++v) CHECK(classify(delete_vertex(g, v)).strongly_koszul_theorem);
  }
}

TEST_CASE("disconnected graphs combine components") {
  // C5 plus an isolated edge: one component fails.
  const Graph g(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {6, 7}});
  CHECK_FALSE(classify(g).strongly_koszul_theorem);
  const Graph h(5, {{1, 2}, {1, 3}, {2, 3}, {4, 5}});
  CHECK(classify(h).strongly_koszul_theorem);
}

TEST_CASE("agreement semantics") {
  CHECK(agreement_of(true, true) == Agreement::consistent);
  CHECK(agreement_of(true, false) == Agreement::contradiction);
  CHECK(agreement_of(false, false) == Agreement::confirmed);
  CHECK(agreement_of(false, true) == Agreement::inconclusive);
  CHECK(to_string(Agreement::inconclusive) == "inconclusive");
}

TEST_CASE("cross_validate examples") {
  const CrossValidateOptions d3{.degree = 3, .trials = 10};
  const ClassificationReport fig = cross_validate(parse_descriptor("clique-sum:C4+C3@edge"), d3);
  const ComputationalCheck* sk = fig.check("strongly_koszul");
  REQUIRE(sk);
  CHECK(sk->verdict == "fail");
  CHECK(sk->agrees());
  CHECK(sk->status == Agreement::confirmed);

  const ClassificationReport k23 = cross_validate(parse_descriptor("K2,3"), d3);
  CHECK(k23.check("strongly_koszul")->verdict == "pass-up-to-3");
  CHECK(k23.check("strongly_koszul")->status == Agreement::consistent);
  REQUIRE(k23.check("closed_form_gb"));
  CHECK(k23.check("closed_form_gb")->verdict == "certified");
  CHECK(k23.disagreements().empty());

  const ClassificationReport k4 = cross_validate(complete_graph(4), {.degree = 4, .trials = 5});
  CHECK(k4.check("quadratic_generation")->verdict == "degree-4-generator");
  CHECK(k4.check("quadratic_generation")->agrees());
  CHECK(k4.check("strongly_koszul")->agrees());

  // At degree 3 the quartic relation of K4 is out of reach.
  const ClassificationReport k4_low = cross_validate(complete_graph(4), d3);
  CHECK(k4_low.check("strongly_koszul")->status == Agreement::inconclusive);
  CHECK_FALSE(k4_low.check("strongly_koszul")->agrees());

  CHECK(cross_validate(make_family({FamilyTag::star, 3}), d3).check("closed_form_gb")->verdict == "certified");
  CHECK(cross_validate(cycle_graph(5), d3).check("closed_form_gb") == nullptr);
}

TEST_CASE("cross_validate guards") {
  CHECK_THROWS_AS(cross_validate(path_graph(9), {}), ResourceGuardError);
  CHECK_NOTHROW(cross_validate(path_graph(3), {.degree = 3, .trials = 1}));
  CHECK_THROWS_AS(cross_validate(path_graph(3), {.degree = 2}), DomainError);
}

TEST_CASE("JSON report") {
  const auto json = to_json(cross_validate(cycle_graph(5), {.degree = 3, .trials = 5}, "C5"));
  CHECK(json["graph"]["descriptor"] == "C5");
  CHECK(json["graph"]["n"] == 5);
  CHECK(json["strongly_koszul_theorem"] == false);
  CHECK(json["quadratic_gb_theorem"].is_null());
  CHECK(json["induced_cycle_lengths"] == nlohmann::json::array({5}));
  const auto& sk = json["computational_checks"][0];
  CHECK(sk["name"] == "strongly_koszul");
  CHECK(sk["agreement"] == true);
  CHECK(sk["status"] == "confirmed");
  CHECK(sk["witness"]["degree"] == 3);
  CHECK(sk["witness"]["cuts"][0] == "{}|{1,2,3,4,5}");
  CHECK(sk["witness"]["element"].size() == 6);
}

TEST_CASE("CSV rows") {
  CHECK(csv_header() ==
        "n,edges,canonical_form,k4_minor,c5_minor,strongly_koszul_theorem,quadratic_generation_theorem,"
        "compressed_theorem,quadratic_gb_theorem,agreement");
  const ClassificationReport r = cross_validate(cycle_graph(4), {.degree = 3, .trials = 5});
  CHECK(csv_row(r) == "4,4," + edge_list_string(canonical_form(cycle_graph(4))) +
                          ",false,false,true,true,true,true,agree");
  const ClassificationReport k4 = cross_validate(complete_graph(4), {.degree = 3, .trials = 5});
  CHECK(csv_row(k4).ends_with(",unknown,disagree:strongly_koszul;quadratic_generation"));
}

TEST_CASE("corpus enumeration counts match permutation dedup") {
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) {
    const auto found = graph_classes(n, [](const Graph& g) { return is_connected(g); });
    CHECK(found.size() == expected[n - 1]);
    if (n <= 5) {
      CHECK(oracle::classes(n, [](const Graph& g) { return is_connected(g); }).size() == expected[n - 1]);
    }
    std::set<std::uint64_t> keys;
    for (const Graph& g : found) keys.insert(oracle::min_permutation_key(g));
    CHECK(keys.size() == found.size());
  }
}

TEST_CASE("corpus runs") {
  const auto three = run_corpus(3, {.validate = {.degree = 3, .trials = 5}});
  REQUIRE(three.size() == 4);
  CHECK(three[2].graph.order() == 3);
  CHECK(three[2].strongly_koszul_theorem);
  CHECK(three[3].strongly_koszul_theorem);

  const auto four = run_corpus(4, {.validate = {.degree = 4, .trials = 10}});
  CHECK(four.size() == 10);
  for (const auto& r : four) CHECK_MESSAGE(r.disagreements().empty(), csv_row(r));

  // Threads do not change the result.
  const auto serial = run_corpus(5, {.validate = {.degree = 3, .trials = 5}, .jobs = 1});
  const auto pooled = run_corpus(5, {.validate = {.degree = 3, .trials = 5}, .jobs = 4});
  REQUIRE(serial.size() == pooled.size());
  for (std::size_t i = 0; i < serial.size(); ++i) CHECK(to_json(serial[i]) == to_json(pooled[i]));
}

TEST_CASE("parallel_map keeps index order and forwards exceptions") {
  const auto squares = parallel_map(50, 4, [](std::size_t i) { return i * i; });
  for (std::size_t i = 0; i < squares.size(); ++i) CHECK(squares[i] == i * i);
  CHECK_THROWS_AS(parallel_map(10, 3,
                               [](std::size_t i) -> int {
                                 if (i == 7) throw DomainError("boom");
                                 return 0;
                               }),
                  DomainError);
}
