#include "cutideal/minor.hpp"

#include <bit>
#include <deque>
#include <unordered_set>

#include "cutideal/errors.hpp"

namespace cutideal {

namespace {

std::uint64_t memo_key(const CanonicalCode& code) {
  return (code.bits << 4) | static_cast<std::uint64_t>(code.n);
}

class MinorSearch {
 public:
  explicit MinorSearch(const Graph& target)
      : target_n_(target.order()), target_m_(target.size()), target_code_(canonical_code(target)) {}

  bool contains(const Graph& g) {
    if (g.order() < target_n_ || g.size() < target_m_) return false;
    const CanonicalCode code = canonical_code(g);
    if (!visited_.insert(memo_key(code)).second) return false;
    if (g.order() == target_n_ && g.size() == target_m_) return code == target_code_;

    if (g.order() > target_n_) {
      for (int v = 1; v <= g.order(); ++v) {
        if (g.degree(v) == 0) {
          // All isolated vertices are interchangeable.
          if (contains(delete_vertex(g, v))) return true;
          break;
        }
      }
    }
    for (const Edge& e : g.edges()) {
      if (g.order() > target_n_ && contains(contract_edge(g, e))) return true;
      if (contains(delete_edge(g, e))) return true;
    }
    return false;
  }

 private:
  int target_n_;
  std::size_t target_m_;
  CanonicalCode target_code_;
  std::unordered_set<std::uint64_t> visited_;
};

}  // namespace

bool has_minor(const Graph& g, const Graph& h) {
  MinorSearch search(h);
  return search.contains(g);
}

bool has_k4_minor(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint32_t> adj(n);
  for (int v = 1; v <= n; ++v) adj[v - 1] = g.neighbor_mask(v);
  std::uint32_t alive = n == 32 ? ~0u : (std::uint32_t{1} << n) - 1;

  bool progress = true;
  while (alive && progress) {
    progress = false;
    for (std::uint32_t rest = alive; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint32_t nb = adj[v];
      const int deg = std::popcount(nb);
      if (deg > 2) continue;
      if (deg == 2) {
        const int a = std::countr_zero(nb);
        const int b = std::countr_zero(nb & (nb - 1));
        adj[a] |= std::uint32_t{1} << b;
        adj[b] |= std::uint32_t{1} << a;
      }
      for (std::uint32_t w = nb; w; w &= w - 1) adj[std::countr_zero(w)] &= ~(std::uint32_t{1} << v);
      adj[v] = 0;
      alive &= ~(std::uint32_t{1} << v);
      progress = true;
    }
  }
  // Every remaining vertex has degree >= 3, which forces a K4 minor.
  return alive != 0;
}

bool has_c5_minor(const Graph& g) { return has_cycle_of_length_at_least(g, 5); }

std::string to_string(ContractionTarget target) {
  switch (target) {
    case ContractionTarget::c5: return "C5";
    case ContractionTarget::c4_sum_c3: return "C4#C3";
    case ContractionTarget::k4_minus_e_sum_c3: return "(K4\\e)#C3";
  }
  return "?";
}

Graph target_graph(ContractionTarget target) {
  // Triangle glued on edge 3-4, which keeps a 5-cycle through vertex 5.
  const std::pair<int, int> glue[] = {{3, 1}, {4, 2}};
  switch (target) {
    case ContractionTarget::c5: return cycle_graph(5);
    case ContractionTarget::c4_sum_c3: return clique_sum(cycle_graph(4), cycle_graph(3), glue).graph;
    case ContractionTarget::k4_minus_e_sum_c3: return clique_sum(k4_minus_edge(), cycle_graph(3), glue).graph;
  }
  throw DomainError("unknown contraction target");
}

ContractionWitness contraction_witness(const Graph& g) {
  if (!is_two_connected(g)) throw DomainError("contraction_witness needs a 2-connected graph");
  if (has_k4_minor(g)) throw DomainError("contraction_witness needs a K4-minor-free graph");
  if (!has_c5_minor(g)) throw DomainError("contraction_witness needs a graph with a C5 minor");

  const ContractionTarget targets[] = {ContractionTarget::c5, ContractionTarget::c4_sum_c3,
                                       ContractionTarget::k4_minus_e_sum_c3};
  std::vector<Graph> target_graphs;
  for (auto t : targets) target_graphs.push_back(target_graph(t));

  struct State {
    Graph graph;
    std::vector<Edge> path;
  };
  std::deque<State> queue;
  std::unordered_set<std::uint64_t> seen;
  queue.push_back({g, {}});
  seen.insert(memo_key(canonical_code(g)));

  while (!queue.empty()) {
    State state = std::move(queue.front());
    queue.pop_front();
    if (state.graph.order() == 5) {
      for (std::size_t t = 0; t < target_graphs.size(); ++t) {
        if (is_isomorphic(state.graph, target_graphs[t])) {
          return {std::move(state.path), std::move(state.graph), targets[t]};
        }
      }
      continue;
    }
    for (const Edge& e : state.graph.edges()) {
      Graph child = contract_edge(state.graph, e);
      // Contraction cannot create a long cycle, so dead branches stay dead.
      if (!has_c5_minor(child)) continue;
      if (!seen.insert(memo_key(canonical_code(child))).second) continue;
      std::vector<Edge> path = state.path;
      path.push_back(e);
      queue.push_back({std::move(child), std::move(path)});
    }
  }
  throw DomainError("no contraction sequence reaches C5, C4#C3 or (K4\\e)#C3");
}

}  // namespace cutideal
