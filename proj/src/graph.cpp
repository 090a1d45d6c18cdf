#include "cutideal/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "cutideal/errors.hpp"

namespace cutideal {

namespace {

std::uint32_t bit(int v) { return std::uint32_t{1} << (v - 1); }

}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 0 || n > kMaxVertices) {
    throw DomainError("vertex count " + std::to_string(n) + " outside 0.." +
                      std::to_string(kMaxVertices));
  }
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    if (e.u == e.v) throw DomainError("loop at vertex " + std::to_string(e.u));
    check_vertex(e.u);
    check_vertex(e.v);
    if (adj_[e.u - 1] & bit(e.v)) {
      throw DomainError("parallel edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    adj_[e.u - 1] |= bit(e.v);
    adj_[e.v - 1] |= bit(e.u);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n, [&] {
        std::vector<Edge> list;
        for (auto [a, b] : edges) list.emplace_back(a, b);
        return list;
      }()) {}

void Graph::check_vertex(int v) const {
  if (v < 1 || v > n_) {
    throw DomainError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u - 1] & bit(v)) != 0;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[v - 1]);
}

std::uint32_t Graph::neighbor_mask(int v) const {
  check_vertex(v);
  return adj_[v - 1];
}

std::size_t Graph::edge_index(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) {
    throw DomainError("no edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
  }
  return static_cast<std::size_t>(it - edges_.begin());
}

std::string to_string(const GraphFamily& family) {
  const std::string m = std::to_string(family.m);
  switch (family.tag) {
    case FamilyTag::complete: return "K" + m;
    case FamilyTag::star: return "K1," + m;
    case FamilyTag::bipartite_two: return "K2," + m;
    case FamilyTag::double_cone: return "K1,1," + m;
    case FamilyTag::cycle: return "C" + m;
    case FamilyTag::other: break;
  }
  return "Other";
}

Graph complete_graph(int m) {
  if (m < 1) throw DomainError("K_m needs m >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) edges.emplace_back(i, j);
  return Graph(m, edges);
}

Graph cycle_graph(int m) {
  if (m < 3) throw DomainError("C_m needs m >= 3");
  std::vector<Edge> edges;
  for (int i = 1; i <= m; ++i) edges.emplace_back(i, i % m + 1);
  return Graph(m, edges);
}

Graph path_graph(int m) {
  if (m < 1) throw DomainError("path needs m >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i < m; ++i) edges.emplace_back(i, i + 1);
  return Graph(m, edges);
}

Graph k4_minus_edge() { return Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}}); }

Graph complete_multipartite(std::span<const int> parts) {
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] < 1) throw DomainError("multipartite part sizes must be >= 1");
    part_of.insert(part_of.end(), static_cast<std::size_t>(parts[p]), static_cast<int>(p));
  }
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (part_of[i - 1] != part_of[j - 1]) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph make_family(const GraphFamily& family) {
  if (family.m < 1) throw DomainError("family parameter must be >= 1");
  switch (family.tag) {
    case FamilyTag::complete: return complete_graph(family.m);
    case FamilyTag::star: {
      const int parts[] = {1, family.m};
      return complete_multipartite(parts);
    }
    case FamilyTag::bipartite_two: {
      const int parts[] = {2, family.m};
      return complete_multipartite(parts);
    }
    case FamilyTag::double_cone: {
      const int parts[] = {1, 1, family.m};
      return complete_multipartite(parts);
    }
    case FamilyTag::cycle: return cycle_graph(family.m);
    case FamilyTag::other: break;
  }
  throw DomainError("cannot construct family Other");
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  if (vertices.empty()) throw DomainError("induced subgraph of an empty vertex set");
  std::vector<int> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
    throw DomainError("repeated vertex in induced subgraph set");
  }
  std::vector<int> relabel(static_cast<std::size_t>(g.order()) + 1, 0);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 1 || keep[i] > g.order()) throw DomainError("vertex outside graph");
    relabel[keep[i]] = static_cast<int>(i) + 1;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (relabel[e.u] && relabel[e.v]) edges.emplace_back(relabel[e.u], relabel[e.v]);
  return Graph(static_cast<int>(keep.size()), edges);
}

Graph delete_edge(const Graph& g, Edge e) {
  g.edge_index(e);  // validates
  std::vector<Edge> edges;
  for (const Edge& f : g.edges())
    if (f != e) edges.push_back(f);
  return Graph(g.order(), edges);
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 1 || v > g.order()) throw DomainError("vertex outside graph");
  std::vector<int> keep;
  for (int u = 1; u <= g.order(); ++u)
    if (u != v) keep.push_back(u);
  if (keep.empty()) return Graph(0);
  return induced_subgraph(g, keep);
}

Graph contract_edge(const Graph& g, Edge e) {
  g.edge_index(e);
  auto relabel = [&](int x) {
    if (x == e.v) x = e.u;
    return x > e.v ? x - 1 : x;
  };
  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) {
    const int a = relabel(f.u);
    const int b = relabel(f.v);
    if (a != b) edges.emplace_back(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(g.order() - 1, edges);
}

CliqueSum clique_sum(const Graph& g1, const Graph& g2, std::span<const std::pair<int, int>> glue) {
  if (glue.empty()) throw DomainError("clique sum needs at least one glued vertex");
  std::vector<int> map2(static_cast<std::size_t>(g2.order()) + 1, 0);
  std::uint32_t seen1 = 0;
  for (auto [a, b] : glue) {
    if (a < 1 || a > g1.order() || b < 1 || b > g2.order()) {
      throw DomainError("glued vertex outside graph");
    }
    if ((seen1 & bit(a)) || map2[b]) throw DomainError("vertex glued twice");
    seen1 |= bit(a);
    map2[b] = a;
  }
  for (std::size_t i = 0; i < glue.size(); ++i) {
    for (std::size_t j = i + 1; j < glue.size(); ++j) {
      if (!g1.adjacent(glue[i].first, glue[j].first) ||
          !g2.adjacent(glue[i].second, glue[j].second)) {
        throw DomainError("glue set is not a clique in both graphs");
      }
    }
  }
  int next = g1.order();
  for (int v = 1; v <= g2.order(); ++v)
    if (!map2[v]) map2[v] = ++next;
  std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
  for (const Edge& e : g2.edges()) {
    Edge mapped(map2[e.u], map2[e.v]);
    if (!std::binary_search(g1.edges().begin(), g1.edges().end(), mapped)) edges.push_back(mapped);
  }
  return {Graph(next, edges), static_cast<int>(glue.size()) - 1};
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::uint32_t seen = 0;
  for (int s = 1; s <= g.order(); ++s) {
    if (seen & bit(s)) continue;
    std::uint32_t comp = bit(s);
    std::uint32_t frontier = bit(s);
    while (frontier) {
      const int v = std::countr_zero(frontier) + 1;
      frontier &= frontier - 1;
      const std::uint32_t fresh = g.neighbor_mask(v) & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    seen |= comp;
    std::vector<int> vs;
    for (int v = 1; v <= g.order(); ++v)
      if (comp & bit(v)) vs.push_back(v);
    out.push_back(std::move(vs));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

std::vector<Block> blocks(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) throw DomainError("blocks() needs a connected graph");
  if (g.order() == 1) return {Block{{1}, Graph(1)}};

  const int n = g.order();
  std::vector<int> disc(n + 1, 0), low(n + 1, 0);
  std::vector<Edge> stack;
  std::vector<std::vector<int>> vertex_sets;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = ++timer;
    for (int w = 1; w <= n; ++w) {
      if (!g.adjacent(v, w) || w == parent) continue;
      if (!disc[w]) {
        stack.emplace_back(v, w);
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::uint32_t mask = 0;
          for (;;) {
            const Edge e = stack.back();
            stack.pop_back();
            mask |= bit(e.u) | bit(e.v);
            if (e == Edge(v, w)) break;
          }
          std::vector<int> vs;
          for (int x = 1; x <= n; ++x)
            if (mask & bit(x)) vs.push_back(x);
          vertex_sets.push_back(std::move(vs));
        }
      } else if (disc[w] < disc[v]) {
        stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  dfs(1, 0);

  std::sort(vertex_sets.begin(), vertex_sets.end());
  std::vector<Block> out;
  for (auto& vs : vertex_sets) {
    Graph sub = induced_subgraph(g, vs);
    out.push_back(Block{std::move(vs), std::move(sub)});
  }
  return out;
}

bool is_two_connected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  return blocks(g).size() == 1;
}

namespace {

// Longest cycle through vertices >= start, with start the minimum vertex.
// Returns early once `target` is reached.
int longest_cycle_from(const Graph& g, int start, int target) {
  int best = 0;
  std::function<bool(int, std::uint32_t, int)> extend = [&](int v, std::uint32_t used, int len) {
    if (len >= 3 && g.adjacent(v, start)) {
      best = std::max(best, len);
      if (best >= target) return true;
    }
    std::uint32_t next = g.neighbor_mask(v) & ~used;
    next &= ~((bit(start) << 1) - 1);  // only vertices above start
    while (next) {
      const int w = std::countr_zero(next) + 1;
      next &= next - 1;
      if (extend(w, used | bit(w), len + 1)) return true;
    }
    return false;
  };
  extend(start, bit(start), 1);
  return best;
}

}  // namespace

int circumference(const Graph& g) {
  int best = 0;
  for (int s = 1; s <= g.order() && best < g.order() - s + 1; ++s) {
    best = std::max(best, longest_cycle_from(g, s, g.order()));
  }
  return best;
}

bool has_cycle_of_length_at_least(const Graph& g, int k) {
  if (k <= 3) k = 3;
  for (int s = 1; s + k - 1 <= g.order(); ++s)
    if (longest_cycle_from(g, s, k) >= k) return true;
  return false;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  const int n = g.order();
  std::vector<int> dg(n + 1), dh(n + 1);
  for (int v = 1; v <= n; ++v) {
    dg[v] = g.degree(v);
    dh[v] = h.degree(v);
  }
  {
    std::vector<int> a(dg.begin() + 1, dg.end()), b(dh.begin() + 1, dh.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  // Map high-degree vertices first; they constrain the most.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return dg[a] > dg[b]; });

  std::vector<int> image(n + 1, 0);
  std::uint32_t used = 0;
  std::function<bool(int)> place = [&](int pos) {
    if (pos == n) return true;
    const int v = order[pos];
    for (int w = 1; w <= n; ++w) {
      if ((used & bit(w)) || dh[w] != dg[v]) continue;
      bool ok = true;
      for (int q = 0; q < pos && ok; ++q) {
        const int u = order[q];
        ok = g.adjacent(v, u) == h.adjacent(w, image[u]);
      }
      if (!ok) continue;
      image[v] = w;
      used |= bit(w);
      if (place(pos + 1)) return true;
      used &= ~bit(w);
    }
    return false;
  };
  return place(0);
}

namespace {

struct CanonicalSearch {
  const Graph& g;
  int n;
  std::vector<int> vertex_class;  // by vertex (1-based)
  std::vector<int> slot_class;    // class required at each position
  std::vector<int> perm;
  std::vector<int> best_perm;
  std::uint64_t best = 0;
  bool have_best = false;
  int total_bits;

  explicit CanonicalSearch(const Graph& graph)
      : g(graph), n(graph.order()), vertex_class(n + 1), perm(n), total_bits(n * (n - 1) / 2) {
    // Invariant: degree plus sorted neighbour degrees. Classes are numbered
    // so that larger invariants come first.
    using Key = std::pair<int, std::vector<int>>;
    std::vector<Key> keys(n + 1);
    for (int v = 1; v <= n; ++v) {
      keys[v].first = g.degree(v);
      for (int u = 1; u <= n; ++u)
        if (g.adjacent(u, v)) keys[v].second.push_back(g.degree(u));
      std::sort(keys[v].second.rbegin(), keys[v].second.rend());
    }
    std::vector<Key> distinct(keys.begin() + 1, keys.end());
    std::sort(distinct.rbegin(), distinct.rend());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::map<Key, int> id;
    for (std::size_t i = 0; i < distinct.size(); ++i) id[distinct[i]] = static_cast<int>(i);
    for (int v = 1; v <= n; ++v) {
      vertex_class[v] = id[keys[v]];
      slot_class.push_back(vertex_class[v]);
    }
    std::sort(slot_class.begin(), slot_class.end());
  }

  void run() { dfs(0, 0, 0, 0); }

  void dfs(int pos, std::uint64_t code, int bits, std::uint32_t used) {
    if (pos == n) {
      if (!have_best || code > best) {
        best = code;
        best_perm = perm;
        have_best = true;
      }
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if ((used & bit(v)) || vertex_class[v] != slot_class[pos]) continue;
      std::uint64_t next = code;
      for (int j = 0; j < pos; ++j) next = (next << 1) | (g.adjacent(v, perm[j]) ? 1u : 0u);
      const int next_bits = bits + pos;
      if (have_best && next_bits > 0) {
        const std::uint64_t prefix = best >> (total_bits - next_bits);
        if (next < prefix) continue;
      }
      perm[pos] = v;
      dfs(pos + 1, next, next_bits, used | bit(v));
    }
  }
};

}  // namespace

CanonicalCode canonical_code(const Graph& g) {
  if (g.order() > 11) throw DomainError("canonical_code supports at most 11 vertices");
  if (g.order() <= 1) return {g.order(), 0};
  CanonicalSearch search(g);
  search.run();
  return {g.order(), search.best};
}

Graph canonical_form(const Graph& g) {
  if (g.order() > 11) throw DomainError("canonical_form supports at most 11 vertices");
  if (g.order() <= 1) return g;
  CanonicalSearch search(g);
  search.run();
  std::vector<int> label(g.order() + 1);
  for (int pos = 0; pos < g.order(); ++pos) label[search.best_perm[pos]] = pos + 1;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(label[e.u], label[e.v]);
  return Graph(g.order(), edges);
}

GraphFamily recognize_family(const Graph& g) {
  const int n = g.order();
  if (n >= 1 && g.size() == static_cast<std::size_t>(n * (n - 1) / 2)) {
    return {FamilyTag::complete, n};
  }
  const auto try_family = [&](FamilyTag tag, int m) {
    return m >= 2 && is_isomorphic(g, make_family({tag, m}));
  };
  if (try_family(FamilyTag::bipartite_two, n - 2)) return {FamilyTag::bipartite_two, n - 2};
  if (try_family(FamilyTag::double_cone, n - 2)) return {FamilyTag::double_cone, n - 2};
  if (try_family(FamilyTag::star, n - 1)) return {FamilyTag::star, n - 1};
  if (n >= 5 && try_family(FamilyTag::cycle, n)) return {FamilyTag::cycle, n};
  return {FamilyTag::other, 0};
}

Graph read_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("empty graph input", 1);
  int n = 0;
  long m = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra)) throw ParseError("expected header \"n m\"", line_no);
    if (n < 0 || n > Graph::kMaxVertices || m < 0) throw ParseError("header values out of range", line_no);
  }
  std::vector<Edge> edges;
  std::vector<Edge> seen;
  for (long k = 0; k < m; ++k) {
    if (!next_line()) throw ParseError("expected " + std::to_string(m) + " edges", line_no + 1);
    std::istringstream row(line);
    int i = 0, j = 0;
    std::string extra;
    if (!(row >> i >> j) || (row >> extra)) throw ParseError("expected edge \"i j\"", line_no);
    if (i < 1 || j < 1 || i > n || j > n) throw ParseError("edge endpoint outside 1..n", line_no);
    if (i == j) throw ParseError("loop edge", line_no);
    if (i > j) throw ParseError("edge must be written with i < j", line_no);
    Edge e(i, j);
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) throw ParseError("duplicate edge", line_no);
    edges.push_back(e);
  }
  if (next_line()) throw ParseError("trailing content after edge list", line_no);
  return Graph(n, edges);
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

std::string edge_list_string(const Graph& g) {
  std::string s;
  for (const Edge& e : g.edges()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return s;
}

}  // namespace cutideal
