#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cutideal {

/// Undirected edge {u, v} with 1 <= u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

/// Finite simple graph on vertices 1..n.
///
/// Immutable once built. Adjacency is held as one bitmask per vertex, so the
/// vertex count is limited to kMaxVertices. The edge list is kept sorted
/// lexicographically; that order is the row order of every cut matrix.
class Graph {
 public:
  static constexpr int kMaxVertices = 31;

  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool adjacent(int u, int v) const;
  int degree(int v) const;
  /// Neighbours of v as a bitmask; bit (u - 1) is set when u ~ v.
  std::uint32_t neighbor_mask(int v) const;
  /// Position of e in edges(); throws DomainError if e is not an edge.
  std::size_t edge_index(Edge e) const;
  bool has_edge(Edge e) const { return adjacent(e.u, e.v); }

  /// Labeled equality (same n, same edge set).
  bool operator==(const Graph& other) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::uint32_t> adj_;
  std::vector<Edge> edges_;
};

/// Named families the classifier knows how to build and recognize.
enum class FamilyTag {
  complete,        // K_m
  star,            // K_{1,m}
  bipartite_two,   // K_{2,m}, two-element side {1,2}
  double_cone,     // K_{1,1,m}, universal vertices 1 and 2
  cycle,           // C_m
  other,
};

struct GraphFamily {
  FamilyTag tag = FamilyTag::other;
  int m = 0;

  auto operator<=>(const GraphFamily&) const = default;
};

/// "K3", "K1,3", "K2,3", "K1,1,3", "C5" or "Other".
std::string to_string(const GraphFamily& family);

// --- construction ---------------------------------------------------------

Graph complete_graph(int m);
Graph cycle_graph(int m);
/// Parts are laid out consecutively: the first part gets 1..parts[0], etc.
Graph complete_multipartite(std::span<const int> parts);
Graph path_graph(int m);
/// K4 minus the edge 2-4: the 4-cycle 1-2-3-4 with chord 1-3.
Graph k4_minus_edge();

/// Canonical representative of a family. K_{2,m} puts {1,2} on the small
/// side; K_{1,1,m} has 1 and 2 universal; K_{1,m} is centred at 1.
Graph make_family(const GraphFamily& family);

// --- transformations ------------------------------------------------------

/// Vertices are relabeled 1..|S| in increasing order of their old labels.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);
Graph delete_edge(const Graph& g, Edge e);
/// Removes v and relabels the vertices above it down by one.
Graph delete_vertex(const Graph& g, int v);
/// Merges e.v into e.u, drops the loop and coalesces parallel edges.
/// Vertices above e.v shift down by one.
Graph contract_edge(const Graph& g, Edge e);

struct CliqueSum {
  Graph graph;
  int k = 0;  // |glue| - 1
};

/// Glues g2 onto g1 by identifying glue[i].second in g2 with glue[i].first in
/// g1. g1 keeps its labels; the remaining g2 vertices become n1+1, n1+2, ...
/// in increasing order of their g2 labels. Both glue sets must be cliques.
CliqueSum clique_sum(const Graph& g1, const Graph& g2, std::span<const std::pair<int, int>> glue);

// --- structure ------------------------------------------------------------

bool is_connected(const Graph& g);
/// Vertex sets of the connected components, each sorted, ordered by minimum.
std::vector<std::vector<int>> components(const Graph& g);
bool is_two_connected(const Graph& g);

struct Block {
  std::vector<int> vertices;  // labels in the parent graph, increasing
  Graph graph;                // relabeled 1..|vertices|
};

/// 2-connected blocks of a connected graph (bridges are K2 blocks, a single
/// vertex is one K1 block). Ordered lexicographically by vertex list.
std::vector<Block> blocks(const Graph& g);

/// Length of a longest cycle, 0 for forests. Exhaustive path search.
int circumference(const Graph& g);
/// True when some cycle has length >= k; stops at the first one found.
bool has_cycle_of_length_at_least(const Graph& g, int k);

// --- isomorphism ----------------------------------------------------------

bool is_isomorphic(const Graph& g, const Graph& h);

/// Isomorphism-invariant code: n together with the lexicographically
/// largest adjacency bit string over degree-compatible vertex orders.
struct CanonicalCode {
  int n = 0;
  std::uint64_t bits = 0;

  auto operator<=>(const CanonicalCode&) const = default;
};

CanonicalCode canonical_code(const Graph& g);
/// The relabeled graph realising canonical_code(g).
Graph canonical_form(const Graph& g);

GraphFamily recognize_family(const Graph& g);

// --- text format ----------------------------------------------------------

/// "n m" header followed by m lines "i j" with i < j.
Graph read_graph(std::istream& in);
Graph parse_graph(const std::string& text);
void write_graph(std::ostream& out, const Graph& g);
std::string format_graph(const Graph& g);
/// Compact one-line form, e.g. "1-2 1-3 2-3".
std::string edge_list_string(const Graph& g);

}  // namespace cutideal
