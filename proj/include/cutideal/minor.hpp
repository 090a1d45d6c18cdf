#pragma once

#include <string>
#include <vector>

#include "cutideal/graph.hpp"

namespace cutideal {

/// True iff h is a minor of g (edge deletion, edge contraction, deletion of
/// isolated vertices). Exhaustive search memoized on canonical codes, so g
/// is limited to 11 vertices.
bool has_minor(const Graph& g, const Graph& h);

/// Series-parallel reduction: strip vertices of degree <= 1, suppress
/// degree-2 vertices, coalesce parallel edges. g is K4-minor-free iff the
/// reduction empties the graph.
bool has_k4_minor(const Graph& g);

/// A C5 minor exists iff some cycle has length >= 5.
bool has_c5_minor(const Graph& g);

enum class ContractionTarget {
  c5,                  // C5
  c4_sum_c3,           // 1-sum of C4 and C3
  k4_minus_e_sum_c3,   // 1-sum of K4\e and C3
};

std::string to_string(ContractionTarget target);

/// Reference graph for each target.
Graph target_graph(ContractionTarget target);

struct ContractionWitness {
  /// Each edge is named in the labeling of the graph it is contracted in.
  std::vector<Edge> contractions;
  Graph result;
  ContractionTarget target = ContractionTarget::c5;
};

/// Breadth-first search over edge contractions of a 2-connected,
/// K4-minor-free graph with a C5 minor until a 5-vertex graph isomorphic to
/// one of the three targets is reached. Throws DomainError when the
/// preconditions fail.
ContractionWitness contraction_witness(const Graph& g);

}  // namespace cutideal
