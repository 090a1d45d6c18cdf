#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cutideal/cut_algebra.hpp"
#include "cutideal/graph.hpp"
#include "cutideal/monomial.hpp"

namespace cutideal {

/// How cuts of equal min(|A|,|B|) are ranked against each other.
enum class TieBreak {
  standard,      // ascending cut index, {1}|{2..n} first among min-size-1 cuts
  descending,    // descending cut index
  by_side_size,  // ascending (|canonical side|, index)
  shuffled,      // fixed-seed shuffle inside each block
};

/// Reverse lexicographic order where q_{A|B} < q_{C|D} whenever
/// min(|A|,|B|) < min(|C|,|D|). q_{∅|[n]} is always the smallest variable.
MonomialOrder paper_order(int n, TieBreak tie_break = TieBreak::standard);

/// Reverse lexicographic order with a uniformly random variable ranking.
MonomialOrder random_revlex_order(std::size_t num_variables, std::uint64_t seed);

/// Variable index of the cut with side A; A may contain vertex 1.
std::uint32_t cut_variable(int n, std::span<const int> side);

bool in_kernel(const CutMatrix& m, const Binomial& b);

/// All degree-d monomials (d = w.s_degree()) whose image is w.
std::vector<Monomial> fiber(const CutMatrix& m, const SemigroupElement& w);

/// Minimal generators of I_G in degrees 2..max_degree: per degree, one
/// binomial for every fiber component left disconnected by the moves of the
/// lower-degree generators. Sorted by degree, then by fiber.
std::vector<Binomial> markov_generators_up_to(const CutMatrix& m, int max_degree);

struct BuchbergerOptions {
  /// S-pairs whose lcm has larger degree are skipped (0 disables the cap).
  /// With a cap the output is a Gröbner basis up to that degree.
  int degree_cap = 0;
};

/// Reduced Gröbner basis of the binomial ideal spanned by gens. Throws
/// ValidationError if a generator is not in ker π. Output is oriented
/// (lead > tail) and sorted ascending by lead.
std::vector<Binomial> buchberger(const CutMatrix& m, std::span<const Binomial> gens,
                                 const MonomialOrder& order, BuchbergerOptions options = {});

/// Normal form of a monomial modulo binomials, each read as lead -> tail.
Monomial normal_form(const Monomial& mono, std::span<const Binomial> basis);

/// Graph of the q-variables for the closed-form star basis: K_{1,n-2} with
/// center 1 and leaves relabeled 2..n-1.
Graph star_for_lemma(int n);

/// Binomials q_A q_C - q_{A∩C} q_{A∪C} over K_{1,n-2} with 1 in A∩C and A,C
/// incomparable, lead first. n >= 4.
std::vector<Binomial> lemma_families_k1m(int n);

struct TheoremFamilies {
  std::vector<Binomial> crossing;     // (i)  1 in A, 2 in B
  std::vector<Binomial> split;        // (ii) 1 in A∩C, 2 in B∩D
  std::vector<Binomial> joined;       // (iii) 1,2 in A∩C
  std::vector<Binomial> all() const;
};

/// Closed-form Gröbner basis families for K_{2,n-2} with V1 = {1,2}, lead
/// first, n >= 4.
TheoremFamilies theorem_families_k2m(int n);

struct HilbertComparison {
  std::vector<std::size_t> standard_counts;   // index d = 0..D
  std::vector<std::size_t> semigroup_counts;
  bool equal() const { return standard_counts == semigroup_counts; }
};

/// Counts, per degree d <= D, monomials not divisible by any candidate lead
/// against distinct semigroup elements of degree d.
HilbertComparison hilbert_compare(std::span<const Binomial> candidates, const CutMatrix& m,
                                  int max_degree);
bool hilbert_check(std::span<const Binomial> candidates, const CutMatrix& m, int max_degree);

struct GroebnerCertificate {
  bool spairs_reduce = false;   // every S-pair reduces to zero
  bool hilbert_ok = false;      // in(cand) = in(I_G) up to the bound
  bool leads_first = false;     // the stated first monomial is the lead under the order
  std::size_t failing_pairs = 0;
  int bound = 0;
  HilbertComparison hilbert;

  bool holds() const { return spairs_reduce && hilbert_ok; }
};

/// Certifies candidates as a Gröbner basis of I_G up to degree max_degree.
/// Throws ValidationError when a candidate is not in ker π.
GroebnerCertificate is_groebner_basis(std::span<const Binomial> candidates, const MonomialOrder& order,
                                      const CutMatrix& m, int max_degree);

/// True when no lead divides another lead or any tail.
bool is_auto_reduced(std::span<const Binomial> basis, const MonomialOrder& order);

/// Minimal generators of the initial ideal spanned by the leads.
std::vector<Monomial> initial_ideal(std::span<const Binomial> gb, const MonomialOrder& order);
bool is_squarefree(std::span<const Monomial> monomials);

enum class CompressedVerdict { consistent_with_compressed, witness_order_found };

struct ProbeWitness {
  int trial = 0;
  MonomialOrder order;
  Monomial lead;  // non-squarefree minimal generator of the initial ideal
};

struct ProbeResult {
  CompressedVerdict verdict = CompressedVerdict::consistent_with_compressed;
  int trials_run = 0;
  int degree_bound = 0;
  std::optional<ProbeWitness> witness;
};

/// Samples random reverse lexicographic orders, computes the Gröbner basis
/// up to degree max_degree from the degree-bounded Markov generators and
/// looks for a non-squarefree initial monomial. A witness is conclusive;
/// its absence is not.
ProbeResult compressed_probe(const Graph& g, int trials, std::uint64_t seed, int max_degree = 4);

std::string to_string(CompressedVerdict verdict);

/// Text emission: '#' header lines, then one "lead - tail" per line.
std::string format_binomials(std::span<const Binomial> basis, std::span<const std::string> header);

}  // namespace cutideal
