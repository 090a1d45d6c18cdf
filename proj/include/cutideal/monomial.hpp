#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace cutideal {

/// Monomial in the cut variables q_0, q_1, ... (indexed by canonical cut
/// index). Sparse: sorted (variable, exponent) terms, no zero exponents.
/// The built-in comparison is structural, not a term order.
class Monomial {
 public:
  struct Term {
    std::uint32_t var = 0;
    std::uint32_t exp = 0;
    auto operator<=>(const Term&) const = default;
  };

  Monomial() = default;
  static Monomial variable(std::uint32_t var, std::uint32_t exp = 1);
  /// Terms may be unsorted and repeated; exponents are summed.
  static Monomial from_terms(std::vector<Term> terms);
  static Monomial from_dense(std::span<const std::uint32_t> exponents);

  std::uint32_t degree() const noexcept { return degree_; }
  bool empty() const noexcept { return terms_.empty(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::uint32_t exponent(std::uint32_t var) const;
  /// Largest variable index present plus one (0 for the unit monomial).
  std::uint32_t support_bound() const noexcept { return terms_.empty() ? 0 : terms_.back().var + 1; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  bool is_squarefree() const;

  Monomial operator*(const Monomial& other) const;
  /// this / divisor; throws DomainError if divisor does not divide this.
  Monomial quotient(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;

  /// "1" for the unit, otherwise "q[i]^e*q[j]" (exponent 1 omitted).
  std::string to_string() const;

  auto operator<=>(const Monomial& other) const { return terms_ <=> other.terms_; }
  bool operator==(const Monomial& other) const { return terms_ == other.terms_; }

 private:
  std::vector<Term> terms_;
  std::uint32_t degree_ = 0;
};

/// lead - tail. Which side leads is meaningful once oriented by an order.
struct Binomial {
  Monomial lead;
  Monomial tail;

  std::uint32_t degree() const noexcept { return lead.degree(); }
  std::string to_string() const { return lead.to_string() + " - " + tail.to_string(); }
  auto operator<=>(const Binomial&) const = default;
};

/// Graded reverse lexicographic order on the cut variables. rank[v] is the
/// position of variable v, rank 0 being the smallest variable.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(std::vector<std::uint32_t> rank_of_var, std::string name);

  std::size_t num_variables() const noexcept { return rank_.size(); }
  std::uint32_t rank(std::uint32_t var) const { return rank_.at(var); }
  const std::vector<std::uint32_t>& ranks() const noexcept { return rank_; }
  /// Variables from smallest to largest.
  std::vector<std::uint32_t> ascending_variables() const;
  const std::string& name() const noexcept { return name_; }

  /// -1, 0 or +1. Higher degree wins; in equal degree the monomial with the
  /// larger exponent on the smallest differing variable is smaller.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  /// Swap sides if needed so that lead > tail.
  Binomial orient(Binomial b) const;

 private:
  std::vector<std::uint32_t> rank_;
  std::string name_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace cutideal
