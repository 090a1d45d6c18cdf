#include "cutideal/monomial.hpp"

#include <algorithm>
#include <limits>

#include "cutideal/errors.hpp"

namespace cutideal {

namespace {

std::uint32_t checked_add(std::uint32_t a, std::uint32_t b) {
  if (a > std::numeric_limits<std::uint32_t>::max() - b) throw DomainError("exponent overflow");
  return a + b;
}

}  // namespace

Monomial Monomial::variable(std::uint32_t var, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) {
    m.terms_.push_back({var, exp});
    m.degree_ = exp;
  }
  return m;
}

Monomial Monomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end());
  Monomial m;
  for (const Term& t : terms) {
    if (t.exp == 0) continue;
    if (!m.terms_.empty() && m.terms_.back().var == t.var) {
      m.terms_.back().exp = checked_add(m.terms_.back().exp, t.exp);
    } else {
      m.terms_.push_back(t);
    }
    m.degree_ = checked_add(m.degree_, t.exp);
  }
  return m;
}

Monomial Monomial::from_dense(std::span<const std::uint32_t> exponents) {
  Monomial m;
  for (std::size_t v = 0; v < exponents.size(); ++v) {
    if (exponents[v] == 0) continue;
    m.terms_.push_back({static_cast<std::uint32_t>(v), exponents[v]});
    m.degree_ = checked_add(m.degree_, exponents[v]);
  }
  return m;
}

std::uint32_t Monomial::exponent(std::uint32_t var) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{var, 0});
  return it != terms_.end() && it->var == var ? it->exp : 0;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  auto it = other.terms_.begin();
  for (const Term& t : terms_) {
    while (it != other.terms_.end() && it->var < t.var) ++it;
    if (it == other.terms_.end() || it->var != t.var || it->exp < t.exp) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() && b != other.terms_.end()) {
    if (a->var == b->var) return false;
    if (a->var < b->var) ++a; else ++b;
  }
  return true;
}

bool Monomial::is_squarefree() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.exp <= 1; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->var < b->var)) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->var < a->var) {
      out.terms_.push_back(*b++);
    } else {
      out.terms_.push_back({a->var, checked_add(a->exp, b->exp)});
      ++a;
      ++b;
    }
  }
  out.degree_ = checked_add(degree_, other.degree_);
  return out;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial out;
  auto d = divisor.terms_.begin();
  for (const Term& t : terms_) {
    std::uint32_t e = t.exp;
    if (d != divisor.terms_.end() && d->var == t.var) {
      if (d->exp > e) throw DomainError("monomial quotient is not exact");
      e -= d->exp;
      ++d;
    } else if (d != divisor.terms_.end() && d->var < t.var) {
      throw DomainError("monomial quotient is not exact");
    }
    if (e) out.terms_.push_back({t.var, e});
  }
  if (d != divisor.terms_.end()) throw DomainError("monomial quotient is not exact");
  out.degree_ = degree_ - divisor.degree_;
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out;
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->var < b->var)) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->var < a->var) {
      out.terms_.push_back(*b++);
    } else {
      out.terms_.push_back({a->var, std::max(a->exp, b->exp)});
      ++a;
      ++b;
    }
  }
  for (const Term& t : out.terms_) out.degree_ += t.exp;
  return out;
}

std::string Monomial::to_string() const {
  if (terms_.empty()) return "1";
  std::string s;
  for (const Term& t : terms_) {
    if (!s.empty()) s += '*';
    s += "q[" + std::to_string(t.var) + "]";
    if (t.exp != 1) s += "^" + std::to_string(t.exp);
  }
  return s;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& t : m.terms()) {
    h ^= (static_cast<std::size_t>(t.var) << 20 | t.exp) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

MonomialOrder::MonomialOrder(std::vector<std::uint32_t> rank_of_var, std::string name)
    : rank_(std::move(rank_of_var)), name_(std::move(name)) {
  std::vector<std::uint32_t> check = rank_;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i) {
    if (check[i] != i) throw DomainError("variable ranks must be a permutation");
  }
}

std::vector<std::uint32_t> MonomialOrder::ascending_variables() const {
  std::vector<std::uint32_t> vars(rank_.size());
  for (std::uint32_t v = 0; v < rank_.size(); ++v) vars[rank_[v]] = v;
  return vars;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  // Find the smallest-ranked variable whose exponents differ.
  bool found = false;
  std::uint32_t best_rank = 0;
  int verdict = 0;
  auto consider = [&](std::uint32_t var, std::uint32_t ea, std::uint32_t eb) {
    if (ea == eb) return;
    const std::uint32_t r = rank(var);
    if (!found || r < best_rank) {
      found = true;
      best_rank = r;
      verdict = ea > eb ? -1 : 1;
    }
  };
  auto x = a.terms().begin();
  auto y = b.terms().begin();
  while (x != a.terms().end() || y != b.terms().end()) {
    if (y == b.terms().end() || (x != a.terms().end() && x->var < y->var)) {
      consider(x->var, x->exp, 0);
      ++x;
    } else if (x == a.terms().end() || y->var < x->var) {
      consider(y->var, 0, y->exp);
      ++y;
    } else {
      consider(x->var, x->exp, y->exp);
      ++x;
      ++y;
    }
  }
  return verdict;
}

Binomial MonomialOrder::orient(Binomial b) const {
  if (compare(b.lead, b.tail) < 0) std::swap(b.lead, b.tail);
  return b;
}

}  // namespace cutideal
