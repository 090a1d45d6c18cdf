#include "cutideal/toric_ideal.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <unordered_map>

#include "cutideal/errors.hpp"

namespace cutideal {

namespace {

// Fisher-Yates over mt19937_64 so the permutation depends only on the seed.
void seeded_shuffle(std::vector<std::uint32_t>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(items[i - 1], items[j]);
  }
}

MonomialOrder order_from_ascending(const std::vector<std::uint32_t>& ascending, std::string name) {
  std::vector<std::uint32_t> rank(ascending.size());
  for (std::uint32_t r = 0; r < ascending.size(); ++r) rank[ascending[r]] = r;
  return MonomialOrder(std::move(rank), std::move(name));
}

}  // namespace

MonomialOrder paper_order(int n, TieBreak tie_break) {
  if (n < 2) throw DomainError("paper_order needs n >= 2");
  const std::vector<Cut> cuts = enumerate_cuts(n);
  const std::uint32_t singleton_one = static_cast<std::uint32_t>(cuts.size()) - 1;  // {1}|{2..n}

  std::vector<std::uint32_t> shuffle_key(cuts.size());
  std::iota(shuffle_key.begin(), shuffle_key.end(), 0);
  if (tie_break == TieBreak::shuffled) {
    std::mt19937_64 rng(0x5eedULL);
    seeded_shuffle(shuffle_key, rng);
  }

  std::vector<std::uint32_t> ascending(cuts.size());
  std::iota(ascending.begin(), ascending.end(), 0);
  auto key = [&](std::uint32_t i) {
    const int block = cuts[i].min_side_size();
    switch (tie_break) {
      case TieBreak::standard:
        return std::make_tuple(block, i == singleton_one ? 0 : 1, static_cast<std::int64_t>(i));
      case TieBreak::descending:
        return std::make_tuple(block, 0, -static_cast<std::int64_t>(i));
      case TieBreak::by_side_size:
        return std::make_tuple(block, std::popcount(cuts[i].side()), static_cast<std::int64_t>(i));
      case TieBreak::shuffled:
        return std::make_tuple(block, 0, static_cast<std::int64_t>(shuffle_key[i]));
    }
    return std::make_tuple(block, 0, static_cast<std::int64_t>(i));
  };
  std::sort(ascending.begin(), ascending.end(), [&](std::uint32_t a, std::uint32_t b) { return key(a) < key(b); });

  static const char* names[] = {"paper", "paper-alt1", "paper-alt2", "paper-alt3"};
  return order_from_ascending(ascending, names[static_cast<int>(tie_break)]);
}

MonomialOrder random_revlex_order(std::size_t num_variables, std::uint64_t seed) {
  std::vector<std::uint32_t> ascending(num_variables);
  std::iota(ascending.begin(), ascending.end(), 0);
  std::mt19937_64 rng(seed);
  seeded_shuffle(ascending, rng);
  return order_from_ascending(ascending, "random:" + std::to_string(seed));
}

std::uint32_t cut_variable(int n, std::span<const int> side) { return Cut::from_vertices(n, side).index(); }

bool in_kernel(const CutMatrix& m, const Binomial& b) {
  return evaluate_monomial(m, b.lead) == evaluate_monomial(m, b.tail);
}

std::vector<Monomial> fiber(const CutMatrix& m, const SemigroupElement& w) {
  std::vector<Monomial> out;
  const std::int32_t d = w.s_degree();
  if (d < 0 || !w.nonnegative() || w.num_edges() != m.graph().size()) return out;

  std::vector<std::uint32_t> exps(m.cols(), 0);
  std::vector<std::int32_t> rest = w.coords();
  const std::size_t edges = m.graph().size();

  std::function<void(std::size_t, std::int32_t)> search = [&](std::size_t start, std::int32_t left) {
    if (left == 0) {
      if (std::all_of(rest.begin(), rest.end(), [](std::int32_t x) { return x == 0; })) {
        out.push_back(Monomial::from_dense(exps));
      }
      return;
    }
    // Columns are 0/1, so no edge can need more than `left` further hits.
    for (std::size_t r = 0; r < edges; ++r)
      if (rest[r] > left) return;
    for (std::size_t c = start; c < m.cols(); ++c) {
      const auto& col = m.column(c).coords();
      bool fits = true;
      for (std::size_t r = 0; r < edges && fits; ++r) fits = col[r] <= rest[r];
      if (!fits) continue;
      for (std::size_t r = 0; r <= edges; ++r) rest[r] -= col[r];
      ++exps[c];
      search(c, left - 1);
      --exps[c];
      for (std::size_t r = 0; r <= edges; ++r) rest[r] += col[r];
    }
  };
  search(0, d);
  return out;
}

namespace {

// Every degree-d monomial, grouped by image under the cut map.
std::unordered_map<SemigroupElement, std::vector<Monomial>, SemigroupElementHash> fibers_of_degree(
    const CutMatrix& m, int d) {
  std::unordered_map<SemigroupElement, std::vector<Monomial>, SemigroupElementHash> groups;
  std::vector<Monomial::Term> terms;
  std::function<void(std::uint32_t, int, const SemigroupElement&)> build =
      [&](std::uint32_t start, int left, const SemigroupElement& image) {
        if (left == 0) {
          groups[image].push_back(Monomial::from_terms(terms));
          return;
        }
        for (std::uint32_t c = start; c < m.cols(); ++c) {
          terms.push_back({c, 1});
          build(c, left - 1, image + m.column(c));
          terms.pop_back();
        }
      };
  build(0, d, SemigroupElement(m.graph().size()));
  return groups;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<Binomial> markov_generators_up_to(const CutMatrix& m, int max_degree) {
  if (max_degree < 2) throw DomainError("markov_generators_up_to needs degree bound >= 2");
  std::vector<Binomial> gens;
  for (int d = 2; d <= max_degree; ++d) {
    auto groups = fibers_of_degree(m, d);
    std::vector<const SemigroupElement*> keys;
    for (auto& [key, members] : groups)
      if (members.size() > 1) keys.push_back(&key);
    std::sort(keys.begin(), keys.end(), [](auto* a, auto* b) { return *a < *b; });

    const std::size_t lower = gens.size();
    for (const SemigroupElement* key : keys) {
      std::vector<Monomial>& members = groups[*key];
      std::sort(members.begin(), members.end());
      std::unordered_map<Monomial, std::size_t, MonomialHash> position;
      for (std::size_t i = 0; i < members.size(); ++i) position.emplace(members[i], i);

      UnionFind uf(members.size());
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t g = 0; g < lower; ++g) {
          const Binomial& b = gens[g];
          if (b.lead.divides(members[i])) uf.unite(i, position.at(members[i].quotient(b.lead) * b.tail));
          if (b.tail.divides(members[i])) uf.unite(i, position.at(members[i].quotient(b.tail) * b.lead));
        }
      }
      // Roots are minimal indices, so members[root] is the component's
      // smallest monomial; link every component to the first one.
      std::vector<std::size_t> roots;
      for (std::size_t i = 0; i < members.size(); ++i)
        if (uf.find(i) == i) roots.push_back(i);
      for (std::size_t k = 1; k < roots.size(); ++k) gens.push_back({members[roots[0]], members[roots[k]]});
    }
  }
  return gens;
}

Monomial normal_form(const Monomial& mono, std::span<const Binomial> basis) {
  Monomial cur = mono;
  for (bool changed = true; changed;) {
    changed = false;
    for (const Binomial& g : basis) {
      if (g.lead.divides(cur)) {
        cur = cur.quotient(g.lead) * g.tail;
        changed = true;
        break;
      }
    }
  }
  return cur;
}

namespace {

void validate(const CutMatrix& m, std::span<const Binomial> gens) {
  for (const Binomial& b : gens) {
    if (b.lead.support_bound() > m.cols() || b.tail.support_bound() > m.cols()) {
      throw ValidationError("binomial uses a variable outside the cut matrix: " + b.to_string());
    }
    if (!in_kernel(m, b)) throw ValidationError("binomial not in the cut ideal: " + b.to_string());
  }
}

Binomial s_polynomial(const Binomial& f, const Binomial& g) {
  const Monomial l = f.lead.lcm(g.lead);
  return {l.quotient(f.lead) * f.tail, l.quotient(g.lead) * g.tail};
}

}  // namespace

std::vector<Binomial> buchberger(const CutMatrix& m, std::span<const Binomial> gens, const MonomialOrder& order,
                                 BuchbergerOptions options) {
  validate(m, gens);
  if (order.num_variables() != m.cols()) throw DomainError("order and cut matrix disagree on variables");

  std::vector<Binomial> basis;
  // Normal strategy: smallest lcm degree first, ties by index.
  std::set<std::tuple<std::uint32_t, std::size_t, std::size_t>> pairs;

  auto add = [&](const Monomial& a, const Monomial& b) {
    if (a == b) return;
    Binomial g = order.orient({a, b});
    const std::size_t idx = basis.size();
    for (std::size_t i = 0; i < idx; ++i) {
      if (basis[i].lead.coprime(g.lead)) continue;
      const std::uint32_t deg = basis[i].lead.lcm(g.lead).degree();
      if (options.degree_cap > 0 && deg > static_cast<std::uint32_t>(options.degree_cap)) continue;
      pairs.emplace(deg, i, idx);
    }
    basis.push_back(std::move(g));
  };

  for (const Binomial& b : gens) add(normal_form(b.lead, basis), normal_form(b.tail, basis));

  while (!pairs.empty()) {
    auto [deg, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    const Binomial s = s_polynomial(basis[i], basis[j]);
    add(normal_form(s.lead, basis), normal_form(s.tail, basis));
  }

  // Minimalize: drop elements whose lead is divisible by another kept lead.
  std::sort(basis.begin(), basis.end(),
            [&](const Binomial& a, const Binomial& b) {
              const int c = order.compare(a.lead, b.lead);
              return c != 0 ? c < 0 : order.less(a.tail, b.tail);
            });
  std::vector<Binomial> minimal;
  for (const Binomial& g : basis) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                       [&](const Binomial& h) { return h.lead.divides(g.lead); });
    if (!redundant) minimal.push_back(g);
  }
  for (Binomial& g : minimal) g.tail = normal_form(g.tail, minimal);
  return minimal;
}

Graph star_for_lemma(int n) {
  if (n < 4) throw DomainError("star basis needs n >= 4");
  return make_family({FamilyTag::star, n - 2});
}

std::vector<Binomial> lemma_families_k1m(int n) {
  const Graph g = star_for_lemma(n);
  const int verts = g.order();
  const int leaves = verts - 1;
  const CutMatrix m(g);
  // Paper-style sides A = {1} ∪ X with X a set of leaves (bit i -> vertex i+2).
  auto side = [&](std::uint32_t x) {
    std::vector<int> a{1};
    for (int i = 0; i < leaves; ++i)
      if (x >> i & 1u) a.push_back(i + 2);
    return a;
  };
  auto var = [&](std::uint32_t x) { return Monomial::variable(cut_variable(verts, side(x))); };

  std::vector<Binomial> out;
  const std::uint32_t count = std::uint32_t{1} << leaves;
  for (std::uint32_t x = 0; x < count; ++x) {
    for (std::uint32_t y = x + 1; y < count; ++y) {
      if ((x & y) == x || (x & y) == y) continue;  // comparable
      Binomial b{var(x) * var(y), var(x & y) * var(x | y)};
      if (!in_kernel(m, b)) throw ValidationError("closed-form binomial not in kernel: " + b.to_string());
      out.push_back(std::move(b));
    }
  }
  return out;
}

std::vector<Binomial> TheoremFamilies::all() const {
  std::vector<Binomial> out = crossing;
  out.insert(out.end(), split.begin(), split.end());
  out.insert(out.end(), joined.begin(), joined.end());
  return out;
}

TheoremFamilies theorem_families_k2m(int n) {
  if (n < 4) throw DomainError("K_{2,n-2} basis needs n >= 4");
  const Graph g = make_family({FamilyTag::bipartite_two, n - 2});
  const CutMatrix m(g);
  const int big = n - 2;
  const std::uint32_t count = std::uint32_t{1} << big;
  const std::uint32_t full = count - 1;
  // X ⊆ V2 = {3..n}, bit i -> vertex i+3.
  auto var = [&](std::vector<int> base, std::uint32_t x) {
    for (int i = 0; i < big; ++i)
      if (x >> i & 1u) base.push_back(i + 3);
    return Monomial::variable(cut_variable(n, base));
  };
  auto checked = [&](Binomial b) {
    if (!in_kernel(m, b)) throw ValidationError("closed-form binomial not in kernel: " + b.to_string());
    return b;
  };

  TheoremFamilies fam;
  const Monomial tail_i = var({}, 0) * var({1, 2}, 0);
  for (std::uint32_t x = 0; x < count; ++x) {
    const std::uint32_t y = full & ~x;  // E = {1} ∪ (V2 \ X)
    if (x > y) continue;                // each unordered pair once
    fam.crossing.push_back(checked({var({1}, x) * var({1}, y), tail_i}));
  }
  for (std::uint32_t x = 0; x < count; ++x) {
    for (std::uint32_t y = x + 1; y < count; ++y) {
      if ((x & y) == x || (x & y) == y) continue;
      fam.split.push_back(checked({var({1}, x) * var({1}, y), var({1}, x & y) * var({1}, x | y)}));
      fam.joined.push_back(
          checked({var({1, 2}, x) * var({1, 2}, y), var({1, 2}, x & y) * var({1, 2}, x | y)}));
    }
  }
  return fam;
}

HilbertComparison hilbert_compare(std::span<const Binomial> candidates, const CutMatrix& m, int max_degree) {
  if (max_degree < 0) throw DomainError("degree bound must be >= 0");
  HilbertComparison out;
  const SemigroupLevels levels(m, max_degree);
  for (int d = 0; d <= max_degree; ++d) out.semigroup_counts.push_back(levels.level(d).size());

  std::vector<Monomial> leads;
  for (const Binomial& b : candidates) leads.push_back(b.lead);
  const auto reducible = [&](const Monomial& x) {
    return std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(x); });
  };

  // Divisors of standard monomials are standard, so each degree extends the
  // previous one by a variable no smaller than its last.
  std::vector<Monomial> current{Monomial{}};
  out.standard_counts.push_back(1);
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<Monomial> next;
    for (const Monomial& x : current) {
      const std::uint32_t start = x.empty() ? 0 : x.terms().back().var;
      for (std::uint32_t v = start; v < m.cols(); ++v) {
        Monomial y = x * Monomial::variable(v);
        if (!reducible(y)) next.push_back(std::move(y));
      }
    }
    out.standard_counts.push_back(next.size());
    current = std::move(next);
  }
  return out;
}

bool hilbert_check(std::span<const Binomial> candidates, const CutMatrix& m, int max_degree) {
  validate(m, candidates);
  return hilbert_compare(candidates, m, max_degree).equal();
}

GroebnerCertificate is_groebner_basis(std::span<const Binomial> candidates, const MonomialOrder& order,
                                      const CutMatrix& m, int max_degree) {
  validate(m, candidates);
  GroebnerCertificate cert;
  cert.bound = max_degree;
  std::vector<Binomial> oriented;
  cert.leads_first = true;
  for (const Binomial& b : candidates) {
    if (b.lead == b.tail) throw ValidationError("zero binomial in candidate set");
    oriented.push_back(order.orient(b));
    if (oriented.back().lead != b.lead) cert.leads_first = false;
  }
  for (std::size_t i = 0; i < oriented.size(); ++i) {
    for (std::size_t j = i + 1; j < oriented.size(); ++j) {
      if (oriented[i].lead.coprime(oriented[j].lead)) continue;
      const Binomial s = s_polynomial(oriented[i], oriented[j]);
      if (normal_form(s.lead, oriented) != normal_form(s.tail, oriented)) ++cert.failing_pairs;
    }
  }
  cert.spairs_reduce = cert.failing_pairs == 0;
  cert.hilbert = hilbert_compare(oriented, m, max_degree);
  cert.hilbert_ok = cert.hilbert.equal();
  return cert;
}

bool is_auto_reduced(std::span<const Binomial> basis, const MonomialOrder& order) {
  std::vector<Binomial> oriented;
  for (const Binomial& b : basis) oriented.push_back(order.orient(b));
  for (std::size_t i = 0; i < oriented.size(); ++i) {
    for (std::size_t j = 0; j < oriented.size(); ++j) {
      if (i != j && oriented[j].lead.divides(oriented[i].lead)) return false;
      if (oriented[j].lead.divides(oriented[i].tail)) return false;
    }
  }
  return true;
}

std::vector<Monomial> initial_ideal(std::span<const Binomial> gb, const MonomialOrder& order) {
  std::vector<Monomial> leads;
  for (const Binomial& b : gb) leads.push_back(order.orient(b).lead);
  std::sort(leads.begin(), leads.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });
  leads.erase(std::unique(leads.begin(), leads.end()), leads.end());
  std::vector<Monomial> minimal;
  for (const Monomial& l : leads) {
    if (std::none_of(minimal.begin(), minimal.end(), [&](const Monomial& x) { return x.divides(l); })) {
      minimal.push_back(l);
    }
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

bool is_squarefree(std::span<const Monomial> monomials) {
  return std::all_of(monomials.begin(), monomials.end(), [](const Monomial& x) { return x.is_squarefree(); });
}

ProbeResult compressed_probe(const Graph& g, int trials, std::uint64_t seed, int max_degree) {
  if (trials < 1) throw DomainError("compressed_probe needs trials >= 1");
  const CutMatrix m(g);
  ProbeResult result;
  result.degree_bound = max_degree;
  if (m.cols() < 2) {
    result.trials_run = trials;
    return result;
  }
  const std::vector<Binomial> gens = markov_generators_up_to(m, std::max(max_degree, 2));
  if (gens.empty()) {
    result.trials_run = trials;
    return result;
  }
  // One stream of per-trial seeds, so trial t is reproducible on its own.
  std::mt19937_64 seeds(seed);
  for (int t = 0; t < trials; ++t) {
    const MonomialOrder order = random_revlex_order(m.cols(), seeds());
    const auto gb = buchberger(m, gens, order, {.degree_cap = max_degree});
    result.trials_run = t + 1;
    for (const Monomial& lead : initial_ideal(gb, order)) {
      if (lead.degree() <= static_cast<std::uint32_t>(max_degree) && !lead.is_squarefree()) {
        result.verdict = CompressedVerdict::witness_order_found;
        result.witness = ProbeWitness{t, order, lead};
        return result;
      }
    }
  }
  return result;
}

std::string to_string(CompressedVerdict verdict) {
  return verdict == CompressedVerdict::witness_order_found ? "witness-order-found"
                                                           : "consistent-with-compressed";
}

std::string format_binomials(std::span<const Binomial> basis, std::span<const std::string> header) {
  std::string out;
  for (const std::string& line : header) out += "# " + line + "\n";
  for (const Binomial& b : basis) out += b.to_string() + "\n";
  return out;
}

}  // namespace cutideal
