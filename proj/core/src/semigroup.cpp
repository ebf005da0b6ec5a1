#include "numsem/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace numsem {

namespace {

void check_mul_fits(Int a, Int b) {
  if (a > 0 && b > 0 && a > std::numeric_limits<Int>::max() / b) {
    throw std::overflow_error("numsem: a * max generator exceeds 64-bit range");
  }
}

// Membership DP on a raw generator list; no invariant requirements.
bool representable(std::span<const Int> gens, Int x) {
  if (x < 0) return false;
  std::vector<char> reach(static_cast<std::size_t>(x) + 1, 0);
  reach[0] = 1;
  for (Int v = 1; v <= x; ++v) {
    for (Int g : gens) {
      if (g <= v && reach[static_cast<std::size_t>(v - g)]) {
        reach[static_cast<std::size_t>(v)] = 1;
        break;
      }
    }
  }
  return reach[static_cast<std::size_t>(x)] != 0;
}

void enumerate_factorizations(std::span<const Int> gens, Int x,
                              std::vector<Int>& cur,
                              std::vector<Factorization>& out,
                              std::size_t idx, Int rem) {
  if (idx == 0) {
    if (rem % gens[0] == 0) {
      cur[0] = rem / gens[0];
      out.push_back(Factorization{cur});
    }
    return;
  }
  const Int g = gens[idx];
  for (Int c = rem / g; c >= 0; --c) {
    cur[idx] = c;
    enumerate_factorizations(gens, x, cur, out, idx - 1, rem - c * g);
  }
  cur[idx] = 0;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<Int> generators)
    : gens_(std::move(generators)) {
  if (gens_.size() < 2) {
    throw std::invalid_argument("numsem: need at least two generators");
  }
  if (gens_.front() < 2) {
    throw std::invalid_argument("numsem: smallest generator must be >= 2");
  }
  if (!std::is_sorted(gens_.begin(), gens_.end()) ||
      std::adjacent_find(gens_.begin(), gens_.end()) != gens_.end()) {
    throw std::invalid_argument("numsem: generators must be strictly increasing");
  }
  Int g = 0;
  for (Int v : gens_) g = std::gcd(g, v);
  if (g != 1) {
    throw std::invalid_argument("numsem: gcd of generators must be 1");
  }
}

Int AperySet::max_element() const {
  Int best = 0;
  for (Int v : elements) best = std::max(best, v);
  return best;
}

Int Factorization::length() const {
  Int sum = 0;
  for (Int e : exponents) sum += e;
  return sum;
}

bool contains(const NumericalSemigroup& s, Int x) {
  if (x < 0) throw std::domain_error("numsem: contains() needs x >= 0");
  return representable(s.generators(), x);
}

AperySet apery_set(const NumericalSemigroup& s, Int a) {
  if (a <= 0) throw std::domain_error("numsem: Apery modulus must be positive");
  const auto& gens = s.generators();
  check_mul_fits(a, gens.back());
  const bool is_gen = std::binary_search(gens.begin(), gens.end(), a);
  if (!is_gen && !representable(gens, a)) {
    throw std::domain_error("numsem: Apery modulus " + std::to_string(a) +
                            " is not a semigroup element");
  }

  constexpr Int kInf = std::numeric_limits<Int>::max();
  std::vector<Int> dist(static_cast<std::size_t>(a), kInf);
  dist[0] = 0;
  using Item = std::pair<Int, Int>;  // (distance, node)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.emplace(0, 0);
  while (!heap.empty()) {
    auto [dv, v] = heap.top();
    heap.pop();
    if (dv > dist[static_cast<std::size_t>(v)]) continue;
    for (Int g : gens) {
      const Int w = (v + g) % a;
      const Int nd = dv + g;
      if (nd < dist[static_cast<std::size_t>(w)]) {
        dist[static_cast<std::size_t>(w)] = nd;
        heap.emplace(nd, w);
      }
    }
  }
  return AperySet{a, std::move(dist)};
}

Int frobenius(const NumericalSemigroup& s) {
  const AperySet ap = apery_set(s, s.multiplicity());
  return ap.max_element() - s.multiplicity();
}

std::vector<Int> pseudo_frobenius(const NumericalSemigroup& s) {
  const Int a = s.multiplicity();
  const AperySet ap = apery_set(s, a);
  LengthOracle oracle(s);
  oracle.ensure(ap.max_element());
  std::vector<Int> out;
  for (Int w : ap.elements) {
    bool dominated = false;
    for (Int w2 : ap.elements) {
      if (w2 != w && w2 - w > 0 && oracle.contains(w2 - w)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(w - a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<MinimalityWitness> minimality_witness(const NumericalSemigroup& s) {
  const auto& gens = s.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<Int> others;
    others.reserve(gens.size() - 1);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j != i) others.push_back(gens[j]);
    }
    if (!representable(others, gens[i])) continue;
    // Redundant: recover one expression over the others.
    std::vector<Int> cur(others.size(), 0);
    std::vector<Factorization> expr;
    enumerate_factorizations(others, gens[i], cur, expr, others.size() - 1,
                             gens[i]);
    MinimalityWitness w;
    w.generator_index = i;
    w.expression = expr.front().exponents;
    return w;
  }
  return std::nullopt;
}

bool is_minimal_generating(const NumericalSemigroup& s) {
  return !minimality_witness(s).has_value();
}

std::vector<Factorization> factorizations(const NumericalSemigroup& s, Int x) {
  if (x < 0) return {};
  const auto& gens = s.generators();
  std::vector<Int> cur(gens.size(), 0);
  std::vector<Factorization> out;
  enumerate_factorizations(gens, x, cur, out, gens.size() - 1, x);
  return out;
}

std::optional<Int> max_factorization_length(const NumericalSemigroup& s, Int x) {
  if (x < 0) return std::nullopt;
  LengthOracle oracle(s);
  const Int len = oracle.max_length(x);
  if (len < 0) return std::nullopt;
  return len;
}

AperyTable apery_table(const NumericalSemigroup& s) {
  const Int a = s.multiplicity();
  AperySet row0 = apery_set(s, a);
  const Int cap = row0.max_element() / a + 2;  // a row-n entry has length <= entry/a
  LengthOracle oracle(s);
  oracle.ensure(row0.max_element() + (cap + 2) * a);

  AperyTable table;
  table.modulus = a;
  table.rows.push_back(std::move(row0.elements));
  for (Int n = 0; n <= cap; ++n) {
    const auto& cur = table.rows.back();
    std::vector<Int> next(cur.size());
    bool all_bumped = true;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (oracle.max_length(cur[i]) >= n + 1) {
        next[i] = cur[i];
        all_bumped = false;
      } else {
        next[i] = cur[i] + a;
      }
    }
    if (all_bumped) return table;  // reduction number reached
    table.rows.push_back(std::move(next));
  }
  throw std::logic_error("numsem: Apery table failed to stabilize");
}

std::map<Int, Int> betti_degrees(const NumericalSemigroup& s) {
  return betti_degrees(s, frobenius(s) + std::reduce(s.generators().begin(),
                                                     s.generators().end()) +
                              1);
}

std::map<Int, Int> betti_degrees(const NumericalSemigroup& s, Int bound) {
  const auto& gens = s.generators();
  const Int gen_sum = std::reduce(gens.begin(), gens.end());
  if (bound < frobenius(s) + gen_sum) {
    throw std::domain_error(
        "numsem: betti_degrees bound below frobenius + sum of generators");
  }

  // Representation counts capped at 2: only elements with >= 2 factorizations
  // need the full enumeration.
  std::vector<std::uint8_t> reps(static_cast<std::size_t>(bound) + 1, 0);
  reps[0] = 1;
  for (Int g : gens) {
    for (Int v = g; v <= bound; ++v) {
      const auto sum = static_cast<unsigned>(reps[static_cast<std::size_t>(v)]) +
                       reps[static_cast<std::size_t>(v - g)];
      reps[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(
          std::min<unsigned>(sum, 2));
    }
  }

  std::map<Int, Int> out;
  for (Int v = 1; v <= bound; ++v) {
    if (reps[static_cast<std::size_t>(v)] < 2) continue;
    const auto facts = factorizations(s, v);
    UnionFind uf(facts.size());
    for (std::size_t i = 0; i < facts.size(); ++i) {
      for (std::size_t j = i + 1; j < facts.size(); ++j) {
        for (std::size_t k = 0; k < gens.size(); ++k) {
          if (facts[i].exponents[k] > 0 && facts[j].exponents[k] > 0) {
            uf.unite(i, j);
            break;
          }
        }
      }
    }
    Int components = 0;
    for (std::size_t i = 0; i < facts.size(); ++i) {
      if (uf.find(i) == i) ++components;
    }
    if (components > 1) out[v] = components - 1;
  }
  return out;
}

LengthOracle::LengthOracle(const NumericalSemigroup& s) : gens_(s.generators()) {
  len_.push_back(0);
}

void LengthOracle::ensure(Int bound) {
  if (bound < static_cast<Int>(len_.size())) return;
  const auto old = len_.size();
  len_.resize(static_cast<std::size_t>(bound) + 1);
  for (auto v = static_cast<Int>(old); v <= bound; ++v) {
    Int best = -1;
    for (Int g : gens_) {
      if (g <= v && len_[static_cast<std::size_t>(v - g)] >= 0) {
        best = std::max(best, len_[static_cast<std::size_t>(v - g)] + 1);
      }
    }
    len_[static_cast<std::size_t>(v)] = best;
  }
}

Int LengthOracle::max_length(Int x) {
  if (x < 0) return -1;
  ensure(x);
  return len_[static_cast<std::size_t>(x)];
}

}  // namespace numsem
