#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace numsem {

using Int = std::int64_t;

/// A numerical semigroup given by a candidate generating set.
///
/// The generator list must be strictly increasing, contain at least two
/// entries, start at 2 or above, and have gcd 1. The list is *not* required
/// to be minimal; use is_minimal_generating() to test that.
class NumericalSemigroup {
public:
  explicit NumericalSemigroup(std::vector<Int> generators);

  const std::vector<Int>& generators() const noexcept { return gens_; }
  Int multiplicity() const noexcept { return gens_.front(); }
  std::size_t embedding_dimension() const noexcept { return gens_.size(); }

private:
  std::vector<Int> gens_;
};

/// Least semigroup element in every residue class mod `modulus`.
/// elements[r] is the least s in the semigroup with s == r (mod modulus).
struct AperySet {
  Int modulus = 0;
  std::vector<Int> elements;

  Int max_element() const;
};

/// Exponent vector of one expression of an element over the generators.
struct Factorization {
  std::vector<Int> exponents;

  Int length() const;
};

/// Apery sets of the ideal powers nM, one row per power n = 0..reduction
/// number. Columns are indexed by residue class mod `modulus`.
struct AperyTable {
  Int modulus = 0;
  std::vector<std::vector<Int>> rows;

  Int reduction_number() const { return static_cast<Int>(rows.size()) - 1; }
};

/// Membership test by dynamic programming over 0..x. Throws std::domain_error
/// for negative x.
bool contains(const NumericalSemigroup& s, Int x);

/// Apery set with respect to `a`, which must be a semigroup element.
/// Computed as single-source shortest paths on the residue graph
/// (nodes 0..a-1, an arc r -> (r+g) mod a of weight g per generator g).
AperySet apery_set(const NumericalSemigroup& s, Int a);

/// Largest integer not in the semigroup.
Int frobenius(const NumericalSemigroup& s);

/// Pseudo-Frobenius numbers: w - a over the maximal Apery elements under the
/// order x <= y iff y - x lies in the semigroup, with a the multiplicity.
/// Sorted ascending; the count is the type of the semigroup.
std::vector<Int> pseudo_frobenius(const NumericalSemigroup& s);

/// True iff no generator is representable over the remaining ones.
bool is_minimal_generating(const NumericalSemigroup& s);

struct MinimalityWitness {
  std::size_t generator_index = 0;     // the redundant generator
  std::vector<Int> expression;         // exponents over the *other* generators
};

/// Empty when the generating set is minimal, otherwise one redundancy witness.
std::optional<MinimalityWitness> minimality_witness(const NumericalSemigroup& s);

/// All factorizations of x, ordered descending in the exponent of the last
/// generator (then recursively for the earlier ones). Empty when x is not a
/// semigroup element; factorizations(s, 0) is the single zero vector.
std::vector<Factorization> factorizations(const NumericalSemigroup& s, Int x);

/// Maximum factorization length of x, or nullopt when x is not an element.
/// max_factorization_length(s, 0) == 0 (the empty sum), so 0 never lies in nM
/// for n >= 1.
std::optional<Int> max_factorization_length(const NumericalSemigroup& s, Int x);

/// Full Apery table with respect to the multiplicity: row 0 is the Apery set,
/// row n+1 keeps an entry with maximum factorization length >= n+1 and bumps
/// it by the multiplicity otherwise. Rows stop at the reduction number R: the
/// next row would equal row R plus the multiplicity pointwise.
AperyTable apery_table(const NumericalSemigroup& s);

/// Degrees of the minimal binomial generators of the defining ideal, with
/// multiplicities, found via factorization graphs: an element s contributes
/// (number of connected components - 1) when the graph joining factorizations
/// that share a positive coordinate is disconnected. The search window
/// defaults to frobenius + sum of generators + 1, which contains every such
/// degree; an explicit bound below frobenius + sum of generators is rejected.
std::map<Int, Int> betti_degrees(const NumericalSemigroup& s);
std::map<Int, Int> betti_degrees(const NumericalSemigroup& s, Int bound);

/// Shared dense table of maximum factorization lengths, grown on demand.
/// max_length(x) < 0 encodes that x is not a semigroup element.
class LengthOracle {
public:
  explicit LengthOracle(const NumericalSemigroup& s);

  void ensure(Int bound);
  Int max_length(Int x);
  bool contains(Int x) { return max_length(x) >= 0; }

private:
  std::vector<Int> gens_;
  std::vector<Int> len_;
};

}  // namespace numsem
