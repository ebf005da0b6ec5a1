#pragma once

#include <vector>

#include "numsem/semigroup.hpp"
#include "numsem/tangent_cone.hpp"

namespace numsem {

/// Base-r digit expansion up to a fixed order: digits[k] <= r-1 for
/// k < order, the top digit digits[order] is unbounded.
struct RAdicDigits {
  std::vector<Int> digits;

  Int digit_sum() const;
};

/// Greedy digits of `value` in base r up to `order`: positions 0..order-1
/// carry standard base-r digits, the remainder lands in position `order`.
/// Requires value >= 0, r >= 2, order >= 0.
RAdicDigits r_adic(Int value, Int r, Int order);

/// Minimum of sum(beta_k) over ALL representations
/// value = sum(beta_k r^k, k = 0..order) with beta_k >= 0, by exhaustive
/// recursion. Always equals r_adic(value, r, order).digit_sum(); kept as the
/// independent route for that fact.
Int min_digit_sum(Int value, Int r, Int order);

/// Parameters of the family generated by a together with ha + r^k d for
/// k = 0..n (partial-sums-of-a-geometric-progression shape).
///
/// Requires gcd(a,d) = gcd(a,r) = 1, r >= 2, d > h*n*(r-1), and that the
/// resulting n+2 generators are a minimal generating set (verified at
/// construction; the failure message carries a redundancy witness).
struct GeoParams {
  Int a = 0;
  Int d = 0;
  Int r = 0;
  Int h = 0;
  Int n = 0;

  GeoParams(Int a_, Int d_, Int r_, Int h_, Int n_);
};

/// (a, ha+d, ha+rd, ..., ha+r^n d).
std::vector<Int> geo_generators(const GeoParams& p);

NumericalSemigroup geo_semigroup(const GeoParams& p);

/// Closed-form Apery element for residue index i: ell is the digit sum of
/// r_adic(i, r, n) and omega = ell*h*a + i*d. Index 0 gives (0, 0).
struct GeoAperyEntry {
  Int i = 0;
  Int ell = 0;
  Int omega = 0;
};

std::vector<GeoAperyEntry> geo_apery(const GeoParams& p);

/// max over i of ell_i; the Apery table has rows 0..table_depth and the
/// depth equals the reduction number.
Int geo_table_depth(const GeoParams& p);

/// Closed-form Apery table, residue-indexed like the oracle's: the entry for
/// index t sits in column (t*d) mod a and equals omega_t for s <= ell_t, then
/// omega_t + (s - ell_t)*a.
AperyTable geo_apery_table(const GeoParams& p);

}  // namespace numsem
