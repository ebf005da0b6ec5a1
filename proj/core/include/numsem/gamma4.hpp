#pragma once

#include <array>
#include <vector>

#include "numsem/semigroup.hpp"
#include "numsem/tangent_cone.hpp"

namespace numsem {

/// Parameters of the four-generated family with generators
/// s_n = (n/2) * (2a + (n-1)d), n = 1..4, i.e. the partial sums of the
/// arithmetic progression a, a+d, a+2d, a+3d.
///
/// Requires a >= 7 (the minimality hypothesis), d >= 1 and gcd(a, d) = 1.
/// Writing a = 6m + q with 0 <= q <= 5 drives every closed-form case split.
struct Gamma4Params {
  Int a = 0;
  Int d = 0;

  Gamma4Params(Int a_, Int d_);

  Int m() const noexcept { return a / 6; }
  Int q() const noexcept { return a % 6; }
};

/// One Apery element in closed form: i = 6*mu + 3*nu + xi with nu in {0,1}
/// and xi in {0,1,2}, omega = (4*mu + 3*nu + 2*xi)*a + i*d.
struct Gamma4AperyEntry {
  Int i = 0;
  Int mu = 0;
  Int nu = 0;
  Int xi = 0;
  Int omega = 0;
};

/// (a, 2a+d, 3a+3d, 4a+6d), strictly increasing.
std::array<Int, 4> gamma4_generators(const Gamma4Params& p);

NumericalSemigroup gamma4_semigroup(const Gamma4Params& p);

/// Closed-form Apery set with respect to a, entries for i = 1..a-1.
std::vector<Gamma4AperyEntry> gamma4_apery(const Gamma4Params& p);

/// (mu_i, nu_i, xi_i) for one index 0 <= i <= a-1.
Gamma4AperyEntry gamma4_apery_entry(const Gamma4Params& p, Int i);

/// Pseudo-Frobenius numbers in the w - a normalization, sorted ascending.
/// The case split on q picks 1, 2, 2, 2, 3, 3 omega-indices respectively.
std::vector<Int> gamma4_pf(const Gamma4Params& p);

/// The same elements listed as omega(i) values in case order (the raw Apery
/// elements, before subtracting a).
std::vector<Int> gamma4_pf_omega_listing(const Gamma4Params& p);

/// Frobenius number, computed as max of the pseudo-Frobenius set.
Int gamma4_frobenius(const Gamma4Params& p);

/// Cross-evaluation of the closed-form case guards that pick the Frobenius
/// number directly. The q=2 guard is evaluated both as written ("a > 2",
/// vacuous) and in the amended form "a > 2d"; gamma4_frobenius() never
/// depends on either.
struct Gamma4FrobeniusGuards {
  Int frobenius = 0;        // max of the PF set
  Int guard_as_written = 0; // omega(index) - a selected by the printed guards
  Int guard_amended = 0;    // same with the q=2 guard read as a > 2d
  bool as_written_agrees = true;
  bool amended_agrees = true;
};

Gamma4FrobeniusGuards gamma4_frobenius_guard_report(const Gamma4Params& p);

/// Multiplicities t_k = #{0 <= i <= a-1 : mu_i + nu_i + xi_i = k} for
/// k = 0..floor(a/6)+2, in closed form. When q = 0 the raw case table counts
/// the triple (m, 0, 0), which encodes i = a and is out of range, so the
/// value at k = m is one less than the raw table; the sum is always a.
std::vector<Int> gamma4_tk(const Gamma4Params& p);

/// The raw case-table values without the q = 0 adjustment, for reporting.
std::vector<Int> gamma4_tk_unadjusted(const Gamma4Params& p);

/// (sum t_k x^k) / (1 - x).
HilbertSeries gamma4_hilbert_series(const Gamma4Params& p);

/// Closed-form Apery table, residue-indexed: the value for index t sits in
/// column (t*d) mod a. Entry (s, t) equals omega(t) while
/// s <= mu_t + nu_t + xi_t and (3*mu_t + 2*nu_t + xi_t + s)*a + t*d after;
/// the reduction number is floor(a/6) + 2.
AperyTable gamma4_apery_table(const Gamma4Params& p);

/// Exponents alpha + 1 over the pseudo-Frobenius numbers alpha; these grade
/// the derivation module of the semigroup ring.
std::vector<Int> derivation_exponents(const Gamma4Params& p);

}  // namespace numsem
