#pragma once

#include <span>
#include <utility>
#include <vector>

#include "numsem/semigroup.hpp"

namespace numsem {

/// Maximal constant run of length >= 1 inside a ladder; start/end are the
/// row indices s(L) and e(L).
struct Landing {
  std::size_t start = 0;
  std::size_t end = 0;
};

/// One torsion summand of the tangent-cone decomposition: a copy of
/// F/((t^a)^*)^length shifted by `shift`.
struct TorsionSummand {
  Int shift = 0;   // b_j = e_{j-1}
  Int length = 0;  // c_j = s_j - e_{j-1}

  friend auto operator<=>(const TorsionSummand&, const TorsionSummand&) = default;
};

/// Landing statistics of one table column.
///
/// `p` is (number of landings) - 1 and equals torsion.size(); a strictly
/// increasing ladder has no landing and is treated as the trivial landing
/// {0} with end 0, so free_shift = 0 and no torsion.
struct LadderStats {
  std::vector<Landing> landings;
  Int p = 0;
  Int free_shift = 0;  // e of the last landing; the d_i of the decomposition
  std::vector<TorsionSummand> torsion;
};

/// Throws std::domain_error when values decrease.
LadderStats ladder_stats(std::span<const Int> values);

/// Tangent cone as a module over the fiber cone of (t^a): one free summand
/// shift per residue class (so free_shifts.size() == modulus) plus the
/// torsion summands collected over all columns.
struct CZDecomposition {
  std::vector<Int> free_shifts;         // sorted ascending
  std::vector<TorsionSummand> torsion;  // sorted
};

CZDecomposition cz_decompose(const AperyTable& table);

/// The tangent cone is a free module over the fiber cone, hence
/// Cohen-Macaulay, exactly when there is no torsion.
bool is_tangent_cone_cm(const CZDecomposition& d);

/// Necessary condition for the tangent cone to be Gorenstein, evaluated per
/// power n = 1..reduction number over a finite window:
///   {x in nM : x + a in (n+2)M} == (n+1)M.
/// This is an evaluator for the displayed condition, not a Gorenstein
/// decider.
struct GorensteinReport {
  std::vector<std::pair<Int, bool>> per_power;
  bool overall = true;
};

GorensteinReport gorenstein_condition(const NumericalSemigroup& s);

/// Rational series numerator over the fixed denominator (1 - x).
struct HilbertSeries {
  std::vector<Int> numerator;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

/// Hilbert series of the decomposed tangent cone. Each free shift d
/// contributes x^d to the numerator; a torsion summand (b, c) contributes
/// x^b - x^(b+c), i.e. the polynomial series x^b (1 + x + ... + x^(c-1)).
/// For a torsion-free decomposition the numerator is the shift histogram.
HilbertSeries hilbert_from_decomposition(const CZDecomposition& d);

/// Expand numerator/(1 - x) to `count` coefficients; the degree-n coefficient
/// is the Hilbert function value there.
std::vector<Int> hilbert_series_prefix(const HilbertSeries& h, std::size_t count);

/// True iff every nonzero Apery element has exactly one factorization over
/// the full generator list.
bool unique_expression_check(const NumericalSemigroup& s, const AperySet& ap);

}  // namespace numsem
