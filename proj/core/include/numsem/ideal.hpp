#pragma once

#include <array>
#include <string>
#include <vector>

#include "numsem/gamma4.hpp"
#include "numsem/poly.hpp"

namespace numsem {

/// Dense rows x cols matrix of exact integer polynomials.
class PolyMatrix {
public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Polynomial& at(std::size_t r, std::size_t c) const;
  Polynomial& at(std::size_t r, std::size_t c);

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  bool is_zero() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> entries_;
};

/// The minimal binomial generating set of the curve ideal for a = 6m + q,
/// instantiated at the concrete (m, d). The q = 1 short list applies exactly
/// when m = d = 1 (the only parameters where the exponent 4m+d-6 would be
/// negative). Exponents are asserted nonnegative at instantiation.
std::vector<Binomial> hq_generators(const Gamma4Params& p);

/// Images of the generators under x1 -> 0, as a monomial generating set in
/// x2, x3, x4.
///
/// Normally each binomial keeps exactly one monomial. When both monomials
/// survive (this happens in the family only at 4m+d = 6, where x2^5 - x4^(m+1)
/// is x1-free), the binomial is reduced modulo a surviving monomial generator
/// dividing one of its sides: <g, m1 - m2> = <g, m2> whenever g | m1. Throws
/// std::invalid_argument when no side is x1-free or the reduction is not
/// possible.
std::vector<Monomial> set_x1_zero(const std::vector<Binomial>& gens);

/// Number of monomials in x2, x3, x4 divisible by no generator, enumerated
/// inside the box cut out by the pure-power generators. Throws
/// std::domain_error when some variable has no pure power (infinite
/// quotient) and std::invalid_argument when a generator involves x1.
Int standard_monomial_count(const std::vector<Monomial>& gens);

/// (beta_0, beta_1, beta_2, beta_3) for q = a mod 6.
std::array<Int, 4> betti_signature(Int q);

struct ResolutionMatrices {
  PolyMatrix phi1;  // 1 x beta_1
  PolyMatrix phi2;  // beta_1 x beta_2
  PolyMatrix phi3;  // beta_2 x beta_3
};

/// The graded free resolution maps for the q-case at (m, d); q = 0 yields the
/// Koszul matrices of the three generators.
ResolutionMatrices resolution_matrices(const Gamma4Params& p);

struct ComplexIssue {
  std::string matrix;
  std::size_t row = 0;
  std::size_t col = 0;
  std::string detail;
};

struct ComplexReport {
  bool products_vanish = true;
  bool no_constant_entries = true;
  bool graded = true;
  bool ranks_match = true;
  std::vector<ComplexIssue> issues;

  bool pass() const {
    return products_vanish && no_constant_entries && graded && ranks_match;
  }
};

/// Verify the complex property (phi1*phi2 = 0, phi2*phi3 = 0), minimality
/// (no entry has a nonzero constant term) and gradedness (per matrix, column
/// degrees exist so that every nonzero entry is weighted-homogeneous of the
/// consistent degree).
ComplexReport verify_complex(const PolyMatrix& phi1, const PolyMatrix& phi2,
                             const PolyMatrix& phi3, const WeightVector& w);

/// Same, plus a rank check against betti_signature(q).
ComplexReport verify_resolution(const Gamma4Params& p);

struct IdealCrossCheck {
  bool homogeneous = true;       // every binomial weighted-homogeneous
  bool gastinger = true;         // standard monomial count == a
  bool degrees_match = true;     // degree multiset == factorization-graph oracle
  bool count_matches = true;     // |H_q| == beta_1
  Int standard_monomials = 0;
  std::map<Int, Int> hq_degrees;      // weighted degrees with multiplicity
  std::map<Int, Int> oracle_degrees;  // betti_degrees() output

  bool pass() const {
    return homogeneous && gastinger && degrees_match && count_matches;
  }
};

/// Independent verification that H_q generates (Gastinger count) and is
/// minimal (degree multiset equality with the factorization-graph oracle).
IdealCrossCheck cross_check_betti(const Gamma4Params& p);

}  // namespace numsem
