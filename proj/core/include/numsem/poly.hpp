#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "numsem/semigroup.hpp"

namespace numsem {

/// Monomial in the four curve variables, stored as its exponent vector.
struct Monomial {
  std::array<Int, 4> exponents{0, 0, 0, 0};

  Int total_degree() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical term order used for storage and serialization:
/// total degree first, then lexicographic on the exponent vector.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Difference of two distinct monomials with coefficients +1 / -1.
struct Binomial {
  Monomial plus;
  Monomial minus;

  friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// Sparse polynomial with exact 64-bit integer coefficients; zero
/// coefficients are never stored.
class Polynomial {
public:
  Polynomial() = default;
  static Polynomial term(Int coefficient, const Monomial& m);
  static Polynomial from_binomial(const Binomial& b);

  bool is_zero() const { return terms_.empty(); }
  Int constant_term() const;
  const std::map<Monomial, Int, MonomialOrder>& terms() const { return terms_; }

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  std::map<Monomial, Int, MonomialOrder> terms_;
};

/// Variable weights; for the curve ideal these are the semigroup generators.
using WeightVector = std::array<Int, 4>;

Int weighted_degree(const Monomial& m, const WeightVector& w);

/// Both monomials of the binomial carry the same weighted degree.
bool is_homogeneous(const Binomial& b, const WeightVector& w);

/// The common weighted degree of all terms, nullopt when the polynomial is
/// zero or mixes degrees.
std::optional<Int> homogeneous_degree(const Polynomial& p, const WeightVector& w);

}  // namespace numsem
