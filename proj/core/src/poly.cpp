#include "numsem/poly.hpp"

namespace numsem {

Int Monomial::total_degree() const {
  return exponents[0] + exponents[1] + exponents[2] + exponents[3];
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t k = 0; k < 4; ++k) {
    if (exponents[k] > other.exponents[k]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  for (std::size_t k = 0; k < 4; ++k) {
    out.exponents[k] = exponents[k] + other.exponents[k];
  }
  return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const Int da = a.total_degree();
  const Int db = b.total_degree();
  if (da != db) return da < db;
  return a.exponents < b.exponents;
}

Polynomial Polynomial::term(Int coefficient, const Monomial& m) {
  Polynomial p;
  if (coefficient != 0) p.terms_[m] = coefficient;
  return p;
}

Polynomial Polynomial::from_binomial(const Binomial& b) {
  return term(1, b.plus) - term(1, b.minus);
}

Int Polynomial::constant_term() const {
  const auto it = terms_.find(Monomial{});
  return it == terms_.end() ? 0 : it->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [mono, coeff] : other.terms_) {
    const Int next = (terms_[mono] += coeff);
    if (next == 0) terms_.erase(mono);
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [mono, coeff] : other.terms_) {
    const Int next = (terms_[mono] -= coeff);
    if (next == 0) terms_.erase(mono);
  }
  return *this;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }

Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const Monomial m = ma * mb;
      const Int next = (out.terms_[m] += ca * cb);
      if (next == 0) out.terms_.erase(m);
    }
  }
  return out;
}

Int weighted_degree(const Monomial& m, const WeightVector& w) {
  Int deg = 0;
  for (std::size_t k = 0; k < 4; ++k) deg += m.exponents[k] * w[k];
  return deg;
}

bool is_homogeneous(const Binomial& b, const WeightVector& w) {
  return weighted_degree(b.plus, w) == weighted_degree(b.minus, w);
}

std::optional<Int> homogeneous_degree(const Polynomial& p, const WeightVector& w) {
  std::optional<Int> deg;
  for (const auto& [mono, coeff] : p.terms()) {
    const Int d = weighted_degree(mono, w);
    if (!deg) {
      deg = d;
    } else if (*deg != d) {
      return std::nullopt;
    }
  }
  return deg;
}

}  // namespace numsem
