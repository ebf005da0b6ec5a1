#include "numsem/geo.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace numsem {

namespace {

Int checked_pow(Int base, Int exp) {
  Int out = 1;
  for (Int k = 0; k < exp; ++k) {
    if (out > std::numeric_limits<Int>::max() / base) {
      throw std::overflow_error("numsem: r^k exceeds 64-bit range");
    }
    out *= base;
  }
  return out;
}

Int min_digit_sum_rec(Int value, Int r, Int k) {
  if (k == 0) return value;  // beta_0 = value
  const Int rk = checked_pow(r, k);
  Int best = std::numeric_limits<Int>::max();
  for (Int b = value / rk; b >= 0; --b) {
    best = std::min(best, b + min_digit_sum_rec(value - b * rk, r, k - 1));
  }
  return best;
}

}  // namespace

Int RAdicDigits::digit_sum() const {
  return std::reduce(digits.begin(), digits.end());
}

RAdicDigits r_adic(Int value, Int r, Int order) {
  if (r < 2) throw std::invalid_argument("numsem: r-adic base must be >= 2");
  if (order < 0) throw std::invalid_argument("numsem: r-adic order must be >= 0");
  if (value < 0) throw std::invalid_argument("numsem: r-adic value must be >= 0");
  RAdicDigits out;
  out.digits.reserve(static_cast<std::size_t>(order) + 1);
  Int rem = value;
  for (Int k = 0; k < order; ++k) {
    out.digits.push_back(rem % r);
    rem /= r;
  }
  out.digits.push_back(rem);
  return out;
}

Int min_digit_sum(Int value, Int r, Int order) {
  if (r < 2) throw std::invalid_argument("numsem: r-adic base must be >= 2");
  if (order < 0 || value < 0) {
    throw std::invalid_argument("numsem: min_digit_sum needs value, order >= 0");
  }
  return min_digit_sum_rec(value, r, order);
}

GeoParams::GeoParams(Int a_, Int d_, Int r_, Int h_, Int n_)
    : a(a_), d(d_), r(r_), h(h_), n(n_) {
  if (a < 2 || d < 1 || h < 1 || n < 1) {
    throw std::invalid_argument("numsem: geo parameters must be positive (a >= 2, n >= 1)");
  }
  if (r < 2) {
    throw std::invalid_argument("numsem: geo ratio r must be >= 2");
  }
  if (std::gcd(a, d) != 1) {
    throw std::invalid_argument("numsem: geo requires gcd(a, d) = 1");
  }
  if (std::gcd(a, r) != 1) {
    throw std::invalid_argument("numsem: geo requires gcd(a, r) = 1");
  }
  if (d <= h * n * (r - 1)) {
    throw std::invalid_argument("numsem: geo requires d > h*n*(r-1); d = " +
                                std::to_string(d) + " <= " +
                                std::to_string(h * n * (r - 1)));
  }
  // Minimal generation is checked, not assumed from the hypotheses.
  const NumericalSemigroup s(geo_generators(*this));
  if (auto witness = minimality_witness(s)) {
    std::string msg = "numsem: geo generator ";
    msg += std::to_string(s.generators()[witness->generator_index]);
    msg += " is redundant (exponents over the others:";
    for (Int e : witness->expression) msg += " " + std::to_string(e);
    msg += ")";
    throw std::invalid_argument(msg);
  }
}

std::vector<Int> geo_generators(const GeoParams& p) {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(p.n) + 2);
  out.push_back(p.a);
  for (Int k = 0; k <= p.n; ++k) {
    out.push_back(p.h * p.a + checked_pow(p.r, k) * p.d);
  }
  return out;
}

NumericalSemigroup geo_semigroup(const GeoParams& p) {
  return NumericalSemigroup(geo_generators(p));
}

std::vector<GeoAperyEntry> geo_apery(const GeoParams& p) {
  std::vector<GeoAperyEntry> out;
  out.reserve(static_cast<std::size_t>(p.a));
  for (Int i = 0; i < p.a; ++i) {
    const Int ell = r_adic(i, p.r, p.n).digit_sum();
    out.push_back(GeoAperyEntry{i, ell, ell * p.h * p.a + i * p.d});
  }
  return out;
}

Int geo_table_depth(const GeoParams& p) {
  Int depth = 0;
  for (Int i = 1; i < p.a; ++i) {
    depth = std::max(depth, r_adic(i, p.r, p.n).digit_sum());
  }
  return depth;
}

AperyTable geo_apery_table(const GeoParams& p) {
  const Int a = p.a;
  const Int depth = geo_table_depth(p);
  AperyTable table;
  table.modulus = a;
  table.rows.assign(static_cast<std::size_t>(depth) + 1,
                    std::vector<Int>(static_cast<std::size_t>(a), 0));
  for (const GeoAperyEntry& e : geo_apery(p)) {
    const auto col = static_cast<std::size_t>((e.i * p.d) % a);
    for (Int s = 0; s <= depth; ++s) {
      table.rows[static_cast<std::size_t>(s)][col] =
          s <= e.ell ? e.omega : e.omega + (s - e.ell) * a;
    }
  }
  return table;
}

}  // namespace numsem
