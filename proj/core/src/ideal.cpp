#include "numsem/ideal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace numsem {

namespace {

Monomial mono(Int e1, Int e2, Int e3, Int e4) {
  if (e1 < 0 || e2 < 0 || e3 < 0 || e4 < 0) {
    throw std::logic_error("numsem: negative exponent after instantiation");
  }
  return Monomial{{e1, e2, e3, e4}};
}

Polynomial pterm(Int c, Int e1, Int e2, Int e3, Int e4) {
  return Polynomial::term(c, mono(e1, e2, e3, e4));
}

PolyMatrix from_rows(std::vector<std::vector<Polynomial>> rows) {
  PolyMatrix out(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.front().size()) {
      throw std::logic_error("numsem: ragged matrix literal");
    }
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      out.at(r, c) = std::move(rows[r][c]);
    }
  }
  return out;
}

}  // namespace

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

const Polynomial& PolyMatrix::at(std::size_t r, std::size_t c) const {
  return entries_[r * cols_ + c];
}

Polynomial& PolyMatrix::at(std::size_t r, std::size_t c) {
  return entries_[r * cols_ + c];
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("numsem: matrix dimensions do not compose");
  }
  PolyMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Polynomial acc;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        acc += a.at(i, k) * b.at(k, j);
      }
      out.at(i, j) = std::move(acc);
    }
  }
  return out;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

std::vector<Binomial> hq_generators(const Gamma4Params& p) {
  const Int m = p.m();
  const Int d = p.d;
  const Binomial b1{mono(0, 0, 2, 0), mono(2, 0, 0, 1)};  // x3^2 - x1^2 x4
  const Binomial b2{mono(0, 3, 0, 0), mono(3, 0, 1, 0)};  // x2^3 - x1^3 x3
  switch (p.q()) {
    case 0:
      return {b1, b2, {mono(4 * m + d, 0, 0, 0), mono(0, 0, 0, m)}};
    case 1:
      if (m == 1 && d == 1) {
        return {b1, b2,
                {mono(7, 0, 0, 0), mono(0, 1, 0, 1)},
                {mono(4, 2, 0, 0), mono(0, 0, 1, 1)},
                {mono(2, 2, 1, 0), mono(0, 0, 0, 2)}};
      }
      return {b1, b2,
              {mono(4 * m + d - 6, 5, 0, 0), mono(0, 0, 0, m + 1)},
              {mono(4 * m + d - 1, 2, 0, 0), mono(0, 0, 1, m)},
              {mono(4 * m + d + 2, 0, 0, 0), mono(0, 1, 0, m)}};
    case 2:
      return {b1, b2,
              {mono(4 * m + d - 4, 4, 0, 0), mono(0, 0, 0, m + 1)},
              {mono(4 * m + d + 1, 1, 0, 0), mono(0, 0, 1, m)},
              {mono(4 * m + d + 4, 0, 0, 0), mono(0, 2, 0, m)}};
    case 3:
      return {b1, b2,
              {mono(4 * m + d - 2, 3, 0, 0), mono(0, 0, 0, m + 1)},
              {mono(4 * m + d + 3, 0, 0, 0), mono(0, 0, 1, m)}};
    case 4:
      return {b1, b2,
              {mono(4 * m + d, 2, 0, 0), mono(0, 0, 0, m + 1)},
              {mono(4 * m + d + 5, 0, 0, 0), mono(0, 1, 1, m)}};
    default:
      return {b1, b2,
              {mono(4 * m + d + 2, 1, 0, 0), mono(0, 0, 0, m + 1)},
              {mono(4 * m + d + 7, 0, 0, 0), mono(0, 2, 1, m)}};
  }
}

std::vector<Monomial> set_x1_zero(const std::vector<Binomial>& gens) {
  struct Survivor {
    std::vector<Monomial> free;  // x1-free sides, 1 or 2 of them
  };
  std::vector<Survivor> pass1;
  std::vector<Monomial> singles;
  for (const Binomial& b : gens) {
    Survivor s;
    if (b.plus.exponents[0] == 0) s.free.push_back(b.plus);
    if (b.minus.exponents[0] == 0) s.free.push_back(b.minus);
    if (s.free.empty()) {
      throw std::invalid_argument(
          "numsem: set_x1_zero: neither monomial is free of x1");
    }
    if (s.free.size() == 1) singles.push_back(s.free.front());
    pass1.push_back(std::move(s));
  }

  std::vector<Monomial> out;
  out.reserve(gens.size());
  for (const Survivor& s : pass1) {
    if (s.free.size() == 1) {
      out.push_back(s.free.front());
      continue;
    }
    // The image is still a binomial. If one side lies in the ideal of the
    // surviving monomials, the ideal identity <g, m1 - m2> = <g, m2> for
    // g | m1 reduces it to the other side.
    bool reduced = false;
    for (std::size_t k = 0; k < 2 && !reduced; ++k) {
      for (const Monomial& g : singles) {
        if (g.divides(s.free[k])) {
          out.push_back(s.free[1 - k]);
          reduced = true;
          break;
        }
      }
    }
    if (!reduced) {
      throw std::invalid_argument(
          "numsem: set_x1_zero: both monomials free of x1 and irreducible");
    }
  }
  return out;
}

Int standard_monomial_count(const std::vector<Monomial>& gens) {
  std::array<Int, 3> box{-1, -1, -1};  // pure-power bounds for x2, x3, x4
  for (const Monomial& g : gens) {
    if (g.exponents[0] != 0) {
      throw std::invalid_argument(
          "numsem: standard_monomial_count expects monomials in x2, x3, x4");
    }
    int support = 0;
    std::size_t var = 0;
    for (std::size_t k = 1; k < 4; ++k) {
      if (g.exponents[k] > 0) {
        ++support;
        var = k;
      }
    }
    if (support == 1) {
      Int& b = box[var - 1];
      if (b < 0 || g.exponents[var] < b) b = g.exponents[var];
    }
  }
  if (box[0] < 0 || box[1] < 0 || box[2] < 0) {
    throw std::domain_error(
        "numsem: quotient is not finite dimensional (missing pure power)");
  }
  Int count = 0;
  for (Int e2 = 0; e2 < box[0]; ++e2) {
    for (Int e3 = 0; e3 < box[1]; ++e3) {
      for (Int e4 = 0; e4 < box[2]; ++e4) {
        const Monomial candidate{{0, e2, e3, e4}};
        const bool divisible =
            std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) {
              return g.divides(candidate);
            });
        if (!divisible) ++count;
      }
    }
  }
  return count;
}

std::array<Int, 4> betti_signature(Int q) {
  switch (q) {
    case 0: return {1, 3, 3, 1};
    case 1:
    case 2: return {1, 5, 6, 2};
    case 3: return {1, 4, 5, 2};
    case 4:
    case 5: return {1, 4, 6, 3};
    default:
      throw std::invalid_argument("numsem: betti_signature needs 0 <= q <= 5");
  }
}

namespace {

Polynomial Z() { return Polynomial{}; }

// -x2^3 + x1^3 x3 and -x3^2 + x1^2 x4, the two leading relations in the
// sign convention of the resolution maps.
Polynomial neg_f_a() { return pterm(-1, 0, 3, 0, 0) + pterm(1, 3, 0, 1, 0); }
Polynomial neg_f_b() { return pterm(-1, 0, 0, 2, 0) + pterm(1, 2, 0, 0, 1); }

ResolutionMatrices koszul_q0(Int m, Int d) {
  const Polynomial f1 = neg_f_a();
  const Polynomial f2 = neg_f_b();
  const Polynomial f3 = pterm(1, 4 * m + d, 0, 0, 0) - pterm(1, 0, 0, 0, m);
  ResolutionMatrices out;
  out.phi1 = from_rows({{f1, f2, f3}});
  out.phi2 = from_rows({
      {Z() - f2, Z() - f3, Z()},
      {f1, Z(), Z() - f3},
      {Z(), f1, f2},
  });
  out.phi3 = from_rows({{f3}, {Z() - f2}, {f1}});
  return out;
}

ResolutionMatrices res_q1_m1d1() {
  const Polynomial f1 = neg_f_a();
  const Polynomial f2 = neg_f_b();
  const Polynomial f3 = pterm(1, 7, 0, 0, 0) - pterm(1, 0, 1, 0, 1);
  const Polynomial f4 = pterm(1, 4, 2, 0, 0) - pterm(1, 0, 0, 1, 1);
  const Polynomial f5 = pterm(1, 2, 2, 1, 0) - pterm(1, 0, 0, 0, 2);
  ResolutionMatrices out;
  out.phi1 = from_rows({{f1, f2, f3, f4, f5}});
  out.phi2 = from_rows({
      {pterm(1, 4, 0, 0, 0), pterm(1, 0, 0, 0, 1), Z(), pterm(1, 2, 0, 1, 0),
       Z(), pterm(1, 0, 0, 2, 0)},
      {Z(), Z(), pterm(1, 0, 0, 0, 1), pterm(1, 5, 0, 0, 0),
       pterm(1, 2, 2, 0, 0), pterm(1, 3, 0, 1, 0) - pterm(1, 0, 3, 0, 0)},
      {pterm(-1, 0, 0, 1, 0), pterm(-1, 0, 2, 0, 0), Z(), pterm(-1, 0, 0, 0, 1),
       Z(), pterm(-1, 2, 2, 0, 0)},
      {pterm(1, 0, 1, 0, 0), pterm(1, 3, 0, 0, 0), pterm(-1, 0, 0, 1, 0), Z(),
       pterm(-1, 0, 0, 0, 1), pterm(1, 5, 0, 0, 0)},
      {Z(), Z(), pterm(1, 2, 0, 0, 0), pterm(1, 0, 1, 0, 0),
       pterm(1, 0, 0, 1, 0), Z()},
  });
  out.phi3 = from_rows({
      {pterm(1, 0, 0, 0, 1), pterm(1, 0, 2, 1, 0)},
      {pterm(-1, 4, 0, 0, 0), pterm(-1, 0, 0, 2, 0)},
      {Z(), pterm(-1, 3, 0, 1, 0) + pterm(1, 0, 3, 0, 0)},
      {pterm(-1, 0, 0, 1, 0), pterm(-1, 2, 2, 0, 0)},
      {pterm(1, 0, 1, 0, 0), pterm(1, 5, 0, 0, 0)},
      {pterm(1, 2, 0, 0, 0), pterm(1, 0, 0, 0, 1)},
  });
  return out;
}

ResolutionMatrices res_q1(Int m, Int d) {
  const Polynomial f1 = neg_f_a();
  const Polynomial f2 = neg_f_b();
  const Polynomial f3 = pterm(1, 4 * m + d + 2, 0, 0, 0) - pterm(1, 0, 1, 0, m);
  const Polynomial f4 = pterm(1, 4 * m + d - 1, 2, 0, 0) - pterm(1, 0, 0, 1, m);
  const Polynomial f5 = pterm(1, 4 * m + d - 6, 5, 0, 0) - pterm(1, 0, 0, 0, m + 1);
  ResolutionMatrices out;
  out.phi1 = from_rows({{f1, f2, f3, f4, f5}});
  // The row-3 entry in column 3 is -x2^2; the source prints -x2, which does
  // not annihilate phi1.
  out.phi2 = from_rows({
      {f2, pterm(1, 4 * m + d - 1, 0, 0, 0), pterm(1, 0, 0, 0, m),
       pterm(1, 4 * m + d - 4, 2, 0, 0),
       pterm(1, 4 * m + d - 3, 0, 1, 0) + pterm(1, 4 * m + d - 6, 3, 0, 0),
       pterm(1, 4 * m + d - 6, 2, 1, 0)},
      {f1, Z(), Z(), pterm(1, 0, 0, 0, m), pterm(1, 4 * m + d, 0, 0, 0),
       pterm(1, 4 * m + d - 3, 2, 0, 0)},
      {Z(), pterm(-1, 0, 0, 1, 0), pterm(-1, 0, 2, 0, 0), Z(),
       pterm(-1, 0, 0, 0, 1), Z()},
      {Z(), pterm(1, 0, 1, 0, 0), pterm(1, 3, 0, 0, 0), pterm(-1, 0, 0, 1, 0),
       Z(), pterm(-1, 0, 0, 0, 1)},
      {Z(), Z(), Z(), pterm(1, 2, 0, 0, 0), pterm(1, 0, 1, 0, 0),
       pterm(1, 0, 0, 1, 0)},
  });
  out.phi3 = from_rows({
      {pterm(1, 4 * m + d - 3, 0, 0, 0), pterm(1, 0, 0, 0, m)},
      {pterm(-1, 0, 0, 0, 1), pterm(-1, 0, 2, 1, 0)},
      {Z(), pterm(-1, 2, 0, 0, 1) + pterm(1, 0, 0, 2, 0)},
      {Z(), pterm(1, 3, 0, 1, 0) - pterm(1, 0, 3, 0, 0)},
      {pterm(1, 0, 0, 1, 0), pterm(1, 2, 2, 0, 0)},
      {pterm(-1, 0, 1, 0, 0), pterm(-1, 5, 0, 0, 0)},
  });
  return out;
}

ResolutionMatrices res_q2(Int m, Int d) {
  const Polynomial f1 = neg_f_a();
  const Polynomial f2 = neg_f_b();
  const Polynomial f3 = pterm(1, 4 * m + d + 1, 1, 0, 0) - pterm(1, 0, 0, 1, m);
  const Polynomial f4 = pterm(1, 4 * m + d + 4, 0, 0, 0) - pterm(1, 0, 2, 0, m);
  const Polynomial f5 = pterm(1, 4 * m + d - 4, 4, 0, 0) - pterm(1, 0, 0, 0, m + 1);
  ResolutionMatrices out;
  out.phi1 = from_rows({{f1, f2, f3, f4, f5}});
  // In column 6 the x2^3 term of the first row carries a plus sign; the
  // printed minus breaks both products.
  out.phi2 = from_rows({
      {f2, pterm(1, 0, 0, 0, m), pterm(1, 4 * m + d - 2, 1, 0, 0),
       pterm(1, 4 * m + d + 1, 0, 0, 0), pterm(1, 4 * m + d - 4, 1, 1, 0),
       pterm(1, 4 * m + d - 1, 0, 1, 0) + pterm(1, 4 * m + d - 4, 3, 0, 0)},
      {f1, Z(), pterm(1, 0, 0, 0, m), Z(), pterm(1, 4 * m + d - 1, 1, 0, 0),
       pterm(1, 4 * m + d + 2, 0, 0, 0)},
      {Z(), pterm(1, 3, 0, 0, 0), pterm(-1, 0, 0, 1, 0), pterm(1, 0, 2, 0, 0),
       pterm(-1, 0, 0, 0, 1), Z()},
      {Z(), pterm(-1, 0, 1, 0, 0), Z(), pterm(-1, 0, 0, 1, 0), Z(),
       pterm(-1, 0, 0, 0, 1)},
      {Z(), Z(), pterm(1, 2, 0, 0, 0), Z(), pterm(1, 0, 0, 1, 0),
       pterm(1, 0, 2, 0, 0)},
  });
  out.phi3 = from_rows({
      {pterm(1, 4 * m + d - 1, 0, 0, 0), pterm(1, 0, 0, 0, m)},
      {Z(), pterm(-1, 2, 0, 0, 1) + pterm(1, 0, 0, 2, 0)},
      {Z(), pterm(1, 3, 0, 1, 0) - pterm(1, 0, 3, 0, 0)},
      {pterm(-1, 0, 0, 0, 1), pterm(-1, 0, 1, 1, 0)},
      {pterm(-1, 0, 2, 0, 0), pterm(-1, 5, 0, 0, 0)},
      {pterm(1, 0, 0, 1, 0), pterm(1, 2, 1, 0, 0)},
  });
  return out;
}

ResolutionMatrices res_q3(Int m, Int d) {
  const Polynomial f1 = neg_f_a();
  const Polynomial f2 = neg_f_b();
  const Polynomial f3 = pterm(1, 4 * m + d + 3, 0, 0, 0) - pterm(1, 0, 0, 1, m);
  const Polynomial f4 = pterm(1, 4 * m + d - 2, 3, 0, 0) - pterm(1, 0, 0, 0, m + 1);
  ResolutionMatrices out;
  out.phi1 = from_rows({{f1, f2, f3, f4}});
  out.phi2 = from_rows({
      {f2, pterm(1, 4 * m + d, 0, 0, 0), pterm(1, 0, 0, 1, m),
       pterm(1, 4 * m + d - 2, 0, 1, 0), f4},
      {f1, pterm(1, 0, 0, 0, m), pterm(1, 3, 0, 0, m),
       pterm(1, 4 * m + d + 1, 0, 0, 0), Z()},
      {Z(), pterm(-1, 0, 0, 1, 0), pterm(-1, 0, 3, 0, 0), pterm(-1, 0, 0, 0, 1),
       Z()},
      {Z(), pterm(1, 2, 0, 0, 0), pterm(1, 5, 0, 0, 0), pterm(1, 0, 0, 1, 0),
       f1},
  });
  out.phi3 = from_rows({
      {pterm(1, 0, 0, 0, m), pterm(1, 4 * m + d + 1, 0, 0, 0)},
      {pterm(-1, 0, 3, 0, 0), pterm(-1, 3, 0, 0, 1)},
      {pterm(1, 0, 0, 1, 0), pterm(1, 0, 0, 0, 1)},
      {Z(), pterm(1, 3, 0, 1, 0) - pterm(1, 0, 3, 0, 0)},
      {pterm(1, 2, 0, 0, 0), pterm(1, 0, 0, 1, 0)},
  });
  return out;
}

ResolutionMatrices res_q4(Int m, Int d) {
  const Polynomial f1 = neg_f_a();
  const Polynomial f2 = neg_f_b();
  const Polynomial f3 = pterm(1, 4 * m + d + 5, 0, 0, 0) - pterm(1, 0, 1, 1, m);
  const Polynomial f4 = pterm(1, 4 * m + d, 2, 0, 0) - pterm(1, 0, 0, 0, m + 1);
  ResolutionMatrices out;
  out.phi1 = from_rows({{f1, f2, f3, f4}});
  out.phi2 = from_rows({
      {f2, pterm(1, 4 * m + d + 2, 0, 0, 0), pterm(1, 0, 0, 1, m),
       pterm(1, 4 * m + d, 0, 1, 0), f4, Z()},
      {f1, pterm(1, 0, 1, 0, m), pterm(1, 3, 0, 0, m),
       pterm(1, 4 * m + d + 3, 0, 0, 0), Z(), f4},
      {Z(), pterm(-1, 0, 0, 1, 0), pterm(-1, 0, 2, 0, 0), pterm(-1, 0, 0, 0, 1),
       Z(), Z()},
      {Z(), pterm(1, 2, 1, 0, 0), pterm(1, 5, 0, 0, 0), pterm(1, 0, 1, 1, 0),
       f1, f2},
  });
  out.phi3 = from_rows({
      {pterm(1, 0, 0, 0, m), Z(), pterm(1, 4 * m + d, 0, 0, 0)},
      {pterm(-1, 0, 2, 0, 0), Z(), pterm(-1, 0, 0, 0, 1)},
      {pterm(1, 0, 0, 1, 0), pterm(1, 0, 0, 0, 1), Z()},
      {Z(), pterm(-1, 0, 2, 0, 0), pterm(1, 0, 0, 1, 0)},
      {pterm(1, 2, 0, 0, 0), pterm(1, 0, 0, 1, 0), Z()},
      {Z(), pterm(1, 3, 0, 0, 0), pterm(-1, 0, 1, 0, 0)},
  });
  return out;
}

ResolutionMatrices res_q5(Int m, Int d) {
  const Polynomial f1 = neg_f_a();
  const Polynomial f2 = neg_f_b();
  const Polynomial f3 = pterm(1, 4 * m + d + 2, 1, 0, 0) - pterm(1, 0, 0, 0, m + 1);
  const Polynomial f4 = pterm(1, 4 * m + d + 7, 0, 0, 0) - pterm(1, 0, 2, 1, m);
  ResolutionMatrices out;
  out.phi1 = from_rows({{f1, f2, f3, f4}});
  out.phi2 = from_rows({
      {f2, pterm(1, 0, 0, 1, m), pterm(1, 4 * m + d + 4, 0, 0, 0), f3, Z(),
       pterm(1, 4 * m + d + 2, 0, 1, 0)},
      {f1, pterm(1, 3, 0, 0, m), pterm(1, 0, 2, 0, m), Z(), f3,
       pterm(1, 4 * m + d + 5, 0, 0, 0)},
      {Z(), pterm(1, 5, 0, 0, 0), pterm(1, 2, 2, 0, 0), f1, f2,
       pterm(1, 0, 2, 1, 0)},
      {Z(), pterm(-1, 0, 1, 0, 0), pterm(-1, 0, 0, 1, 0), Z(), Z(),
       pterm(-1, 0, 0, 0, 1)},
  });
  out.phi3 = from_rows({
      {pterm(1, 0, 0, 0, m), Z(), pterm(1, 4 * m + d + 2, 0, 0, 0)},
      {pterm(1, 0, 0, 1, 0), pterm(1, 0, 0, 0, 1), Z()},
      {pterm(-1, 0, 1, 0, 0), Z(), pterm(-1, 0, 0, 0, 1)},
      {pterm(1, 2, 0, 0, 0), pterm(1, 0, 0, 1, 0), Z()},
      {Z(), pterm(1, 3, 0, 0, 0), pterm(-1, 0, 2, 0, 0)},
      {Z(), pterm(-1, 0, 1, 0, 0), pterm(1, 0, 0, 1, 0)},
  });
  return out;
}

}  // namespace

ResolutionMatrices resolution_matrices(const Gamma4Params& p) {
  const Int m = p.m();
  const Int d = p.d;
  switch (p.q()) {
    case 0: return koszul_q0(m, d);
    case 1: return (m == 1 && d == 1) ? res_q1_m1d1() : res_q1(m, d);
    case 2: return res_q2(m, d);
    case 3: return res_q3(m, d);
    case 4: return res_q4(m, d);
    default: return res_q5(m, d);
  }
}

namespace {

// Column degrees of `mat` given row degrees; entries must be homogeneous and
// consistent along each column.
std::vector<std::optional<Int>> column_degrees(
    const PolyMatrix& mat, const std::vector<std::optional<Int>>& row_degs,
    const WeightVector& w, const std::string& name, ComplexReport& report) {
  std::vector<std::optional<Int>> out(mat.cols());
  for (std::size_t j = 0; j < mat.cols(); ++j) {
    for (std::size_t i = 0; i < mat.rows(); ++i) {
      const Polynomial& entry = mat.at(i, j);
      if (entry.is_zero()) continue;
      const auto deg = homogeneous_degree(entry, w);
      if (!deg) {
        report.graded = false;
        report.issues.push_back({name, i, j, "entry mixes weighted degrees"});
        continue;
      }
      if (!row_degs[i]) continue;
      const Int total = *deg + *row_degs[i];
      if (!out[j]) {
        out[j] = total;
      } else if (*out[j] != total) {
        report.graded = false;
        report.issues.push_back({name, i, j, "column degree inconsistent"});
      }
    }
    if (!out[j]) {
      report.graded = false;
      report.issues.push_back({name, 0, j, "column is identically zero"});
    }
  }
  return out;
}

void check_product(const PolyMatrix& a, const PolyMatrix& b,
                   const std::string& name, ComplexReport& report) {
  const PolyMatrix prod = a * b;
  for (std::size_t i = 0; i < prod.rows(); ++i) {
    for (std::size_t j = 0; j < prod.cols(); ++j) {
      if (!prod.at(i, j).is_zero()) {
        report.products_vanish = false;
        report.issues.push_back({name, i, j, "product entry is nonzero"});
      }
    }
  }
}

void check_constants(const PolyMatrix& mat, const std::string& name,
                     ComplexReport& report) {
  for (std::size_t i = 0; i < mat.rows(); ++i) {
    for (std::size_t j = 0; j < mat.cols(); ++j) {
      if (mat.at(i, j).constant_term() != 0) {
        report.no_constant_entries = false;
        report.issues.push_back({name, i, j, "entry has a constant term"});
      }
    }
  }
}

}  // namespace

ComplexReport verify_complex(const PolyMatrix& phi1, const PolyMatrix& phi2,
                             const PolyMatrix& phi3, const WeightVector& w) {
  ComplexReport report;
  check_product(phi1, phi2, "phi1*phi2", report);
  check_product(phi2, phi3, "phi2*phi3", report);
  check_constants(phi1, "phi1", report);
  check_constants(phi2, "phi2", report);
  check_constants(phi3, "phi3", report);
  std::vector<std::optional<Int>> degs(1, Int{0});
  degs = column_degrees(phi1, degs, w, "phi1", report);
  degs = column_degrees(phi2, degs, w, "phi2", report);
  column_degrees(phi3, degs, w, "phi3", report);
  return report;
}

ComplexReport verify_resolution(const Gamma4Params& p) {
  const ResolutionMatrices res = resolution_matrices(p);
  const auto gens = gamma4_generators(p);
  const WeightVector w{gens[0], gens[1], gens[2], gens[3]};
  ComplexReport report = verify_complex(res.phi1, res.phi2, res.phi3, w);
  const auto sig = betti_signature(p.q());
  if (res.phi1.rows() != 1 ||
      static_cast<Int>(res.phi1.cols()) != sig[1] ||
      static_cast<Int>(res.phi2.rows()) != sig[1] ||
      static_cast<Int>(res.phi2.cols()) != sig[2] ||
      static_cast<Int>(res.phi3.rows()) != sig[2] ||
      static_cast<Int>(res.phi3.cols()) != sig[3]) {
    report.ranks_match = false;
    report.issues.push_back({"signature", 0, 0, "ranks differ from case table"});
  }
  return report;
}

IdealCrossCheck cross_check_betti(const Gamma4Params& p) {
  IdealCrossCheck out;
  const auto gens = gamma4_generators(p);
  const WeightVector w{gens[0], gens[1], gens[2], gens[3]};
  const auto hq = hq_generators(p);

  for (const Binomial& b : hq) {
    if (!is_homogeneous(b, w)) out.homogeneous = false;
    out.hq_degrees[weighted_degree(b.plus, w)] += 1;
  }

  out.standard_monomials = standard_monomial_count(set_x1_zero(hq));
  out.gastinger = out.standard_monomials == p.a;

  out.oracle_degrees = betti_degrees(gamma4_semigroup(p));
  out.degrees_match = out.hq_degrees == out.oracle_degrees;

  out.count_matches =
      static_cast<Int>(hq.size()) == betti_signature(p.q())[1];
  return out;
}

}  // namespace numsem
