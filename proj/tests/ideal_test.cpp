#include "numsem/ideal.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

#include "doctest.h"

using namespace numsem;

namespace {

Monomial mono(Int e1, Int e2, Int e3, Int e4) {
  return Monomial{{e1, e2, e3, e4}};
}

Polynomial random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<Int> coeff(-5, 5);
  std::uniform_int_distribution<Int> expo(0, 4);
  std::uniform_int_distribution<int> nterms(0, 5);
  Polynomial p;
  const int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    p += Polynomial::term(coeff(rng),
                          mono(expo(rng), expo(rng), expo(rng), expo(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic laws") {
  std::mt19937 rng(987654);
  for (int round = 0; round < 200; ++round) {
    const Polynomial p = random_poly(rng);
    const Polynomial q = random_poly(rng);
    const Polynomial r = random_poly(rng);
    CHECK(p + q == q + p);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK((p + q) * r == p * r + q * r);
    CHECK((p - p).is_zero());
    CHECK(p * Polynomial{} == Polynomial{});
  }
}

TEST_CASE("weighted degrees") {
  const WeightVector w{11, 46, 105, 188};
  CHECK(weighted_degree(mono(0, 0, 0, 2), w) == 376);
  CHECK(weighted_degree(mono(0, 0, 0, 0), w) == 0);
  CHECK(is_homogeneous(Binomial{mono(30, 1, 0, 0), mono(0, 0, 0, 2)}, w));
  CHECK_FALSE(is_homogeneous(Binomial{mono(1, 0, 0, 0), mono(0, 1, 0, 0)}, w));

  const Polynomial mixed = Polynomial::term(1, mono(1, 0, 0, 0)) +
                           Polynomial::term(1, mono(0, 1, 0, 0));
  CHECK_FALSE(homogeneous_degree(mixed, w).has_value());
  CHECK(homogeneous_degree(Polynomial::from_binomial(
                               Binomial{mono(30, 1, 0, 0), mono(0, 0, 0, 2)}),
                           w) == 376);
}

TEST_CASE("hq_generators") {
  // a = 11: q = 5, m = 1
  const auto h5 = hq_generators({11, 24});
  REQUIRE(h5.size() == 4);
  CHECK(h5[0] == Binomial{mono(0, 0, 2, 0), mono(2, 0, 0, 1)});
  CHECK(h5[1] == Binomial{mono(0, 3, 0, 0), mono(3, 0, 1, 0)});
  CHECK(h5[2] == Binomial{mono(30, 1, 0, 0), mono(0, 0, 0, 2)});
  CHECK(h5[3] == Binomial{mono(35, 0, 0, 0), mono(0, 2, 1, 1)});

  // a = 7, d = 1: the short q = 1 list
  const auto h1 = hq_generators({7, 1});
  REQUIRE(h1.size() == 5);
  CHECK(h1[2] == Binomial{mono(7, 0, 0, 0), mono(0, 1, 0, 1)});
  CHECK(h1[3] == Binomial{mono(4, 2, 0, 0), mono(0, 0, 1, 1)});
  CHECK(h1[4] == Binomial{mono(2, 2, 1, 0), mono(0, 0, 0, 2)});

  // a = 12, d = 1: q = 0, m = 2
  const auto h0 = hq_generators({12, 1});
  REQUIRE(h0.size() == 3);
  CHECK(h0[2] == Binomial{mono(9, 0, 0, 0), mono(0, 0, 0, 2)});

  // a = 7, d = 2: q = 1 long list with 4m+d-6 = 0
  const auto h12 = hq_generators({7, 2});
  REQUIRE(h12.size() == 5);
  CHECK(h12[2] == Binomial{mono(0, 5, 0, 0), mono(0, 0, 0, 2)});

  // every binomial is weighted-homogeneous in its own weights
  for (const Gamma4Params p :
       {Gamma4Params{12, 1}, {13, 2}, {14, 3}, {15, 2}, {16, 1}, {17, 2}}) {
    const auto gens = gamma4_generators(p);
    const WeightVector w{gens[0], gens[1], gens[2], gens[3]};
    for (const auto& b : hq_generators(p)) CHECK(is_homogeneous(b, w));
  }
}

TEST_CASE("set_x1_zero") {
  CHECK(set_x1_zero(hq_generators({12, 1})) ==
        std::vector<Monomial>{mono(0, 0, 2, 0), mono(0, 3, 0, 0),
                              mono(0, 0, 0, 2)});
  // q = 5, m = 1: {x3^2, x2^3, x4^2, x2^2 x3 x4}
  CHECK(set_x1_zero(hq_generators({11, 24})) ==
        std::vector<Monomial>{mono(0, 0, 2, 0), mono(0, 3, 0, 0),
                              mono(0, 0, 0, 2), mono(0, 2, 1, 1)});
  // q = 3, m = 1, d = 2: {x3^2, x2^3, x4^2, x3 x4}
  CHECK(set_x1_zero(hq_generators({9, 2})) ==
        std::vector<Monomial>{mono(0, 0, 2, 0), mono(0, 3, 0, 0),
                              mono(0, 0, 0, 2), mono(0, 0, 1, 1)});
  // 4m+d = 6: x2^5 - x4^2 survives intact; x2^5 reduces away via x2^3
  CHECK(set_x1_zero(hq_generators({7, 2})) ==
        std::vector<Monomial>{mono(0, 0, 2, 0), mono(0, 3, 0, 0),
                              mono(0, 0, 0, 2), mono(0, 0, 1, 1),
                              mono(0, 1, 0, 1)});

  CHECK_THROWS_AS(set_x1_zero({Binomial{mono(1, 1, 0, 0), mono(2, 0, 1, 0)}}),
                  std::invalid_argument);
}

TEST_CASE("standard_monomial_count") {
  CHECK(standard_monomial_count({mono(0, 0, 2, 0), mono(0, 3, 0, 0),
                                 mono(0, 0, 0, 2)}) == 12);
  CHECK(standard_monomial_count({mono(0, 0, 2, 0), mono(0, 3, 0, 0),
                                 mono(0, 0, 0, 2), mono(0, 2, 1, 1)}) == 11);
  CHECK(standard_monomial_count({mono(0, 1, 0, 0), mono(0, 0, 1, 0),
                                 mono(0, 0, 0, 1)}) == 1);
  CHECK_THROWS_AS(standard_monomial_count({mono(0, 3, 0, 0), mono(0, 0, 2, 0)}),
                  std::domain_error);
  CHECK_THROWS_AS(standard_monomial_count({mono(1, 0, 0, 0), mono(0, 1, 0, 0),
                                           mono(0, 0, 1, 0), mono(0, 0, 0, 1)}),
                  std::invalid_argument);
}

TEST_CASE("betti_signature") {
  CHECK(betti_signature(0) == std::array<Int, 4>{1, 3, 3, 1});
  CHECK(betti_signature(1) == std::array<Int, 4>{1, 5, 6, 2});
  CHECK(betti_signature(2) == std::array<Int, 4>{1, 5, 6, 2});
  CHECK(betti_signature(3) == std::array<Int, 4>{1, 4, 5, 2});
  CHECK(betti_signature(4) == std::array<Int, 4>{1, 4, 6, 3});
  CHECK(betti_signature(5) == std::array<Int, 4>{1, 4, 6, 3});
  CHECK_THROWS_AS(betti_signature(6), std::invalid_argument);
}

TEST_CASE("resolution matrices carry the case data") {
  const auto res71 = resolution_matrices({7, 1});
  CHECK(res71.phi1.cols() == 5);
  CHECK(res71.phi2.cols() == 6);
  CHECK(res71.phi3.cols() == 2);
  // f3 = x1^7 - x2 x4
  const Polynomial f3 = Polynomial::term(1, mono(7, 0, 0, 0)) -
                        Polynomial::term(1, mono(0, 1, 0, 1));
  CHECK(res71.phi1.at(0, 2) == f3);

  const auto res9 = resolution_matrices({9, 2});
  CHECK(res9.phi1.cols() == 4);
  CHECK(res9.phi2.cols() == 5);
  CHECK(res9.phi3.cols() == 2);

  const auto res16 = resolution_matrices({16, 1});
  CHECK(res16.phi2.cols() == 6);
  CHECK(res16.phi3.cols() == 3);
}

TEST_CASE("verify_resolution passes on representative instances") {
  for (const Gamma4Params p : {Gamma4Params{7, 1},  // q=1 short
                               {13, 2},             // q=1 long
                               {12, 1},             // q=0 Koszul
                               {14, 1},             // q=2
                               {9, 2},              // q=3
                               {16, 3},             // q=4
                               {11, 24}}) {         // q=5
    const ComplexReport report = verify_resolution(p);
    INFO("a=" << p.a << " d=" << p.d);
    CHECK(report.pass());
    CHECK(report.issues.empty());
  }
}

TEST_CASE("verify_complex flags corrupted matrices with a location") {
  const Gamma4Params p(12, 1);
  auto res = resolution_matrices(p);
  const auto gens = gamma4_generators(p);
  const WeightVector w{gens[0], gens[1], gens[2], gens[3]};

  // a stray constant breaks minimality and the product
  res.phi2.at(0, 0) += Polynomial::term(1, mono(0, 0, 0, 0));
  const ComplexReport report = verify_complex(res.phi1, res.phi2, res.phi3, w);
  CHECK_FALSE(report.pass());
  CHECK_FALSE(report.no_constant_entries);
  CHECK_FALSE(report.products_vanish);
  bool located = false;
  for (const auto& issue : report.issues) {
    if (issue.matrix == "phi2" && issue.row == 0 && issue.col == 0 &&
        issue.detail == "entry has a constant term") {
      located = true;
    }
  }
  CHECK(located);
}

TEST_CASE("cross_check_betti") {
  const auto cc71 = cross_check_betti({7, 1});
  CHECK(cc71.pass());
  CHECK(cc71.standard_monomials == 7);
  const std::map<Int, Int> deg71{{45, 1}, {48, 1}, {49, 1}, {58, 1}, {68, 1}};
  CHECK(cc71.hq_degrees == deg71);
  CHECK(cc71.oracle_degrees == deg71);

  const auto cc12 = cross_check_betti({12, 1});
  CHECK(cc12.pass());
  const std::map<Int, Int> deg12{{75, 1}, {78, 1}, {108, 1}};
  CHECK(cc12.hq_degrees == deg12);

  const auto cc11 = cross_check_betti({11, 24});
  CHECK(cc11.pass());
  CHECK(cc11.standard_monomials == 11);

  // one instance per residue class
  for (const Gamma4Params p :
       {Gamma4Params{12, 5}, {13, 1}, {14, 3}, {15, 4}, {16, 1}, {17, 3}, {7, 2}}) {
    INFO("a=" << p.a << " d=" << p.d);
    CHECK(cross_check_betti(p).pass());
  }
}
