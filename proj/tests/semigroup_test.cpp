#include "numsem/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "doctest.h"

using namespace numsem;

namespace {

NumericalSemigroup make(std::initializer_list<Int> gens) {
  return NumericalSemigroup(std::vector<Int>(gens));
}

// Naive membership scan, the test-side oracle for the shortest-path Apery
// computation. Returns the least element per residue class by walking 0..cap.
std::vector<Int> apery_by_scan(const NumericalSemigroup& s, Int a, Int cap) {
  std::vector<char> member(static_cast<std::size_t>(cap) + 1, 0);
  member[0] = 1;
  for (Int v = 1; v <= cap; ++v) {
    for (Int g : s.generators()) {
      if (g <= v && member[static_cast<std::size_t>(v - g)]) {
        member[static_cast<std::size_t>(v)] = 1;
        break;
      }
    }
  }
  std::vector<Int> out(static_cast<std::size_t>(a), -1);
  for (Int v = 0; v <= cap; ++v) {
    if (member[static_cast<std::size_t>(v)] && out[static_cast<std::size_t>(v % a)] < 0) {
      out[static_cast<std::size_t>(v % a)] = v;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("constructor enforces the generator invariants") {
  CHECK_THROWS_AS(make({2}), std::invalid_argument);
  CHECK_THROWS_AS(make({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(make({3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(make({2, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(make({4, 6}), std::invalid_argument);  // gcd 2
  CHECK(make({2, 3}).multiplicity() == 2);
  CHECK(make({11, 46, 105, 188}).embedding_dimension() == 4);
}

TEST_CASE("contains") {
  const auto s23 = make({2, 3});
  CHECK_FALSE(contains(s23, 1));
  CHECK(contains(s23, 0));
  CHECK(contains(make({11, 46, 105, 188}), 151));
  CHECK_FALSE(contains(make({7, 15, 24, 34}), 47));
  CHECK_THROWS_AS(contains(s23, -1), std::domain_error);
}

TEST_CASE("apery_set") {
  const auto ap23 = apery_set(make({2, 3}), 2);
  CHECK(ap23.elements == std::vector<Int>{0, 3});

  const auto ap11 = apery_set(make({11, 46, 105, 188}), 11);
  CHECK(ap11.elements ==
        std::vector<Int>{0, 188, 46, 234, 92, 280, 105, 293, 151, 339, 197});
  // listed by i*d mod a these are the omega values in index order
  const std::vector<Int> omega{0, 46, 92, 105, 151, 197, 188, 234, 280, 293, 339};
  for (Int i = 0; i < 11; ++i) {
    CHECK(ap11.elements[static_cast<std::size_t>((i * 24) % 11)] ==
          omega[static_cast<std::size_t>(i)]);
  }

  CHECK(apery_set(make({7, 15, 24, 34}), 7).elements ==
        std::vector<Int>{0, 15, 30, 24, 39, 54, 34});

  CHECK_THROWS_AS(apery_set(make({2, 3}), 1), std::domain_error);
  CHECK_THROWS_AS(apery_set(make({5, 7}), 11), std::domain_error);
  CHECK_THROWS_AS(apery_set(make({3, 5}), -2), std::domain_error);
}

TEST_CASE("apery_set rejects ranges that cannot fit in 64 bits") {
  const Int big = Int{1} << 62;
  const auto s = NumericalSemigroup({big, big + 1});
  CHECK_THROWS_AS(apery_set(s, big), std::overflow_error);
}

TEST_CASE("frobenius") {
  CHECK(frobenius(make({2, 3})) == 1);
  CHECK(frobenius(make({11, 46, 105, 188})) == 328);
  CHECK(frobenius(make({7, 15, 24, 34})) == 47);
}

TEST_CASE("pseudo_frobenius") {
  CHECK(pseudo_frobenius(make({2, 3})) == std::vector<Int>{1});
  CHECK(pseudo_frobenius(make({7, 15, 24, 34})) == std::vector<Int>{27, 47});
  CHECK(pseudo_frobenius(make({11, 46, 105, 188})) ==
        std::vector<Int>{186, 269, 328});
}

TEST_CASE("is_minimal_generating") {
  CHECK_FALSE(is_minimal_generating(make({2, 3, 4})));
  CHECK(is_minimal_generating(make({11, 46, 105, 188})));
  CHECK(is_minimal_generating(make({7, 15, 24, 34})));

  const auto witness = minimality_witness(make({2, 3, 4}));
  REQUIRE(witness.has_value());
  CHECK(witness->generator_index == 2);
  CHECK(witness->expression == std::vector<Int>{2, 0});
}

TEST_CASE("factorizations") {
  const auto zero = factorizations(make({7, 15, 24, 34}), 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero.front().exponents == std::vector<Int>{0, 0, 0, 0});
  CHECK(zero.front().length() == 0);

  // ordering: descending in the last generator's exponent
  const auto f6 = factorizations(make({2, 3}), 6);
  REQUIRE(f6.size() == 2);
  CHECK(f6[0].exponents == std::vector<Int>{0, 2});
  CHECK(f6[1].exponents == std::vector<Int>{3, 0});

  const auto f54 = factorizations(make({7, 15, 24, 34}), 54);
  REQUIRE(f54.size() == 1);
  CHECK(f54.front().exponents == std::vector<Int>{0, 2, 1, 0});
  CHECK(f54.front().length() == 3);

  CHECK(factorizations(make({7, 15, 24, 34}), 47).empty());
}

TEST_CASE("max_factorization_length") {
  CHECK(max_factorization_length(make({2, 3}), 0) == 0);
  CHECK(max_factorization_length(make({11, 46, 105, 188}), 92) == 2);
  CHECK(max_factorization_length(make({7, 15, 24, 34}), 54) == 3);
  CHECK_FALSE(max_factorization_length(make({7, 15, 24, 34}), 47).has_value());
  CHECK_FALSE(max_factorization_length(make({2, 3}), -5).has_value());
}

TEST_CASE("apery_table worked instances") {
  const auto t23 = apery_table(make({2, 3}));
  CHECK(t23.rows == std::vector<std::vector<Int>>{{0, 3}, {2, 3}});
  CHECK(t23.reduction_number() == 1);

  const auto t7 = apery_table(make({7, 15, 24, 34}));
  CHECK(t7.rows == std::vector<std::vector<Int>>{{0, 15, 30, 24, 39, 54, 34},
                                                 {7, 15, 30, 24, 39, 54, 34},
                                                 {14, 22, 30, 31, 39, 54, 41},
                                                 {21, 29, 37, 38, 46, 54, 48}});
  CHECK(t7.reduction_number() == 3);

  const auto t11 = apery_table(make({11, 46, 105, 188}));
  CHECK(t11.reduction_number() == 3);
  CHECK(t11.rows[0] ==
        std::vector<Int>{0, 188, 46, 234, 92, 280, 105, 293, 151, 339, 197});
  CHECK(t11.rows[3] ==
        std::vector<Int>{33, 210, 68, 245, 103, 280, 127, 304, 162, 339, 197});
}

TEST_CASE("betti_degrees") {
  const std::map<Int, Int> expect23{{6, 1}};
  CHECK(betti_degrees(make({2, 3})) == expect23);

  const std::map<Int, Int> expect7{{45, 1}, {48, 1}, {49, 1}, {58, 1}, {68, 1}};
  CHECK(betti_degrees(make({7, 15, 24, 34})) == expect7);

  const std::map<Int, Int> expect12{{75, 1}, {78, 1}, {108, 1}};
  CHECK(betti_degrees(make({12, 25, 39, 54})) == expect12);

  CHECK_THROWS_AS(betti_degrees(make({7, 15, 24, 34}), 10), std::domain_error);
  // widening the window must not add degrees
  CHECK(betti_degrees(make({7, 15, 24, 34}), 400) == expect7);
}

TEST_CASE("oracle invariants on random semigroups") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<Int> gen_count(2, 4);
  std::uniform_int_distribution<Int> gen_value(2, 60);

  int tested = 0;
  while (tested < 60) {
    std::vector<Int> gens;
    const Int n = gen_count(rng);
    for (Int k = 0; k < n; ++k) gens.push_back(gen_value(rng));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.size() < 2 || gens.front() < 2) continue;
    Int g = 0;
    for (Int v : gens) g = std::gcd(g, v);
    if (g != 1) continue;
    ++tested;

    const NumericalSemigroup s(gens);
    const Int a = s.multiplicity();
    const AperySet ap = apery_set(s, a);
    const Int frob = frobenius(s);

    // shortest-path result equals the naive scan
    CHECK(ap.elements == apery_by_scan(s, a, ap.max_element()));

    // defining property of Apery elements
    for (Int w : ap.elements) {
      CHECK(contains(s, w));
      if (w >= a) CHECK_FALSE(contains(s, w - a));
    }

    // frobenius is the last non-member
    Int last_gap = -1;
    for (Int x = 0; x <= ap.max_element(); ++x) {
      if (!contains(s, x)) last_gap = x;
    }
    CHECK(frob == last_gap);

    // pseudo-Frobenius property
    for (Int x : pseudo_frobenius(s)) {
      CHECK_FALSE(contains(s, x));
      for (Int gv : gens) CHECK(contains(s, x + gv));
    }

    // Apery table structure
    const AperyTable table = apery_table(s);
    const Int R = table.reduction_number();
    CHECK(R >= 1);
    for (Int r = 0; r < a; ++r) {
      CHECK(table.rows[0][static_cast<std::size_t>(r)] ==
            ap.elements[static_cast<std::size_t>(r)]);
      for (Int row = 0; row + 1 <= R; ++row) {
        const Int lo = table.rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(r)];
        const Int hi = table.rows[static_cast<std::size_t>(row) + 1][static_cast<std::size_t>(r)];
        CHECK((hi == lo || hi == lo + a));
      }
      CHECK(table.rows[static_cast<std::size_t>(R)][static_cast<std::size_t>(r)] ==
            table.rows[static_cast<std::size_t>(R - 1)][static_cast<std::size_t>(r)] + a);
    }
    for (Int row = 0; row <= R; ++row) {
      CHECK(table.rows[static_cast<std::size_t>(row)][0] == row * a);
      if (row >= 1) {
        for (Int r = 0; r < a; ++r) {
          const Int entry = table.rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(r)];
          CHECK(max_factorization_length(s, entry).value() >= row);
        }
      }
    }
    // row 1 equals row 0 except at residue 0
    for (Int r = 1; r < a; ++r) {
      CHECK(table.rows[1][static_cast<std::size_t>(r)] ==
            table.rows[0][static_cast<std::size_t>(r)]);
    }
    CHECK(table.rows[1][0] == a);

    // every factorization reproduces its element, lengths are consistent
    const Int probe = ap.max_element();
    Int best = -1;
    for (const Factorization& f : factorizations(s, probe)) {
      Int value = 0;
      for (std::size_t k = 0; k < gens.size(); ++k) {
        value += f.exponents[k] * gens[k];
      }
      CHECK(value == probe);
      best = std::max(best, f.length());
    }
    CHECK(best == max_factorization_length(s, probe).value());
  }
}
