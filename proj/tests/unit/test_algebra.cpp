#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "zh/arrow_polynomial.hpp"
#include "zh/group_ring.hpp"
#include "zh/mod_matrix.hpp"

using namespace zh;

TEST_CASE("arrow polynomial arithmetic") {
  ArrowPolynomial d = ArrowPolynomial::loop_value();
  CHECK(d.to_string() == "-A^2 - A^-2");
  ArrowPolynomial sq = d * d;
  CHECK(sq.to_string() == "A^4 + 2 + A^-4");
  CHECK((d - d).is_zero());
  ArrowPolynomial k = ArrowPolynomial::k_var(1) * ArrowPolynomial::k_var(1) * ArrowPolynomial::k_var(2);
  CHECK(k.to_string() == "K1^2*K2");
  CHECK(k.to_string('Z') == "Z1^2*Z2");
  CHECK(k.terms().begin()->first.k_degree() == 4);
  CHECK(ArrowPolynomial::a_power(3, 2).inverted_a() == ArrowPolynomial::a_power(-3, 2));
  CHECK(ArrowPolynomial::a_power(1).shifted(2) == ArrowPolynomial::a_power(3));
}

TEST_CASE("arrow polynomial text round trip") {
  for (const char* text : {"A^2 + K1 - A^-4*K1", "1", "-A^5 - A^-3 + A^-7", "A^-4 + A^-6*K1^2*K3 - A^-10*K1"}) {
    ArrowPolynomial p = parse_arrow_polynomial(text);
    CHECK(p.to_string() == text);
  }
}

TEST_CASE("normalization multiplies by (-A^3)^-w") {
  ArrowPolynomial p = parse_arrow_polynomial("A^2 + K1 - A^-4*K1");
  CHECK(normalize(p, 2).to_string() == "A^-4 + A^-6*K1 - A^-10*K1");
  CHECK(normalize(p, -1) == p.shifted(3).scaled(-1));
}

TEST_CASE("group ring over infinite and finite cyclic groups") {
  GroupRingElement x;
  x.add(0, 14);
  x.add(1, 2);
  CHECK(x.to_string() == "14 + 2u");
  CHECK(x.augmentation() == 16);
  GroupRingElement y(CyclicGroup::finite(2));
  y.add(3, 1);
  y.add(1, 1);
  CHECK(y.coefficient(1) == 2);
  GroupRingElement z;
  z.add(-2, 1);
  CHECK(z.to_string() == "u^-2");
  CHECK((x * z).to_string() == "14u^-2 + 2u^-1");
}

TEST_CASE("nullity of the published 6x7 relation matrix over Z7") {
  ModMatrix m({{0, 0, 3, 6, 5, 0, 0},
               {3, 5, 6, 0, 0, 0, 0},
               {6, 0, 0, 0, 3, 0, 5},
               {0, 6, 0, 0, 0, 3, 5},
               {0, 6, 0, 3, 0, 0, 5},
               {0, 0, 0, 0, 3, 6, 5}},
              7, 7);
  CHECK(nullity_mod_prime(m, 7) == 1);
  CHECK(solution_count_mod_n(m, 7) == 7);
  CHECK_THROWS_AS(nullity_mod_prime(m.with_modulus(4), 4), NonPrimeModulus);
}

TEST_CASE("solution counts modulo composite n agree with enumeration") {
  std::mt19937_64 rng(3);
  for (int n : {2, 3, 4, 6, 8, 9, 12}) {
    for (int trial = 0; trial < 25; ++trial) {
      int rows = 1 + static_cast<int>(rng() % 4), cols = 1 + static_cast<int>(rng() % 4);
      ModMatrix m(rows, cols, n);
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.set(r, c, static_cast<std::int64_t>(rng() % n));
      CHECK(solution_count_mod_n(m, n) == oracle::brute_force_solutions(m, n));
    }
  }
}
