#include <doctest.h>

#include <random>

#include "trophull/errors.hpp"
#include "trophull/tropical.hpp"

#include "test_util.hpp"

using namespace trop;
using testutil::matrix_from_ints;

TEST_CASE("tropical sum and product") {
  CHECK(trop_add(Rat(3), Rat(5)) == Rat(3));
  CHECK(trop_add(Rat(0), Rat(0)) == Rat(0));
  CHECK(trop_add(Rat(-1) / 2, Rat(1) / 3) == Rat(-1) / 2);
  CHECK(trop_mul(Rat(3), Rat(5)) == Rat(8));
  CHECK(trop_mul(Rat(7), Rat(0)) == Rat(7));
  CHECK(trop_mul(Rat(1) / 2, Rat(-1) / 2) == Rat(0));
}

TEST_CASE("semiring laws on random rationals") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Rat a = testutil::random_rat(rng);
    const Rat b = testutil::random_rat(rng);
    const Rat c = testutil::random_rat(rng);
    CHECK(trop_add(a, b) == trop_add(b, a));
    CHECK(trop_add(trop_add(a, b), c) == trop_add(a, trop_add(b, c)));
    CHECK(trop_add(a, a) == a);
    CHECK(trop_mul(trop_add(a, b), c) == trop_add(trop_mul(a, c), trop_mul(b, c)));
  }
}

TEST_CASE("tropical combinations") {
  const PointTP single = trop_combination({PointTP({Rat(0), Rat(3), Rat(4)})}, {Rat(5)});
  CHECK(single == PointTP({Rat(0), Rat(3), Rat(4)}));

  const PointTP two = trop_combination(
      {PointTP({Rat(0), Rat(3), Rat(4)}), PointTP({Rat(0), Rat(5), Rat(2)})},
      {Rat(0), Rat(0)});
  CHECK(two == PointTP({Rat(0), Rat(3), Rat(2)}));

  const PointTP shifted = trop_combination(
      {PointTP({Rat(0), Rat(0)}), PointTP({Rat(0), Rat(1)})}, {Rat(0), Rat(-2)});
  CHECK(shifted == PointTP({Rat(0), Rat(1)}));

  CHECK_THROWS_AS(trop_combination({PointTP({Rat(0), Rat(1)})}, {Rat(0), Rat(1)}), InputError);
  CHECK_THROWS_AS(
      trop_combination({PointTP({Rat(0), Rat(1)}), PointTP({Rat(0), Rat(1), Rat(2)})},
                       {Rat(0), Rat(0)}),
      InputError);
}

TEST_CASE("tropical determinants") {
  const TDetResult unique = trop_det(matrix_from_ints({{0, 1}, {1, 0}}));
  CHECK(unique.value == Rat(0));
  CHECK(unique.multiplicity == 1);
  CHECK_FALSE(unique.singular());

  const TDetResult tied = trop_det(matrix_from_ints({{0, 0}, {0, 0}}));
  CHECK(tied.value == Rat(0));
  CHECK(tied.multiplicity == 2);
  CHECK(tied.singular());

  // Cyclic 3x3 block: the antidiagonal is the unique minimizer.
  const TDetResult cyc = trop_det(matrix_from_ints({{0, 0, 0}, {0, 1, 2}, {0, 2, 4}}));
  CHECK(cyc.value == Rat(1));
  CHECK(cyc.multiplicity == 1);

  CHECK_THROWS_AS(trop_det(matrix_from_ints({{0, 1, 2}, {3, 4, 5}})), InputError);
}

TEST_CASE("assignment path agrees with exhaustive scan") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 6);
    WeightMatrix m(k, k);
    // Small integer range on purpose: ties must be common.
    std::uniform_int_distribution<int> entry(0, 4);
    for (Rat& e : m.entries) e = entry(rng);
    const TDetResult a = trop_det_exhaustive(m);
    const TDetResult b = trop_det_assignment(m);
    CHECK(a.value == b.value);
    CHECK(a.multiplicity == b.multiplicity);
  }
  // Negative and fractional entries.
  for (int trial = 0; trial < 80; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 7);
    WeightMatrix m(k, k);
    std::uniform_int_distribution<long long> num(-6, 6);
    for (Rat& e : m.entries) e = Rat(num(rng)) / Rat(1 + static_cast<int>(rng() % 3));
    const TDetResult a = trop_det_exhaustive(m);
    const TDetResult b = trop_det_assignment(m);
    CHECK(a.value == b.value);
    CHECK(a.multiplicity == b.multiplicity);
  }
}

TEST_CASE("genericity of the four-point example") {
  CHECK(is_generic(testutil::ex4pt()).generic);
}

TEST_CASE("equal rows break genericity with a 2x2 witness") {
  const GenericityResult res =
      is_generic(matrix_from_ints({{0, 1, 2}, {0, 1, 2}, {0, 5, 1}}));
  REQUIRE_FALSE(res.generic);
  CHECK(res.witness_rows == std::vector<int>{0, 1});
  CHECK(res.witness_cols.size() == 2);
  CHECK_THROWS_AS(require_generic(matrix_from_ints({{0, 1}, {0, 1}})), GenericityError);
}

TEST_CASE("cyclic matrices are generic") {
  for (int r = 1; r <= 6; ++r) {
    for (int n = 2; n <= 6; ++n) {
      WeightMatrix v(r, n);
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < n; ++j) v.at(i, j) = Rat(i) * Rat(j);
      }
      CHECK(is_generic(v).generic);
    }
  }
}

TEST_CASE("genericity is projectively invariant and transposition-symmetric") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    WeightMatrix v(3, 4);
    for (Rat& e : v.entries) e = testutil::random_rat(rng);
    const bool verdict = is_generic(v).generic;

    WeightMatrix shifted = v;
    shifted.add_to_row(1, Rat(17) / 3);
    CHECK(is_generic(shifted).generic == verdict);
    CHECK(is_generic(v.transposed()).generic == verdict);
  }
}
