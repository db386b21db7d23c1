#include <doctest.h>

#include <algorithm>
#include <random>

#include "trophull/errors.hpp"
#include "trophull/ideal.hpp"

#include "test_util.hpp"

using namespace trop;
using testutil::ex4pt;
using testutil::matrix_from_ints;

namespace {

std::vector<std::string> labels_of(const MonomialIdeal& ideal) {
  std::vector<std::string> out;
  for (const SqfMonomial& g : ideal.generators) out.push_back(g.to_string());
  return out;
}

SqfMonomial mono(std::vector<Cell> cells) { return SqfMonomial(std::move(cells)); }

}  // namespace

TEST_CASE("dual generators of the example match the reference list") {
  const WeightMatrix v = ex4pt();
  const MonomialIdeal dual = dual_generators_from_vertices(enumerate_vertices(v), v.r, v.n);
  CHECK(labels_of(dual) == testutil::ex4pt_dual_labels());
  for (const SqfMonomial& g : dual.generators) CHECK(g.degree() == 6);
}

TEST_CASE("two generic points give two degree-1 dual generators") {
  const WeightMatrix v = matrix_from_ints({{0, 0}, {0, 1}});
  const MonomialIdeal dual = dual_generators_from_vertices(enumerate_vertices(v), v.r, v.n);
  REQUIRE(dual.generators.size() == 2);
  CHECK(dual.generators[0].degree() == 1);
  CHECK(dual.generators[1].degree() == 1);
}

TEST_CASE("one point gives the unit dual ideal") {
  const WeightMatrix v = matrix_from_ints({{0, 5}});
  const MonomialIdeal dual = dual_generators_from_vertices(enumerate_vertices(v), v.r, v.n);
  CHECK(dual.is_unit());
}

TEST_CASE("initial ideal of the example") {
  const WeightMatrix v = ex4pt();
  const MonomialIdeal ideal = initial_ideal(v);
  CHECK(ideal.generators.size() == 19);
  for (const auto& label : {"x_3_3*x_4_1", "x_2_3*x_4_1", "x_1_2*x_3_1", "x_1_3*x_2_1",
                            "x_1_2*x_2_1*x_3_3"}) {
    const auto names = labels_of(ideal);
    CHECK(std::find(names.begin(), names.end(), label) != names.end());
  }
}

TEST_CASE("degree-2 part of the initial ideal is exactly the minor initial forms") {
  std::mt19937_64 rng(404);
  for (const auto& [r, n] : std::vector<std::pair<int, int>>{{4, 3}, {3, 3}, {2, 4}}) {
    const WeightMatrix v = testutil::random_generic(r, n, rng);
    const MonomialIdeal ideal = initial_ideal(v);
    std::vector<SqfMonomial> quadratics;
    for (const SqfMonomial& g : ideal.generators) {
      if (g.degree() == 2) quadratics.push_back(g);
    }
    CHECK(quadratics == minor_initial_forms(v));
    // No degree-1 generators exist: every variable is shaded somewhere.
    for (const SqfMonomial& g : ideal.generators) CHECK(g.degree() >= 2);
  }
}

TEST_CASE("minor initial forms pick the heavier term") {
  const WeightMatrix v = ex4pt();
  const auto forms = minor_initial_forms(v);
  // Rows {3,4}, columns {1,3}: weights -1 vs 1 pick x_33 x_41.
  CHECK(std::find(forms.begin(), forms.end(), mono({{2, 2}, {3, 0}})) != forms.end());

  const auto small = minor_initial_forms(matrix_from_ints({{0, 0}, {0, 1}}));
  REQUIRE(small.size() == 1);
  CHECK(small[0] == mono({{0, 0}, {1, 1}}));

  CHECK_THROWS_AS(minor_initial_forms(matrix_from_ints({{0, 0}, {0, 0}})), GenericityError);
}

TEST_CASE("cyclic weights give the diagonal quadratics") {
  WeightMatrix v(3, 4);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 4; ++j) v.at(i, j) = Rat(i) * Rat(j);
  }
  const MonomialIdeal ideal = initial_ideal(v);
  std::vector<SqfMonomial> expected;
  for (int i = 0; i < 3; ++i) {
    for (int k = i + 1; k < 3; ++k) {
      for (int j = 0; j < 4; ++j) {
        for (int l = j + 1; l < 4; ++l) expected.push_back(mono({{i, j}, {k, l}}));
      }
    }
  }
  std::sort(expected.begin(), expected.end());
  CHECK(ideal.generators == expected);
}

TEST_CASE("Alexander duality on principal and degenerate ideals") {
  MonomialIdeal principal = MonomialIdeal::minimalized({mono({{0, 0}})});
  const MonomialIdeal dual = alexander_dual(principal);
  CHECK(dual == principal);

  const MonomialIdeal zero;
  CHECK(alexander_dual(zero).is_unit());
  CHECK(alexander_dual(alexander_dual(zero)).is_zero());
}

TEST_CASE("Alexander duality is involutive on random antichains") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<SqfMonomial> gens;
    const int count = 1 + static_cast<int>(rng() % 6);
    for (int g = 0; g < count; ++g) {
      std::vector<Cell> support;
      for (int c = 0; c < 9; ++c) {
        if (rng() % 3 == 0) support.emplace_back(c / 3, c % 3);
      }
      if (!support.empty()) gens.push_back(mono(std::move(support)));
    }
    if (gens.empty()) continue;
    const MonomialIdeal ideal = MonomialIdeal::minimalized(gens);
    CHECK(alexander_dual(alexander_dual(ideal)) == ideal);
  }
}

TEST_CASE("geometric and algebraic dual generators coincide") {
  std::mt19937_64 rng(2024);
  for (const auto& [r, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {4, 3}, {2, 5}}) {
    const WeightMatrix v = testutil::random_generic(r, n, rng);
    const auto vertices = enumerate_vertices(v);
    const MonomialIdeal geometric = dual_generators_from_vertices(vertices, r, n);
    const MonomialIdeal algebraic = alexander_dual(initial_ideal(v, vertices));
    CHECK(geometric == algebraic);
  }
}

TEST_CASE("initial ideal is projectively invariant") {
  std::mt19937_64 rng(31337);
  const WeightMatrix v = testutil::random_generic(3, 3, rng);
  WeightMatrix shifted = v;
  shifted.add_to_row(0, Rat(5));
  shifted.add_to_row(2, Rat(-7) / 2);
  CHECK(initial_ideal(v) == initial_ideal(shifted));
}

TEST_CASE("minimal transversals on tiny hypergraphs") {
  // Two disjoint edges: transversals are the four cross pairs.
  const auto duals = minimal_transversals(
      {mono({{0, 0}, {0, 1}}), mono({{1, 0}, {1, 1}})});
  CHECK(duals.size() == 4);

  // A shared element gives a singleton transversal.
  const auto shared = minimal_transversals(
      {mono({{0, 0}, {0, 1}}), mono({{0, 0}, {1, 1}})});
  CHECK(std::find(shared.begin(), shared.end(), mono({{0, 0}})) != shared.end());
  CHECK(shared.size() == 2);

  CHECK(minimal_transversals({}).size() == 1);  // the empty transversal
  CHECK(minimal_transversals({SqfMonomial{}}).empty());
}
