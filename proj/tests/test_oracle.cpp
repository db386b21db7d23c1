#include <doctest.h>

#include <random>

#include "trophull/oracle.hpp"
#include "trophull/type_geometry.hpp"

#include "test_util.hpp"

using namespace trop;
using testutil::matrix_from_ints;

namespace {

LinConstraint make(std::vector<long long> coeffs, long long rhs, LinConstraint::Kind kind) {
  LinConstraint c;
  for (long long v : coeffs) c.coeffs.emplace_back(v);
  c.rhs = Rat(rhs);
  c.kind = kind;
  return c;
}

}  // namespace

TEST_CASE("feasibility of tiny strict systems") {
  using K = LinConstraint::Kind;
  // x < 0 and -x < 0 cannot both hold.
  CHECK_FALSE(fm_feasible({make({1}, 0, K::StrictLess), make({-1}, 0, K::StrictLess)}, 1));
  // Weak versions pin x = 0.
  CHECK(fm_feasible({make({1}, 0, K::WeakLess), make({-1}, 0, K::WeakLess)}, 1));
  // Open interval (4, 5) has rational points.
  CHECK(fm_feasible({make({1}, 5, K::StrictLess), make({-1}, -4, K::StrictLess)}, 1));
  // x = 3 with x < 3 is inconsistent.
  CHECK_FALSE(fm_feasible({make({1}, 3, K::Equal), make({1}, 3, K::StrictLess)}, 1));
  // Equality chain: x = y, y = 1, x + y < 3.
  CHECK(fm_feasible({make({1, -1}, 0, K::Equal), make({0, 1}, 1, K::Equal),
                     make({1, 1}, 3, K::StrictLess)},
                    2));
  CHECK_FALSE(fm_feasible({make({1, -1}, 0, K::Equal), make({0, 1}, 1, K::Equal),
                           make({1, 1}, 2, K::StrictLess)},
                          2));
}

TEST_CASE("exactly-realizable grids by LP agree with is_cell") {
  std::mt19937_64 rng(21);
  const WeightMatrix v = testutil::random_generic(3, 3, rng);
  int checked = 0;
  for (unsigned mask = 0; mask < (1u << 9); ++mask) {
    Grid g(3, 3);
    for (int c = 0; c < 9; ++c) g.shaded[c] = (mask >> c) & 1;
    CHECK(grid_exactly_realizable_lp(g, v) == is_cell(g, v));
    ++checked;
  }
  CHECK(checked == 512);
}

TEST_CASE("brute-force vertex grids match the pivoting path") {
  std::mt19937_64 rng(42);
  for (const auto& [r, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {3, 3}, {4, 3}}) {
    const WeightMatrix v = testutil::random_generic(r, n, rng);
    const auto expected = brute_force_vertex_grids(v);
    const auto vertices = enumerate_vertices(v);
    REQUIRE(expected.size() == vertices.size());
    for (size_t k = 0; k < expected.size(); ++k) CHECK(expected[k] == vertices[k].grid);
  }
}

TEST_CASE("brute-force face grids respect the dimension grading") {
  const WeightMatrix v = matrix_from_ints({{0, 0}, {0, 1}});
  const auto faces = brute_force_face_grids(v);
  REQUIRE(faces.size() == 2);
  CHECK(faces[0].size() == 2);
  CHECK(faces[1].size() == 1);
}
