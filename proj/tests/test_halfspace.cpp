#include <doctest.h>

#include <algorithm>
#include <random>

#include "trophull/halfspace.hpp"

#include "test_util.hpp"

using namespace trop;
using testutil::ex4pt;
using testutil::matrix_from_ints;

namespace {

Halfspace at_origin(std::vector<int> sectors, int n) {
  Halfspace h;
  h.apex = PointTP(std::vector<Rat>(n, Rat(0)));
  h.sectors = std::move(sectors);
  return h;
}

}  // namespace

TEST_CASE("halfspace membership at the origin apex") {
  const Halfspace h = at_origin({0}, 3);
  CHECK(halfspace_contains(h, PointTP({Rat(0), Rat(1), Rat(1)})));
  CHECK_FALSE(halfspace_contains(h, PointTP({Rat(0), Rat(-1), Rat(0)})));
  // Boundary points (ties in the argmin) belong to the closed halfspace.
  CHECK(halfspace_contains(h, PointTP({Rat(0), Rat(0), Rat(2)})));
}

TEST_CASE("covering sets of the example vertices") {
  const WeightMatrix v = ex4pt();
  const auto vertices = enumerate_vertices(v);

  // v_1's grid has column 3 shaded in every row, so {3} is the unique
  // minimal cover.
  const Grid t1 = type_of(v.row_point(0), v);
  for (const auto& rec : vertices) {
    if (rec.grid == t1) {
      CHECK(covering_sets(rec) == std::vector<std::vector<int>>{{2}});
    }
  }

  // Every minimal cover really covers, and no proper subset does.
  for (const auto& rec : vertices) {
    for (const auto& cover : covering_sets(rec)) {
      auto covers = [&](const std::vector<int>& cols) {
        std::vector<bool> hit(v.r, false);
        for (int j : cols) {
          for (int i = 0; i < v.r; ++i) {
            if (rec.grid.at(i, j)) hit[i] = true;
          }
        }
        return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
      };
      CHECK(covers(cover));
      for (size_t drop = 0; drop < cover.size(); ++drop) {
        std::vector<int> smaller = cover;
        smaller.erase(smaller.begin() + drop);
        CHECK_FALSE(covers(smaller));
      }
    }
  }
}

TEST_CASE("star grids with a private column per row") {
  // Row 0 fully shaded, rows 1 and 2 shaded only in columns 1 and 2.
  VertexRecord rec;
  rec.grid = Grid(3, 3);
  for (int j = 0; j < 3; ++j) rec.grid.set(0, j, true);
  rec.grid.set(1, 1, true);
  rec.grid.set(2, 2, true);
  rec.coords = PointTP({Rat(0), Rat(0), Rat(0)});
  CHECK(covering_sets(rec) == std::vector<std::vector<int>>{{1, 2}});

  // All other rows in one column: that column alone covers.
  VertexRecord star;
  star.grid = Grid(3, 3);
  for (int j = 0; j < 3; ++j) star.grid.set(0, j, true);
  star.grid.set(1, 0, true);
  star.grid.set(2, 0, true);
  star.coords = rec.coords;
  CHECK(covering_sets(star) == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("partition filter keeps disjoint covers only") {
  VertexRecord rec;
  rec.grid = Grid(3, 3);
  for (int j = 0; j < 3; ++j) rec.grid.set(0, j, true);  // row 0 everywhere
  rec.grid.set(1, 1, true);
  rec.grid.set(2, 2, true);
  rec.coords = PointTP({Rat(0), Rat(0), Rat(0)});
  // Columns 1,2 have disjoint shaded sets {0,1},{0,2}? No: both contain
  // row 0, so no partition exists among proper covers.
  const auto partitions = partition_filter(rec);
  for (const auto& p : partitions) {
    std::vector<int> seen(3, 0);
    for (int j : p) {
      for (int i = 0; i < 3; ++i) {
        if (rec.grid.at(i, j)) ++seen[i];
      }
    }
    CHECK(seen == std::vector<int>{1, 1, 1});
  }

  // A fully shaded single column covering all rows is a partition.
  VertexRecord column;
  column.grid = Grid(2, 2);
  column.grid.set(0, 0, true);
  column.grid.set(1, 0, true);
  column.grid.set(0, 1, true);
  column.coords = PointTP({Rat(0), Rat(0)});
  const auto parts = partition_filter(column);
  CHECK(std::find(parts.begin(), parts.end(), std::vector<int>{0}) != parts.end());

  // Every pair of columns overlaps and no single column covers all rows:
  // no partition exists.
  VertexRecord overlap;
  overlap.grid = Grid(3, 3);
  overlap.grid.set(0, 0, true);
  overlap.grid.set(1, 0, true);
  overlap.grid.set(1, 1, true);
  overlap.grid.set(2, 1, true);
  overlap.grid.set(0, 2, true);
  overlap.grid.set(2, 2, true);
  overlap.coords = PointTP({Rat(0), Rat(0), Rat(0)});
  CHECK(partition_filter(overlap).empty());
}

TEST_CASE("partitions are always among the minimal covers") {
  const WeightMatrix v = ex4pt();
  for (const auto& rec : enumerate_vertices(v)) {
    const auto covers = covering_sets(rec);
    for (const auto& p : partition_filter(rec)) {
      CHECK(std::find(covers.begin(), covers.end(), p) != covers.end());
    }
  }
}

TEST_CASE("exterior description contains the polytope") {
  const WeightMatrix v = ex4pt();
  const auto vertices = enumerate_vertices(v);
  const FacePoset poset = build_face_poset(vertices, v);
  const auto halfspaces = exterior_description(poset, vertices);
  CHECK_FALSE(halfspaces.empty());

  // Sampled hull points lie in every halfspace.
  std::mt19937_64 rng(9);
  std::vector<PointTP> points;
  for (int i = 0; i < v.r; ++i) points.push_back(v.row_point(i));
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rat> coeffs;
    for (int i = 0; i < v.r; ++i) coeffs.push_back(testutil::random_rat(rng));
    const PointTP z = trop_combination(points, coeffs);
    for (const Halfspace& h : halfspaces) CHECK(halfspace_contains(h, z));
  }
}

TEST_CASE("membership in all halfspaces matches the type criterion on a grid sample") {
  const WeightMatrix v = ex4pt();
  const auto vertices = enumerate_vertices(v);
  const FacePoset poset = build_face_poset(vertices, v);
  const auto halfspaces = exterior_description(poset, vertices);

  for (int a = -6; a <= 14; ++a) {
    for (int b = -8; b <= 12; ++b) {
      const PointTP z({Rat(0), Rat(a) / 2, Rat(b) / 2});
      const bool in_hull = hull_contains(v, z);
      bool in_all = true;
      for (const Halfspace& h : halfspaces) in_all = in_all && halfspace_contains(h, z);
      CHECK(in_all == in_hull);
    }
  }
}

TEST_CASE("interior vertices need every column and contribute no halfspace") {
  // Three points on a tropical line: the middle vertex's only cover is
  // the full column set, which is not a legal sector set, so only the two
  // endpoints emit halfspaces and their intersection is still exact.
  const WeightMatrix v = matrix_from_ints({{0, 0}, {0, 1}, {0, 3}});
  const auto vertices = enumerate_vertices(v);
  REQUIRE(vertices.size() == 3);
  const FacePoset poset = build_face_poset(vertices, v);
  const auto halfspaces = exterior_description(poset, vertices);
  CHECK(halfspaces.size() == 2);
  for (int t = -4; t <= 8; ++t) {
    const PointTP z({Rat(0), Rat(t) / 2});
    bool in_all = true;
    for (const Halfspace& h : halfspaces) in_all = in_all && halfspace_contains(h, z);
    CHECK(in_all == hull_contains(v, z));
  }
}

TEST_CASE("segment halfspaces sit at the two endpoints") {
  const WeightMatrix v = matrix_from_ints({{0, 0}, {0, 1}});
  const auto vertices = enumerate_vertices(v);
  const FacePoset poset = build_face_poset(vertices, v);
  const auto halfspaces = exterior_description(poset, vertices);
  REQUIRE(halfspaces.size() == 2);
  std::vector<PointTP> apexes{halfspaces[0].apex, halfspaces[1].apex};
  std::sort(apexes.begin(), apexes.end());
  CHECK(apexes[0] == PointTP({Rat(0), Rat(0)}));
  CHECK(apexes[1] == PointTP({Rat(0), Rat(1)}));
}

TEST_CASE("a single point emits a halfspace per minimal cover") {
  const WeightMatrix v = matrix_from_ints({{0, 2, 5}});
  const auto vertices = enumerate_vertices(v);
  const FacePoset poset = build_face_poset(vertices, v);
  const auto halfspaces = exterior_description(poset, vertices);
  CHECK(halfspaces.size() == 3);  // each singleton column covers the one row
  for (const Halfspace& h : halfspaces) {
    CHECK(h.apex == PointTP({Rat(0), Rat(2), Rat(5)}));
    CHECK(h.sectors.size() == 1);
  }
}
