#include <doctest.h>

#include <algorithm>
#include <map>

#include "trophull/cyclic.hpp"
#include "trophull/errors.hpp"
#include "trophull/ideal.hpp"

#include "test_util.hpp"

using namespace trop;

TEST_CASE("cyclic point coordinates") {
  const WeightMatrix v = cyclic_points(2, 2);
  CHECK(v.at(0, 0) == 0);
  CHECK(v.at(0, 1) == 0);
  CHECK(v.at(1, 0) == 0);
  CHECK(v.at(1, 1) == 1);

  const WeightMatrix w = cyclic_points(4, 3);
  CHECK(w.row_point(2) == PointTP({Rat(0), Rat(2), Rat(4)}));
  CHECK(w.row_point(3) == PointTP({Rat(0), Rat(3), Rat(6)}));
}

TEST_CASE("lattice paths turn into spanning-tree grids") {
  const Grid g = LatticePath{"RURU"}.to_grid(3, 3);
  CHECK(g.is_spanning_tree());
  CHECK(g.at(2, 0));
  CHECK(g.at(0, 2));
  CHECK_THROWS_AS(LatticePath{"RR"}.to_grid(2, 2), InputError);
}

TEST_CASE("path vertices match the pivoting enumeration") {
  for (int r = 1; r <= 5; ++r) {
    for (int n = 2; n <= 5; ++n) {
      const auto paths = path_vertices(r, n);
      CHECK(BigInt(paths.size()) == binomial_big(r + n - 2, r - 1));
      const auto vertices = enumerate_vertices(cyclic_points(r, n));
      REQUIRE(paths.size() == vertices.size());
      for (size_t k = 0; k < paths.size(); ++k) CHECK(paths[k] == vertices[k].grid);
    }
  }
}

TEST_CASE("cyclic face poset equals the geometric construction") {
  for (const auto& [r, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {4, 3}, {3, 4}, {4, 4}}) {
    const FacePoset direct = cyclic_faces(r, n);
    const WeightMatrix v = cyclic_points(r, n);
    const FacePoset geometric = build_face_poset(enumerate_vertices(v), v);

    REQUIRE(direct.by_dim.size() == geometric.by_dim.size());
    for (size_t d = 0; d < direct.by_dim.size(); ++d) {
      REQUIRE(direct.by_dim[d].size() == geometric.by_dim[d].size());
      for (size_t k = 0; k < direct.by_dim[d].size(); ++k) {
        CHECK(direct.by_dim[d][k].grid == geometric.by_dim[d][k].grid);
        CHECK(direct.by_dim[d][k].vertex_set == geometric.by_dim[d][k].vertex_set);
      }
      if (d >= 1) CHECK(direct.covers[d] == geometric.covers[d]);
    }
  }
}

TEST_CASE("hypercube structure of cyclic faces") {
  const FacePoset poset = cyclic_faces(4, 4);
  CHECK(minimality_linearity_check(boundary_matrices(poset)));
  for (int k = 0; k <= poset.max_dim(); ++k) {
    CHECK(BigInt(poset.by_dim[k].size()) ==
          factorial_big(4 + 4 - k - 2) /
              (factorial_big(4 - k - 1) * factorial_big(4 - k - 1) * factorial_big(k)));
    for (const Face& f : poset.by_dim[k]) {
      CHECK(f.vertex_set.size() == (size_t{1} << k));
    }
  }

  const FMatrix fm = f_matrix(poset);
  for (const auto& [key, count] : fm.counts) {
    CHECK(key.second == (1 << key.first));  // support only on (k, 2^k)
  }
}

TEST_CASE("three-by-three f-matrix values") {
  const FMatrix fm = f_matrix(cyclic_faces(3, 3));
  REQUIRE(fm.counts.size() == 3);
  CHECK(fm.counts.at({0, 1}) == 6);
  CHECK(fm.counts.at({1, 2}) == 6);
  CHECK(fm.counts.at({2, 4}) == 1);
}

TEST_CASE("young skeleton of small cyclic polytopes") {
  const YoungGraph two = young_skeleton(2, 2);
  CHECK(two.diagrams.size() == 2);
  CHECK(two.edges.size() == 1);

  const YoungGraph g = young_skeleton(3, 3);
  CHECK(g.diagrams.size() == 6);
  CHECK(g.edges.size() == 6);

  const YoungGraph single = young_skeleton(1, 4);
  CHECK(single.diagrams.size() == 1);
  CHECK(single.edges.empty());
}

TEST_CASE("young skeleton is the Hasse diagram of the boxed Young lattice") {
  for (const auto& [r, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {4, 3}, {4, 4}}) {
    const YoungGraph skel = young_skeleton(r, n);
    const YoungGraph hasse = young_lattice_hasse(r - 1, n - 1);

    REQUIRE(skel.diagrams.size() == hasse.diagrams.size());
    // Identify by diagram and compare the edge sets.
    std::map<std::vector<int>, int> to_hasse;
    for (size_t k = 0; k < hasse.diagrams.size(); ++k) {
      to_hasse.emplace(hasse.diagrams[k], static_cast<int>(k));
    }
    std::vector<std::pair<int, int>> mapped;
    for (const auto& [a, b] : skel.edges) {
      int ha = to_hasse.at(skel.diagrams[a]);
      int hb = to_hasse.at(skel.diagrams[b]);
      mapped.emplace_back(std::min(ha, hb), std::max(ha, hb));
    }
    std::sort(mapped.begin(), mapped.end());
    CHECK(mapped == hasse.edges);

    // Edge count doubles as the f-vector entry.
    const FacePoset poset = cyclic_faces(r, n);
    CHECK(static_cast<long long>(skel.edges.size()) == f_vector(poset)[1]);
  }
}

TEST_CASE("maximal-face counts by stripes") {
  CHECK(count_maximal_faces(2, 2, 1) == 1);
  CHECK(count_maximal_faces(2, 2, 0) == 0);
  CHECK(count_maximal_faces(3, 3, 1) == 2);
  CHECK(count_maximal_faces(1, 4, 0) == 1);
  CHECK(count_maximal_faces(4, 4, 5) == 0);  // beyond the dimension bound
  for (int r = 1; r <= 6; ++r) {
    for (int n = 1; n <= 6; ++n) {
      for (int k = 0; k <= 6; ++k) {
        CHECK(count_maximal_faces(r, n, k) == count_maximal_faces_enum(r, n, k));
      }
    }
  }
}

TEST_CASE("stripe counts match the geometric maximal faces") {
  for (const auto& [r, n] : std::vector<std::pair<int, int>>{{2, 2}, {4, 3}, {3, 4}, {4, 4}}) {
    const FacePoset poset = cyclic_faces(r, n);
    const auto matrices = boundary_matrices(poset);
    const auto maximal = maximal_faces(poset, matrices);
    std::map<int, unsigned long long> by_dim;
    for (const Face& f : maximal) ++by_dim[f.dim];
    for (int k = 0; k <= std::min(r, n) - 1; ++k) {
      CHECK(by_dim[k] == count_maximal_faces(r, n, k));
    }
  }
}

TEST_CASE("generating function report adjudicates the candidate formulas") {
  const GfReport small = gf_coefficient_check(2, 2, 1);
  CHECK(small.enumeration == 1);
  CHECK(small.corrected_matches);
  CHECK_FALSE(small.egf_matches);  // the exponential candidate overcounts

  const GfReport bigger = gf_coefficient_check(3, 3, 1);
  CHECK(bigger.enumeration == 2);
  CHECK(bigger.corrected_matches);
  CHECK_FALSE(bigger.ogf_matches);  // the minus-sign candidate diverges here

  const GfReport boundary = gf_coefficient_check(1, 1, 0);
  CHECK(boundary.boundary_case);
  CHECK(boundary.enumeration == 1);

  CHECK_THROWS_AS(gf_coefficient_check(0, 2, 0), ConfigError);
}

TEST_CASE("corrected ordinary form matches enumeration on a sweep") {
  for (int r = 1; r <= 4; ++r) {
    for (int n = 1; n <= 4; ++n) {
      for (int k = 0; k <= 3; ++k) {
        CHECK(gf_coefficient_check(r, n, k).corrected_matches);
      }
    }
  }
}

TEST_CASE("cyclic initial ideal is generated by the diagonal quadratics") {
  for (const auto& [r, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 4}, {4, 4}}) {
    const MonomialIdeal ideal = initial_ideal(cyclic_points(r, n));
    std::vector<SqfMonomial> expected;
    for (int i = 0; i < r; ++i) {
      for (int k = i + 1; k < r; ++k) {
        for (int j = 0; j < n; ++j) {
          for (int l = j + 1; l < n; ++l) {
            expected.push_back(SqfMonomial({{i, j}, {k, l}}));
          }
        }
      }
    }
    std::sort(expected.begin(), expected.end());
    CHECK(ideal.generators == expected);
  }
}
