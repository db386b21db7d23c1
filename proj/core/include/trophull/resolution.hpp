#pragma once

/**
 * Face poset of the tropical polytope, signed boundary matrices of the
 * minimal linear free resolution it supports, f-vectors and f-matrices.
 */

#include <map>
#include <utility>
#include <vector>

#include "trophull/grid.hpp"
#include "trophull/monomial.hpp"
#include "trophull/point.hpp"
#include "trophull/type_geometry.hpp"

namespace trop {

struct Face {
  Grid grid;
  int dim = 0;                     // = #unshaded - (n-1)(r-1)
  std::vector<int> vertex_set;     // indices into the canonical vertex order
  PointTP coords_sample;           // relative-interior point (vertex mean)
};

struct FacePoset {
  int r = 0;
  int n = 0;
  std::vector<std::vector<Face>> by_dim;  // faces grouped by dimension, grid-sorted
  // covers[d]: (lower index in dim d-1, upper index in dim d), d >= 1
  std::vector<std::vector<std::pair<int, int>>> covers;
  std::vector<PointTP> vertex_coords;     // canonical vertex order

  int max_dim() const { return static_cast<int>(by_dim.size()) - 1; }
  int face_count(int d) const {
    return d >= 0 && d <= max_dim() ? static_cast<int>(by_dim[d].size()) : 0;
  }
};

/// Grow the poset from the vertex grids by the unshade-one-box rule,
/// keeping grids that still cover every row and column and are realizable
/// as faces (is_cell); cover relations are recorded per dimension.
FacePoset build_face_poset(const std::vector<VertexRecord>& vertices, const WeightMatrix& v);

/// One boundary map of the cellular resolution: rows are (i-1)-faces,
/// columns are i-faces, entries +-1 exactly on cover pairs.
struct MonomialMatrix {
  std::vector<SqfMonomial> row_labels;
  std::vector<SqfMonomial> col_labels;
  std::vector<std::vector<int>> entries;  // row-major, values in {-1,0,+1}

  int rows() const { return static_cast<int>(row_labels.size()); }
  int cols() const { return static_cast<int>(col_labels.size()); }
};

/// Signed boundary matrices M_1, M_2, ... with geometric orientations;
/// consecutive products vanish (checked, InternalError on failure).
std::vector<MonomialMatrix> boundary_matrices(const FacePoset& poset);

std::vector<long long> f_vector(const FacePoset& poset);

/// Expected generic f-vector entry: multinomial (r+n-i-2; r-i-1, n-i-1, i).
BigInt generic_face_count(int r, int n, int i);
std::vector<BigInt> generic_f_vector(int r, int n);

struct FMatrix {
  // (dimension, vertex count) -> number of faces
  std::map<std::pair<int, int>, long long> counts;
};

FMatrix f_matrix(const FacePoset& poset);

/// Faces of top dimension n-1 plus faces whose row in the next boundary
/// matrix is all-zero (faces not contained in any larger face).
std::vector<Face> maximal_faces(const FacePoset& poset, const std::vector<MonomialMatrix>& matrices);

/// Linear: every nonzero entry connects labels one degree apart.
/// Minimal: no label repeats (all multigraded Betti numbers <= 1).
bool minimality_linearity_check(const std::vector<MonomialMatrix>& matrices);

}  // namespace trop
