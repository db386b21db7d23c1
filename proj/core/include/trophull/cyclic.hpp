#pragma once

/**
 * Tropical cyclic polytopes C_{r,n}: closed-form points, lattice-path
 * vertices and faces, the Young-lattice 1-skeleton, maximal-face counts
 * by stripes, and generating-function cross-checks.
 */

#include <string>
#include <vector>

#include "trophull/grid.hpp"
#include "trophull/point.hpp"
#include "trophull/rational.hpp"
#include "trophull/resolution.hpp"

namespace trop {

/// Weight matrix v_ij = (i-1)(j-1); generic for every r, n.
WeightMatrix cyclic_points(int r, int n);

/// A monotone lattice path from the lower-left to the upper-right corner
/// of the r x n grid; Diag steps mark face labels (dim = #Diag).
struct LatticePath {
  std::string steps;  // over {'R','U','D'}, read from cell (r-1, 0) upward

  int diag_count() const;
  /// Cells visited by the path; the shaded set of the label.
  Grid to_grid(int rows, int cols) const;
};

/// One grid per pure R/U path; exactly the vertex grids of C_{r,n},
/// sorted canonically. Count = binomial(r+n-2, r-1).
std::vector<Grid> path_vertices(int r, int n);

/// Face poset of C_{r,n} built from lattice paths with diagonal steps,
/// with coordinates and covers matching build_face_poset on
/// cyclic_points(r, n).
FacePoset cyclic_faces(int r, int n);

/// 1-skeleton of C_{r,n} as a graph keyed by Young diagrams inside the
/// (r-1) x (n-1) box.
struct YoungGraph {
  std::vector<std::vector<int>> diagrams;      // partitions, weakly decreasing, no zeros
  std::vector<std::pair<int, int>> edges;      // index pairs, i < j
};

YoungGraph young_skeleton(int r, int n);

/// Hasse diagram of the Young lattice in an a x b box, generated directly
/// (independent reference for the skeleton).
YoungGraph young_lattice_hasse(int a, int b);

/// Number of maximal k-faces of C_{r,n}: (k+1)-tuples of horizontal or
/// vertical stripes with total width n and total height r. Computed by
/// dynamic programming and cross-checked against direct enumeration
/// (InternalError on mismatch).
unsigned long long count_maximal_faces(int r, int n, int k);

/// Direct recursive stripe enumeration (reference path).
unsigned long long count_maximal_faces_enum(int r, int n, int k);

/// Three-way adjudication of two candidate closed-form generating
/// functions for the maximal-face numbers against stripe enumeration.
struct GfReport {
  int r = 0, n = 0, k = 0;
  unsigned long long enumeration = 0;  // stripe count (ground truth)
  Rat egf_form;               // r! n! k! * coefficient of the exponential candidate
  Rat ogf_form;               // coefficient of the ordinary candidate (minus-sign denominator)
  Rat ogf_sign_corrected;     // ordinary GF with '+' in the denominator
  bool egf_matches = false;
  bool ogf_matches = false;
  bool corrected_matches = false;
  bool boundary_case = false;  // r == 1 or n == 1: no geometric cross-check
};

GfReport gf_coefficient_check(int r, int n, int k);

}  // namespace trop
