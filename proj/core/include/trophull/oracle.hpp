#pragma once

/**
 * Brute-force reference computations, independent of the pivoting and
 * unshading paths: exact Fourier-Motzkin feasibility over mixed
 * strict/weak systems, vertex grids by scanning all spanning trees, and
 * face grids by scanning all grids. Exponential; small inputs only.
 */

#include <vector>

#include "trophull/grid.hpp"
#include "trophull/point.hpp"
#include "trophull/rational.hpp"

namespace trop {

/// One row of a linear system: sum coeffs[i] * x_i (relation) rhs,
/// relation is "=", "<=" or "<".
struct LinConstraint {
  std::vector<Rat> coeffs;
  Rat rhs;
  enum class Kind { Equal, WeakLess, StrictLess } kind = Kind::WeakLess;
};

/// Exact feasibility over the rationals: Gaussian substitution of the
/// equalities, then Fourier-Motzkin elimination with strictness tracking.
bool fm_feasible(std::vector<LinConstraint> constraints, int num_vars);

/// Builds the system {y_i + z_j = v_ij on shaded, < off shaded} with
/// z_0 = 0 and decides it with fm_feasible.
bool grid_exactly_realizable_lp(const Grid& g, const WeightMatrix& v);

/// All spanning trees of the complete bipartite graph on rows+cols whose
/// tight system is exactly realizable: the vertex grids, grid-sorted.
std::vector<Grid> brute_force_vertex_grids(const WeightMatrix& v);

/// All grids that cover every row and column and are exactly realizable:
/// the bounded-face grids, grouped by dimension #unshaded - (r-1)(n-1).
std::vector<std::vector<Grid>> brute_force_face_grids(const WeightMatrix& v);

}  // namespace trop
