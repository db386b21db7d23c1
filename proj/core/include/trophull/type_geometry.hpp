#pragma once

/**
 * The dual polyhedron P_V = {(y,z) : y_i + z_j <= v_ij}, point types,
 * exact vertex enumeration by network pivoting, and vertex coordinates.
 *
 * The bounded faces of P_V project piecewise-linearly onto the tropical
 * polytope via (y,z) -> z; a vertex of P_V is a spanning tree of tight
 * constraints when the weights are generic.
 */

#include <vector>

#include "trophull/grid.hpp"
#include "trophull/point.hpp"
#include "trophull/rational.hpp"

namespace trop {

struct DualPolyhedronPoint {
  std::vector<Rat> y;  // one per input point
  std::vector<Rat> z;  // one per coordinate; canonical z[0] == 0

  bool operator==(const DualPolyhedronPoint&) const = default;
};

struct VertexRecord {
  Grid grid;                   // spanning-tree tight set
  PointTP coords;              // z-projection, canonical representative
  DualPolyhedronPoint dual_point;
};

/// Type of z w.r.t. V: box (i,j) shaded iff j attains min_k (v_ik - z_k).
Grid type_of(const PointTP& z, const WeightMatrix& v);

/// Lift z to the unique highest point of P_V over it: y_i = min_k (v_ik - z_k).
DualPolyhedronPoint dual_lift(const PointTP& z, const WeightMatrix& v);

/// Exact feasibility of {y_i + z_j = v_ij on shaded boxes, strict
/// inequality off them}: does a point of P_V with tight set exactly g
/// exist? Decided by equality propagation over the shaded components plus
/// a strict difference-constraint system on the component shifts.
bool is_cell(const Grid& g, const WeightMatrix& v);

/// Solve the tight-set system {z_l - z_k = v_il - v_ik : row i shaded in
/// columns k and l} for the unique canonical z. Requires the shaded boxes
/// to connect all columns (true for vertex grids).
PointTP coords_of(const Grid& g, const WeightMatrix& v);

/// All vertices of P_V, each exactly once, sorted by grid. Exhaustive
/// graph search over tree pivots starting from the type of the first
/// input point; requires generic V.
std::vector<VertexRecord> enumerate_vertices(const WeightMatrix& v);

/// Membership test for the tropical polytope: z lies in tconv(V) iff
/// every column of its type carries a shaded box.
bool hull_contains(const WeightMatrix& v, const PointTP& z);

}  // namespace trop
