#pragma once

/**
 * Tropical halfspaces and the exterior description generated from vertex
 * grids. The partition refinement is reported as experimental, never
 * assumed correct.
 */

#include <vector>

#include "trophull/point.hpp"
#include "trophull/resolution.hpp"
#include "trophull/type_geometry.hpp"

namespace trop {

/// Closed tropical halfspace apex + union of the sectors C_j, j in A,
/// for a proper non-empty sector set A of 0-based column indices.
struct Halfspace {
  PointTP apex;
  std::vector<int> sectors;   // sorted, 0 < |A| < n
  Grid source_vertex;         // vertex grid the halfspace was read from
  bool partition_flag = false;  // shaded rows of the A-columns partition [r]
};

/// z lies in the halfspace iff some sector index of A attains the
/// coordinatewise minimum of z - apex.
bool halfspace_contains(const Halfspace& h, const PointTP& z);

/// All inclusion-minimal column sets A whose shaded boxes cover every row
/// of the vertex grid (the full column set may be the only cover).
std::vector<std::vector<int>> covering_sets(const VertexRecord& v);

/// Column sets whose shaded row sets are pairwise disjoint and cover all
/// rows; the conjectured minimal halfspaces (experimental output).
std::vector<std::vector<int>> partition_filter(const VertexRecord& v);

/// One halfspace per (vertex, proper minimal cover) pair. Each result is
/// verified to contain every vertex of the polytope (InternalError
/// otherwise). The list may be redundant.
std::vector<Halfspace> exterior_description(const FacePoset& poset,
                                            const std::vector<VertexRecord>& vertices);

}  // namespace trop
