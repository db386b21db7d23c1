#pragma once

/**
 * The initial ideal of the 2x2-minor ideal under the weight matrix, its
 * Alexander dual, and the dictionary tying both to vertex grids.
 */

#include <vector>

#include "trophull/monomial.hpp"
#include "trophull/point.hpp"
#include "trophull/type_geometry.hpp"

namespace trop {

/// Minimal transversals of a hypergraph: all inclusion-minimal subsets of
/// the ground set meeting every edge. Edges given as monomial supports.
std::vector<SqfMonomial> minimal_transversals(const std::vector<SqfMonomial>& edges);

/// Vertex labels as an ideal: one generator per vertex, support = the
/// unshaded boxes. All generators have degree (r-1)(n-1).
MonomialIdeal dual_generators_from_vertices(const std::vector<VertexRecord>& vertices,
                                            int rows, int cols);

/// Stanley-Reisner ideal of the triangulation whose facets are the shaded
/// sets of the vertex grids; computed by hypergraph dualization of the
/// facet complements. Requires generic V.
MonomialIdeal initial_ideal(const WeightMatrix& v);
MonomialIdeal initial_ideal(const WeightMatrix& v, const std::vector<VertexRecord>& vertices);

/// Squarefree Alexander dual: expand the intersection of the prime ideals
/// m^a over the generators a. Involutive on antichains.
MonomialIdeal alexander_dual(const MonomialIdeal& ideal);

/// Maximal-weight term of every 2x2 minor of [x_ij]; each returned
/// quadratic lies in the initial ideal. Throws GenericityError on a tied
/// minor.
std::vector<SqfMonomial> minor_initial_forms(const WeightMatrix& v);

}  // namespace trop
