#pragma once

/**
 * Symbolic perturbation for non-generic inputs: refine the weights with a
 * generic integer tiebreaker compared lexicographically after the
 * original entries.
 */

#include <vector>

#include "trophull/point.hpp"
#include "trophull/rational.hpp"

namespace trop {

struct PerturbedWeights {
  WeightMatrix refined;     // v + eps * t, generic by construction
  WeightMatrix tiebreaker;  // the integer matrix t actually used
  Rat epsilon;              // small enough to act as a lexicographic tag
  bool used_fallback = false;  // cyclic tiebreaker failed, powers of two used
};

/// Refine v to a generic matrix whose comparisons agree with the
/// lexicographic order on pairs (v_ij, t_ij). The tiebreaker is the
/// cyclic matrix first; if that leaves ties, a power-of-two matrix which
/// provably breaks every tie. Throws InternalError if neither works.
PerturbedWeights perturb_weights(const WeightMatrix& v);

}  // namespace trop
