#pragma once

/**
 * Min-plus arithmetic, tropical determinants and the genericity test.
 */

#include <optional>
#include <vector>

#include "trophull/point.hpp"
#include "trophull/rational.hpp"

namespace trop {

/// Tropical sum: min(a, b).
inline Rat trop_add(const Rat& a, const Rat& b) { return a < b ? a : b; }

/// Tropical product: a + b.
inline Rat trop_mul(const Rat& a, const Rat& b) { return a + b; }

/// Coordinatewise min over i of coeffs[i] + points[i], normalized.
PointTP trop_combination(const std::vector<PointTP>& points, const std::vector<Rat>& coeffs);

struct TDetResult {
  Rat value;           // min over permutations of the selected entry sum
  BigInt multiplicity; // number of permutations attaining the minimum, >= 1

  bool singular() const { return multiplicity >= 2; }
};

/// Tropical determinant of a square matrix with the exact count of
/// minimizing permutations. Exhaustive scan for k <= 8; a min-cost
/// assignment solver plus a tight-subgraph permanent beyond that.
TDetResult trop_det(const WeightMatrix& m);

/// Reference path: exhaustive permutation scan (any k; factorial time).
TDetResult trop_det_exhaustive(const WeightMatrix& m);

/// Assignment-solver path, exposed so tests can cross it against the
/// exhaustive scan on small matrices.
TDetResult trop_det_assignment(const WeightMatrix& m);

struct GenericityResult {
  bool generic = false;
  // On failure: 0-based row/column index sets of a tied minor.
  std::vector<int> witness_rows;
  std::vector<int> witness_cols;

  explicit operator bool() const { return generic; }
};

/// True iff every k x k submatrix, 2 <= k <= min(r, n), has a tropically
/// nonsingular determinant (unique minimizing permutation).
GenericityResult is_generic(const WeightMatrix& v);

/// Throws GenericityError when is_generic fails.
void require_generic(const WeightMatrix& v);

}  // namespace trop
