#pragma once

/**
 * Points of tropical projective space and the input weight matrix.
 *
 * A point of TP^{n-1} is a vector of n rationals modulo the all-ones
 * direction; the canonical representative has first coordinate 0. The
 * weight matrix stacks the r input points as rows and doubles as the
 * term-order weight for the algebraic side.
 */

#include <string>
#include <vector>

#include "trophull/errors.hpp"
#include "trophull/rational.hpp"

namespace trop {

struct PointTP {
  std::vector<Rat> coords;  // canonical: coords[0] == 0, size >= 2

  PointTP() = default;
  explicit PointTP(std::vector<Rat> raw);  // normalizes

  int dim() const { return static_cast<int>(coords.size()); }

  bool operator==(const PointTP&) const = default;
  bool operator<(const PointTP& other) const { return coords < other.coords; }
};

/// Subtract the first coordinate from every entry.
std::vector<Rat> normalize_coords(std::vector<Rat> raw);

struct WeightMatrix {
  int r = 0;  // number of points
  int n = 0;  // ambient coordinates, >= 2 for geometric use
  std::vector<Rat> entries;  // row-major, r*n

  WeightMatrix() = default;
  WeightMatrix(int r_, int n_) : r(r_), n(n_), entries(static_cast<size_t>(r_) * n_) {}

  Rat& at(int i, int j) { return entries[static_cast<size_t>(i) * n + j]; }
  const Rat& at(int i, int j) const { return entries[static_cast<size_t>(i) * n + j]; }

  PointTP row_point(int i) const;
  WeightMatrix transposed() const;

  /// Adds c to every entry of row i (a projective no-op on the point).
  void add_to_row(int i, const Rat& c);

  /// Square submatrix picked by row and column index lists.
  WeightMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

  bool operator==(const WeightMatrix&) const = default;
};

WeightMatrix weight_matrix_from_rows(const std::vector<std::vector<Rat>>& rows);

}  // namespace trop
