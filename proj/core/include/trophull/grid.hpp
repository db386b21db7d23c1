#pragma once

/**
 * The r x n shaded grid: the universal label shared by faces of the
 * tropical polytope, point types, and squarefree monomials.
 *
 * Box (i,j) shaded <=> constraint y_i + z_j = v_ij is tight <=> variable
 * x_ij does NOT divide the label monomial. The unshaded set is the
 * monomial support.
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace trop {

using Cell = std::pair<int, int>;  // (row, col), 0-based

struct Grid {
  int rows = 0;
  int cols = 0;
  std::vector<bool> shaded;  // row-major, rows*cols

  Grid() = default;
  Grid(int r, int n) : rows(r), cols(n), shaded(static_cast<size_t>(r) * n, false) {}

  bool at(int i, int j) const { return shaded[static_cast<size_t>(i) * cols + j]; }
  void set(int i, int j, bool v) { shaded[static_cast<size_t>(i) * cols + j] = v; }

  int shaded_count() const;
  int unshaded_count() const { return rows * cols - shaded_count(); }
  int row_shaded_count(int i) const;
  int col_shaded_count(int j) const;

  /// Every row and every column carries at least one shaded box
  /// (necessary for the grid to label a bounded face).
  bool covers_rows_and_cols() const;

  /// Shaded boxes form a spanning tree of the bipartite graph on
  /// rows + columns: connected, acyclic, exactly rows+cols-1 boxes.
  bool is_spanning_tree() const;

  std::vector<Cell> shaded_cells() const;
  std::vector<Cell> unshaded_cells() const;

  Grid transposed() const;

  /// Row-major bitstring, '1' = shaded.
  std::string to_bitstring() const;
  static Grid from_bitstring(int rows, int cols, const std::string& bits);

  // Lexicographic order of the flattened shading; the canonical order used
  // for all deterministic outputs.
  bool operator==(const Grid&) const = default;
  bool operator<(const Grid& o) const { return shaded < o.shaded; }

  /// True when every shaded box of this grid is shaded in g too.
  bool shading_subset_of(const Grid& g) const;
};

struct GridHash {
  size_t operator()(const Grid& g) const {
    return std::hash<std::vector<bool>>{}(g.shaded) ^ (static_cast<size_t>(g.cols) << 1);
  }
};

}  // namespace trop
