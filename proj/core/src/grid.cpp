#include "trophull/grid.hpp"

#include <algorithm>

#include "trophull/errors.hpp"

namespace trop {

int Grid::shaded_count() const {
  return static_cast<int>(std::count(shaded.begin(), shaded.end(), true));
}

int Grid::row_shaded_count(int i) const {
  int c = 0;
  for (int j = 0; j < cols; ++j) c += at(i, j) ? 1 : 0;
  return c;
}

int Grid::col_shaded_count(int j) const {
  int c = 0;
  for (int i = 0; i < rows; ++i) c += at(i, j) ? 1 : 0;
  return c;
}

bool Grid::covers_rows_and_cols() const {
  for (int i = 0; i < rows; ++i) {
    if (row_shaded_count(i) == 0) return false;
  }
  for (int j = 0; j < cols; ++j) {
    if (col_shaded_count(j) == 0) return false;
  }
  return true;
}

bool Grid::is_spanning_tree() const {
  if (shaded_count() != rows + cols - 1) return false;
  // Union-find over row nodes [0,rows) and column nodes [rows, rows+cols).
  std::vector<int> parent(rows + cols);
  for (size_t k = 0; k < parent.size(); ++k) parent[k] = static_cast<int>(k);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (!at(i, j)) continue;
      int a = find(i);
      int b = find(rows + j);
      if (a == b) return false;  // cycle
      parent[a] = b;
    }
  }
  int root = find(0);
  for (int k = 1; k < rows + cols; ++k) {
    if (find(k) != root) return false;
  }
  return true;
}

std::vector<Cell> Grid::shaded_cells() const {
  std::vector<Cell> out;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (at(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<Cell> Grid::unshaded_cells() const {
  std::vector<Cell> out;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (!at(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

Grid Grid::transposed() const {
  Grid t(cols, rows);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      t.set(j, i, at(i, j));
    }
  }
  return t;
}

std::string Grid::to_bitstring() const {
  std::string s(shaded.size(), '0');
  for (size_t k = 0; k < shaded.size(); ++k) {
    if (shaded[k]) s[k] = '1';
  }
  return s;
}

Grid Grid::from_bitstring(int rows, int cols, const std::string& bits) {
  if (static_cast<int>(bits.size()) != rows * cols) {
    throw InputError("bitstring length does not match grid shape");
  }
  Grid g(rows, cols);
  for (size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] != '0' && bits[k] != '1') {
      throw InputError("bitstring must contain only '0' and '1'");
    }
    g.shaded[k] = bits[k] == '1';
  }
  return g;
}

bool Grid::shading_subset_of(const Grid& g) const {
  if (rows != g.rows || cols != g.cols) return false;
  for (size_t k = 0; k < shaded.size(); ++k) {
    if (shaded[k] && !g.shaded[k]) return false;
  }
  return true;
}

}  // namespace trop
