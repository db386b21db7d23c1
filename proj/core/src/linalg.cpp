#include "trophull/linalg.hpp"

#include "trophull/errors.hpp"

namespace trop {

bool IndependentSet::try_add(const RatVec& v) {
  if (static_cast<int>(v.size()) != dim_) {
    throw InputError("IndependentSet: wrong vector length");
  }
  RatVec w = v;
  for (size_t k = 0; k < reduced_.size(); ++k) {
    const int p = pivot_cols_[k];
    if (w[p] == 0) continue;
    const Rat factor = w[p] / reduced_[k][p];
    for (int c = 0; c < dim_; ++c) w[c] -= factor * reduced_[k][c];
  }
  for (int c = 0; c < dim_; ++c) {
    if (w[c] != 0) {
      reduced_.push_back(std::move(w));
      pivot_cols_.push_back(c);
      return true;
    }
  }
  return false;
}

int rank_of(const RatMat& m) {
  if (m.empty()) return 0;
  IndependentSet s(static_cast<int>(m[0].size()));
  for (const RatVec& row : m) s.try_add(row);
  return s.rank();
}

int det_sign(RatMat m) {
  const size_t k = m.size();
  int sign = 1;
  for (size_t col = 0; col < k; ++col) {
    size_t pivot = col;
    while (pivot < k && m[pivot][col] == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      sign = -sign;
    }
    if (m[col][col] < 0) sign = -sign;
    for (size_t row = col + 1; row < k; ++row) {
      if (m[row][col] == 0) continue;
      const Rat factor = m[row][col] / m[col][col];
      for (size_t c = col; c < k; ++c) m[row][c] -= factor * m[col][c];
    }
  }
  return sign;
}

std::optional<RatVec> solve_linear(RatMat a, RatVec b) {
  const size_t rows = a.size();
  if (rows != b.size()) throw InputError("solve_linear: shape mismatch");
  const size_t cols = rows == 0 ? 0 : a[0].size();

  std::vector<int> pivot_col_of_row;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pivot = row;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[row]);
    std::swap(b[pivot], b[row]);
    for (size_t r2 = 0; r2 < rows; ++r2) {
      if (r2 == row || a[r2][col] == 0) continue;
      const Rat factor = a[r2][col] / a[row][col];
      for (size_t c = col; c < cols; ++c) a[r2][c] -= factor * a[row][c];
      b[r2] -= factor * b[row];
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    ++row;
  }
  for (size_t r2 = row; r2 < rows; ++r2) {
    if (b[r2] != 0) return std::nullopt;  // inconsistent
  }
  RatVec x(cols, Rat(0));
  for (size_t k = 0; k < pivot_col_of_row.size(); ++k) {
    const int pc = pivot_col_of_row[k];
    x[pc] = b[k] / a[k][pc];
  }
  return x;
}

}  // namespace trop
