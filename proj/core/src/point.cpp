#include "trophull/point.hpp"

namespace trop {

std::vector<Rat> normalize_coords(std::vector<Rat> raw) {
  if (raw.empty()) return raw;
  const Rat first = raw[0];
  for (Rat& c : raw) c -= first;
  return raw;
}

PointTP::PointTP(std::vector<Rat> raw) : coords(normalize_coords(std::move(raw))) {
  if (coords.size() < 2) {
    throw InputError("a point of tropical projective space needs at least 2 coordinates");
  }
}

PointTP WeightMatrix::row_point(int i) const {
  std::vector<Rat> row(n);
  for (int j = 0; j < n; ++j) row[j] = at(i, j);
  return PointTP(std::move(row));
}

WeightMatrix WeightMatrix::transposed() const {
  WeightMatrix t(n, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < n; ++j) {
      t.at(j, i) = at(i, j);
    }
  }
  return t;
}

void WeightMatrix::add_to_row(int i, const Rat& c) {
  for (int j = 0; j < n; ++j) at(i, j) += c;
}

WeightMatrix WeightMatrix::submatrix(const std::vector<int>& rows,
                                     const std::vector<int>& cols) const {
  WeightMatrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t a = 0; a < rows.size(); ++a) {
    for (size_t b = 0; b < cols.size(); ++b) {
      s.at(static_cast<int>(a), static_cast<int>(b)) = at(rows[a], cols[b]);
    }
  }
  return s;
}

WeightMatrix weight_matrix_from_rows(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) throw InputError("empty point list");
  const int n = static_cast<int>(rows[0].size());
  if (n < 2) throw InputError("points need at least 2 coordinates");
  WeightMatrix v(static_cast<int>(rows.size()), n);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw InputError("point " + std::to_string(i + 1) + " has " +
                       std::to_string(rows[i].size()) + " coordinates, expected " +
                       std::to_string(n));
    }
    for (int j = 0; j < n; ++j) v.at(static_cast<int>(i), j) = rows[i][j];
  }
  return v;
}

}  // namespace trop
