#include "trophull/tropical.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "trophull/errors.hpp"

namespace trop {

PointTP trop_combination(const std::vector<PointTP>& points, const std::vector<Rat>& coeffs) {
  if (points.empty() || points.size() != coeffs.size()) {
    throw InputError("trop_combination needs equally many points and coefficients");
  }
  const int n = points[0].dim();
  for (const PointTP& p : points) {
    if (p.dim() != n) throw InputError("trop_combination: dimension mismatch");
  }
  std::vector<Rat> acc(n);
  for (int j = 0; j < n; ++j) acc[j] = coeffs[0] + points[0].coords[j];
  for (size_t i = 1; i < points.size(); ++i) {
    for (int j = 0; j < n; ++j) {
      acc[j] = trop_add(acc[j], trop_mul(coeffs[i], points[i].coords[j]));
    }
  }
  return PointTP(std::move(acc));
}

TDetResult trop_det_exhaustive(const WeightMatrix& m) {
  if (m.r != m.n || m.r < 1) throw InputError("tropical determinant needs a square matrix");
  const int k = m.r;
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<Rat> best;
  BigInt count = 0;
  do {
    Rat sum = m.at(0, perm[0]);
    for (int i = 1; i < k; ++i) sum += m.at(i, perm[i]);
    if (!best || sum < *best) {
      best = sum;
      count = 1;
    } else if (sum == *best) {
      ++count;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return TDetResult{*best, count};
}

namespace {

// Exact count of perfect matchings of the 0/1 "tight" graph given as
// per-row column lists. Rows are processed scarcest-first.
BigInt count_perfect_matchings(const std::vector<std::vector<int>>& row_options, int k) {
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return row_options[a].size() < row_options[b].size();
  });
  std::vector<bool> col_used(k, false);
  BigInt total = 0;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      ++total;
      return;
    }
    for (int j : row_options[order[depth]]) {
      if (col_used[j]) continue;
      col_used[j] = true;
      self(self, depth + 1);
      col_used[j] = false;
    }
  };
  rec(rec, 0);
  return total;
}

}  // namespace

TDetResult trop_det_assignment(const WeightMatrix& m) {
  if (m.r != m.n || m.r < 1) throw InputError("tropical determinant needs a square matrix");
  const int k = m.r;

  // Min-cost assignment with shortest augmenting paths over reduced costs.
  // Column 0 is a virtual slot; rows and columns are 1-based here.
  std::vector<Rat> u(k + 1), v(k + 1);
  std::vector<int> match_col(k + 1, 0);  // column -> assigned row
  for (int i = 1; i <= k; ++i) {
    std::vector<int> p_col(k + 1, 0);
    p_col[0] = i;
    int j0 = 0;
    std::vector<std::optional<Rat>> min_slack(k + 1);
    std::vector<int> way(k + 1, 0);
    std::vector<bool> used(k + 1, false);
    do {
      used[j0] = true;
      const int i0 = j0 == 0 ? i : match_col[j0];
      std::optional<Rat> delta;
      int j1 = -1;
      for (int j = 1; j <= k; ++j) {
        if (used[j]) continue;
        const Rat cur = m.at(i0 - 1, j - 1) - u[i0] - v[j];
        if (!min_slack[j] || cur < *min_slack[j]) {
          min_slack[j] = cur;
          way[j] = j0;
        }
        if (!delta || *min_slack[j] < *delta) {
          delta = *min_slack[j];
          j1 = j;
        }
      }
      if (!delta) throw InternalError("assignment: no augmenting column");
      for (int j = 0; j <= k; ++j) {
        if (used[j]) {
          const int row = j == 0 ? i : match_col[j];
          u[row] += *delta;
          v[j] -= *delta;
        } else if (min_slack[j]) {
          *min_slack[j] -= *delta;
        }
      }
      j0 = j1;
    } while (match_col[j0] != 0);
    // Unwind the augmenting path.
    while (j0 != 0) {
      const int j_prev = way[j0];
      match_col[j0] = j_prev == 0 ? i : match_col[j_prev];
      j0 = j_prev;
    }
  }

  Rat value = 0;
  for (int j = 1; j <= k; ++j) value += m.at(match_col[j] - 1, j - 1);

  // Complementary slackness: minimizing permutations are exactly the
  // perfect matchings of the tight subgraph c_ij == u_i + v_j.
  std::vector<std::vector<int>> tight(k);
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      if (m.at(i - 1, j - 1) == u[i] + v[j]) tight[i - 1].push_back(j - 1);
    }
  }
  const BigInt mult = count_perfect_matchings(tight, k);
  if (mult < 1) throw InternalError("assignment: tight subgraph lost its matching");
  return TDetResult{value, mult};
}

TDetResult trop_det(const WeightMatrix& m) {
  if (m.r != m.n || m.r < 1) throw InputError("tropical determinant needs a square matrix");
  return m.r <= 8 ? trop_det_exhaustive(m) : trop_det_assignment(m);
}

namespace {

// All k-subsets of {0..limit-1} in lexicographic order.
bool next_combination(std::vector<int>& idx, int limit) {
  const int k = static_cast<int>(idx.size());
  for (int pos = k - 1; pos >= 0; --pos) {
    if (idx[pos] < limit - (k - pos)) {
      ++idx[pos];
      for (int q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

GenericityResult is_generic(const WeightMatrix& v) {
  const int kmax = std::min(v.r, v.n);
  for (int k = 2; k <= kmax; ++k) {
    std::vector<int> rows(k);
    std::iota(rows.begin(), rows.end(), 0);
    do {
      std::vector<int> cols(k);
      std::iota(cols.begin(), cols.end(), 0);
      do {
        if (trop_det(v.submatrix(rows, cols)).singular()) {
          return GenericityResult{false, rows, cols};
        }
      } while (next_combination(cols, v.n));
    } while (next_combination(rows, v.r));
  }
  return GenericityResult{true, {}, {}};
}

void require_generic(const WeightMatrix& v) {
  GenericityResult res = is_generic(v);
  if (!res.generic) {
    throw GenericityError("weights are not generic: tied tropical minor",
                          res.witness_rows, res.witness_cols);
  }
}

}  // namespace trop
