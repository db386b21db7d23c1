#include "trophull/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "trophull/errors.hpp"

namespace trop {

namespace {

bool all_zero(const std::vector<Rat>& v) {
  for (const Rat& c : v) {
    if (c != 0) return false;
  }
  return true;
}

}  // namespace

bool fm_feasible(std::vector<LinConstraint> constraints, int num_vars) {
  for (const LinConstraint& c : constraints) {
    if (static_cast<int>(c.coeffs.size()) != num_vars) {
      throw InputError("fm_feasible: constraint arity mismatch");
    }
  }

  // Substitute the equalities away first.
  std::vector<LinConstraint> inequalities;
  std::vector<LinConstraint> equalities;
  for (LinConstraint& c : constraints) {
    (c.kind == LinConstraint::Kind::Equal ? equalities : inequalities).push_back(std::move(c));
  }
  while (!equalities.empty()) {
    LinConstraint eq = std::move(equalities.back());
    equalities.pop_back();
    int pivot = -1;
    for (int k = 0; k < num_vars; ++k) {
      if (eq.coeffs[k] != 0) {
        pivot = k;
        break;
      }
    }
    if (pivot == -1) {
      if (eq.rhs != 0) return false;  // 0 = nonzero
      continue;
    }
    auto substitute = [&](LinConstraint& c) {
      if (c.coeffs[pivot] == 0) return;
      const Rat factor = c.coeffs[pivot] / eq.coeffs[pivot];
      for (int k = 0; k < num_vars; ++k) c.coeffs[k] -= factor * eq.coeffs[k];
      c.rhs -= factor * eq.rhs;
    };
    for (LinConstraint& c : equalities) substitute(c);
    for (LinConstraint& c : inequalities) substitute(c);
  }

  // Fourier-Motzkin elimination with strictness tracking; keep only the
  // tightest bound per coefficient pattern to curb growth.
  auto compress = [num_vars](std::vector<LinConstraint>& cs) {
    std::map<std::vector<Rat>, LinConstraint> best;
    std::vector<LinConstraint> constants;
    for (LinConstraint& c : cs) {
      if (all_zero(c.coeffs)) {
        constants.push_back(std::move(c));
        continue;
      }
      // Scale so the first nonzero coefficient is +-1 for canonical keys.
      Rat lead;
      for (int k = 0; k < num_vars; ++k) {
        if (c.coeffs[k] != 0) {
          lead = abs(c.coeffs[k]);
          break;
        }
      }
      for (Rat& v : c.coeffs) v /= lead;
      c.rhs /= lead;
      auto it = best.find(c.coeffs);
      if (it == best.end()) {
        best.emplace(c.coeffs, std::move(c));
      } else {
        LinConstraint& kept = it->second;
        const bool tighter = c.rhs < kept.rhs ||
                             (c.rhs == kept.rhs && c.kind == LinConstraint::Kind::StrictLess);
        if (tighter) kept = std::move(c);
      }
    }
    cs.clear();
    for (auto& [key, c] : best) cs.push_back(std::move(c));
    cs.insert(cs.end(), constants.begin(), constants.end());
  };

  compress(inequalities);
  for (int round = 0; round < num_vars; ++round) {
    // Pick the variable with the smallest lower*upper fan-out.
    int var = -1;
    long long best_cost = -1;
    for (int k = 0; k < num_vars; ++k) {
      long long lowers = 0, uppers = 0;
      for (const LinConstraint& c : inequalities) {
        if (c.coeffs[k] > 0) ++uppers;
        if (c.coeffs[k] < 0) ++lowers;
      }
      if (lowers + uppers == 0) continue;
      const long long cost = lowers * uppers;
      if (var == -1 || cost < best_cost) {
        var = k;
        best_cost = cost;
      }
    }
    if (var == -1) break;

    std::vector<LinConstraint> keep, lowers, uppers;
    for (LinConstraint& c : inequalities) {
      if (c.coeffs[var] > 0) {
        uppers.push_back(std::move(c));
      } else if (c.coeffs[var] < 0) {
        lowers.push_back(std::move(c));
      } else {
        keep.push_back(std::move(c));
      }
    }
    for (const LinConstraint& lo : lowers) {
      for (const LinConstraint& up : uppers) {
        LinConstraint merged;
        merged.coeffs.assign(num_vars, Rat(0));
        const Rat a = -lo.coeffs[var];  // > 0
        const Rat b = up.coeffs[var];   // > 0
        for (int k = 0; k < num_vars; ++k) {
          merged.coeffs[k] = b * lo.coeffs[k] + a * up.coeffs[k];
        }
        merged.rhs = b * lo.rhs + a * up.rhs;
        merged.kind = (lo.kind == LinConstraint::Kind::StrictLess ||
                       up.kind == LinConstraint::Kind::StrictLess)
                          ? LinConstraint::Kind::StrictLess
                          : LinConstraint::Kind::WeakLess;
        keep.push_back(std::move(merged));
      }
    }
    inequalities = std::move(keep);
    compress(inequalities);
  }

  for (const LinConstraint& c : inequalities) {
    if (!all_zero(c.coeffs)) throw InternalError("fm_feasible: variable survived elimination");
    if (c.kind == LinConstraint::Kind::StrictLess ? !(Rat(0) < c.rhs) : !(Rat(0) <= c.rhs)) {
      return false;
    }
  }
  return true;
}

bool grid_exactly_realizable_lp(const Grid& g, const WeightMatrix& v) {
  // Variables y_0..y_{r-1}, z_1..z_{n-1}; z_0 pinned to 0.
  const int r = v.r, n = v.n;
  const int num_vars = r + n - 1;
  auto var_y = [](int i) { return i; };
  auto var_z = [r](int j) { return r + j - 1; };  // j >= 1

  std::vector<LinConstraint> cs;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < n; ++j) {
      LinConstraint c;
      c.coeffs.assign(num_vars, Rat(0));
      c.coeffs[var_y(i)] = 1;
      if (j >= 1) c.coeffs[var_z(j)] = 1;
      c.rhs = v.at(i, j);
      c.kind = g.at(i, j) ? LinConstraint::Kind::Equal : LinConstraint::Kind::StrictLess;
      cs.push_back(std::move(c));
    }
  }
  return fm_feasible(std::move(cs), num_vars);
}

namespace {

bool next_subset(std::vector<int>& idx, int limit) {
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

std::vector<Grid> brute_force_vertex_grids(const WeightMatrix& v) {
  const int r = v.r, n = v.n, cells = r * n;
  const int tree_size = r + n - 1;
  std::vector<Grid> out;
  if (tree_size > cells) return out;

  std::vector<int> pick(tree_size);
  std::iota(pick.begin(), pick.end(), 0);
  do {
    Grid g(r, n);
    for (int c : pick) g.shaded[c] = true;
    if (!g.is_spanning_tree()) continue;
    if (grid_exactly_realizable_lp(g, v)) out.push_back(g);
  } while (next_subset(pick, cells));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Grid>> brute_force_face_grids(const WeightMatrix& v) {
  const int r = v.r, n = v.n, cells = r * n;
  if (cells > 24) throw PreconditionError("brute_force_face_grids: grid too large");
  const int base_unshaded = (r - 1) * (n - 1);

  std::vector<std::vector<Grid>> by_dim;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    const int shaded = std::popcount(mask);
    if (shaded > r + n - 1) continue;
    Grid g(r, n);
    for (int c = 0; c < cells; ++c) {
      if (mask & (std::uint64_t{1} << c)) g.shaded[c] = true;
    }
    if (!g.covers_rows_and_cols()) continue;
    if (!grid_exactly_realizable_lp(g, v)) continue;
    const int dim = g.unshaded_count() - base_unshaded;
    if (dim < 0) throw InternalError("realizable grid below the dimension grading");
    if (dim >= static_cast<int>(by_dim.size())) by_dim.resize(dim + 1);
    by_dim[dim].push_back(std::move(g));
  }
  for (std::vector<Grid>& level : by_dim) std::sort(level.begin(), level.end());
  return by_dim;
}

}  // namespace trop
