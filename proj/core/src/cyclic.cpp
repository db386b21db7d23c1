#include "trophull/cyclic.hpp"

#include <algorithm>
#include <map>

#include "trophull/errors.hpp"
#include "trophull/series.hpp"
#include "trophull/type_geometry.hpp"

namespace trop {

WeightMatrix cyclic_points(int r, int n) {
  if (r < 1 || n < 2) throw InputError("cyclic_points needs r >= 1, n >= 2");
  WeightMatrix v(r, n);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < n; ++j) {
      v.at(i, j) = Rat(i) * Rat(j);
    }
  }
  return v;
}

int LatticePath::diag_count() const {
  return static_cast<int>(std::count(steps.begin(), steps.end(), 'D'));
}

Grid LatticePath::to_grid(int rows, int cols) const {
  Grid g(rows, cols);
  int i = rows - 1, j = 0;  // lower-left corner
  g.set(i, j, true);
  for (char s : steps) {
    if (s == 'R') {
      ++j;
    } else if (s == 'U') {
      --i;
    } else if (s == 'D') {
      --i;
      ++j;
    } else {
      throw InputError("lattice path steps must be R, U or D");
    }
    if (i < 0 || j >= cols) throw InputError("lattice path leaves the grid");
    g.set(i, j, true);
  }
  if (i != 0 || j != cols - 1) throw InputError("lattice path misses the upper-right corner");
  return g;
}

namespace {

// All arrangements of #D = k, #U = r-1-k, #R = n-1-k steps.
std::vector<std::string> paths_with_diagonals(int r, int n, int k) {
  const int ups = r - 1 - k, rights = n - 1 - k;
  std::vector<std::string> out;
  if (ups < 0 || rights < 0) return out;
  std::string current;
  auto rec = [&](auto&& self, int u, int g, int d) -> void {
    if (u == 0 && g == 0 && d == 0) {
      out.push_back(current);
      return;
    }
    if (d > 0) {
      current.push_back('D');
      self(self, u, g, d - 1);
      current.pop_back();
    }
    if (g > 0) {
      current.push_back('R');
      self(self, u, g - 1, d);
      current.pop_back();
    }
    if (u > 0) {
      current.push_back('U');
      self(self, u - 1, g, d);
      current.pop_back();
    }
  };
  rec(rec, ups, rights, k);
  return out;
}

// Replace the m-th diagonal step by UR (corner = upper-left box) or RU.
std::string resolve_diagonal(const std::string& steps, int which, bool up_first) {
  std::string out;
  int seen = 0;
  for (char s : steps) {
    if (s == 'D' && seen++ == which) {
      out += up_first ? "UR" : "RU";
    } else {
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace

std::vector<Grid> path_vertices(int r, int n) {
  if (r < 1 || n < 2) throw InputError("path_vertices needs r >= 1, n >= 2");
  std::vector<Grid> grids;
  for (const std::string& p : paths_with_diagonals(r, n, 0)) {
    grids.push_back(LatticePath{p}.to_grid(r, n));
  }
  std::sort(grids.begin(), grids.end());
  return grids;
}

FacePoset cyclic_faces(int r, int n) {
  const WeightMatrix v = cyclic_points(r, n);
  FacePoset poset;
  poset.r = r;
  poset.n = n;

  // Vertices: pure R/U paths, canonical grid order.
  std::vector<std::string> vertex_paths = paths_with_diagonals(r, n, 0);
  std::sort(vertex_paths.begin(), vertex_paths.end(), [&](const std::string& a, const std::string& b) {
    return LatticePath{a}.to_grid(r, n) < LatticePath{b}.to_grid(r, n);
  });
  std::map<std::string, int> vertex_index;
  poset.by_dim.emplace_back();
  poset.covers.emplace_back();
  for (const std::string& p : vertex_paths) {
    Face f;
    f.grid = LatticePath{p}.to_grid(r, n);
    f.dim = 0;
    f.vertex_set = {static_cast<int>(poset.by_dim[0].size())};
    f.coords_sample = coords_of(f.grid, v);
    vertex_index.emplace(p, static_cast<int>(poset.by_dim[0].size()));
    poset.vertex_coords.push_back(f.coords_sample);
    poset.by_dim[0].push_back(std::move(f));
  }

  const int top = std::min(r, n) - 1;
  std::map<std::string, int> below_index = vertex_index;
  for (int k = 1; k <= top; ++k) {
    std::vector<std::string> level_paths = paths_with_diagonals(r, n, k);
    if (level_paths.empty()) break;
    std::sort(level_paths.begin(), level_paths.end(),
              [&](const std::string& a, const std::string& b) {
                return LatticePath{a}.to_grid(r, n) < LatticePath{b}.to_grid(r, n);
              });
    poset.by_dim.emplace_back();
    poset.covers.emplace_back();
    std::map<std::string, int> level_index;

    for (const std::string& p : level_paths) {
      Face f;
      f.grid = LatticePath{p}.to_grid(r, n);
      f.dim = k;

      // Vertex set: the 2^k full resolutions of the diagonal steps.
      std::vector<std::string> partial{p};
      for (int step = 0; step < k; ++step) {
        std::vector<std::string> next;
        for (const std::string& q : partial) {
          next.push_back(resolve_diagonal(q, 0, true));
          next.push_back(resolve_diagonal(q, 0, false));
        }
        partial = std::move(next);
      }
      for (const std::string& q : partial) f.vertex_set.push_back(vertex_index.at(q));
      std::sort(f.vertex_set.begin(), f.vertex_set.end());
      f.vertex_set.erase(std::unique(f.vertex_set.begin(), f.vertex_set.end()), f.vertex_set.end());
      if (f.vertex_set.size() != (size_t{1} << k)) {
        throw InternalError("cyclic face does not have 2^k vertices");
      }

      std::vector<Rat> mean(n, Rat(0));
      for (int vi : f.vertex_set) {
        for (int j = 0; j < n; ++j) mean[j] += poset.vertex_coords[vi].coords[j];
      }
      const Rat scale = Rat(1) / Rat(static_cast<int>(f.vertex_set.size()));
      for (Rat& c : mean) c *= scale;
      f.coords_sample = PointTP(std::move(mean));

      const int upper = static_cast<int>(poset.by_dim[k].size());
      // Covers: resolving any one diagonal step drops the dimension by one.
      std::vector<int> lowers;
      for (int which = 0; which < k; ++which) {
        lowers.push_back(below_index.at(resolve_diagonal(p, which, true)));
        lowers.push_back(below_index.at(resolve_diagonal(p, which, false)));
      }
      std::sort(lowers.begin(), lowers.end());
      lowers.erase(std::unique(lowers.begin(), lowers.end()), lowers.end());
      for (int lower : lowers) poset.covers[k].emplace_back(lower, upper);

      level_index.emplace(p, upper);
      poset.by_dim[k].push_back(std::move(f));
    }
    std::sort(poset.covers[k].begin(), poset.covers[k].end());
    below_index = std::move(level_index);
  }
  return poset;
}

namespace {

std::vector<int> diagram_of_path(const std::string& steps) {
  // mu_q = number of R steps before the q-th U step; the diagram rows are
  // these counts in decreasing order, zeros dropped.
  std::vector<int> mu;
  int rights = 0;
  for (char s : steps) {
    if (s == 'R') ++rights;
    if (s == 'U') mu.push_back(rights);
  }
  std::reverse(mu.begin(), mu.end());
  while (!mu.empty() && mu.back() == 0) mu.pop_back();
  return mu;
}

}  // namespace

YoungGraph young_skeleton(int r, int n) {
  const FacePoset poset = cyclic_faces(r, n);

  // Recover the R/U step word of each vertex from its grid.
  YoungGraph g;
  for (const Face& f : poset.by_dim[0]) {
    std::string steps;
    int i = r - 1, j = 0;
    while (i != 0 || j != n - 1) {
      if (j + 1 < n && f.grid.at(i, j + 1)) {
        steps.push_back('R');
        ++j;
      } else {
        steps.push_back('U');
        --i;
      }
    }
    g.diagrams.push_back(diagram_of_path(steps));
  }
  if (poset.max_dim() >= 1) {
    for (const Face& f : poset.by_dim[1]) {
      g.edges.emplace_back(f.vertex_set[0], f.vertex_set[1]);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

YoungGraph young_lattice_hasse(int a, int b) {
  // All partitions with at most a rows, entries at most b.
  std::vector<std::vector<int>> diagrams;
  std::vector<int> current;
  auto rec = [&](auto&& self, int row, int maxpart) -> void {
    diagrams.push_back(current);
    if (row == a) return;
    for (int part = 1; part <= maxpart; ++part) {
      current.push_back(part);
      self(self, row + 1, part);
      current.pop_back();
    }
  };
  if (a > 0 && b > 0) {
    rec(rec, 0, b);
  } else {
    diagrams.push_back({});
  }
  std::sort(diagrams.begin(), diagrams.end());

  YoungGraph g;
  g.diagrams = diagrams;
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < diagrams.size(); ++i) index.emplace(diagrams[i], static_cast<int>(i));
  for (size_t i = 0; i < diagrams.size(); ++i) {
    // Covers: add one box to any row (or start a new row) keeping shape.
    const std::vector<int>& lam = diagrams[i];
    for (size_t row = 0; row <= lam.size(); ++row) {
      std::vector<int> mu = lam;
      if (row < lam.size()) {
        ++mu[row];
      } else {
        mu.push_back(1);
      }
      if (static_cast<int>(mu.size()) > a) continue;
      if (mu[0] > b) continue;
      bool shape = true;
      for (size_t q = 1; q < mu.size(); ++q) shape = shape && mu[q] <= mu[q - 1];
      if (!shape) continue;
      auto it = index.find(mu);
      if (it == index.end()) continue;
      const int x = static_cast<int>(i), y = it->second;
      g.edges.emplace_back(std::min(x, y), std::max(x, y));
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

namespace {

// Stripes are (width, height) pairs with min == 1; a tuple uses total
// width n and total height r.
unsigned long long stripe_tuples_dp(int r, int n, int k) {
  if (k < 0) return 0;
  const int tuple_len = k + 1;
  // dp[t][wu][hu]: t stripes placed using wu width and hu height.
  std::vector<std::vector<std::vector<unsigned long long>>> dp(
      tuple_len + 1, std::vector<std::vector<unsigned long long>>(
                         n + 1, std::vector<unsigned long long>(r + 1, 0)));
  dp[0][0][0] = 1;
  for (int t = 0; t < tuple_len; ++t) {
    for (int wu = 0; wu <= n; ++wu) {
      for (int hu = 0; hu <= r; ++hu) {
        const unsigned long long ways = dp[t][wu][hu];
        if (ways == 0) continue;
        for (int w = 1; wu + w <= n && hu + 1 <= r; ++w) {
          dp[t + 1][wu + w][hu + 1] += ways;  // horizontal (w, 1)
        }
        for (int h = 2; hu + h <= r && wu + 1 <= n; ++h) {
          dp[t + 1][wu + 1][hu + h] += ways;  // vertical (1, h), h >= 2
        }
      }
    }
  }
  return dp[tuple_len][n][r];
}

}  // namespace

unsigned long long count_maximal_faces_enum(int r, int n, int k) {
  if (k < 0) return 0;
  unsigned long long total = 0;
  auto rec = [&](auto&& self, int left_w, int left_h, int stripes) -> void {
    if (stripes == 0) {
      if (left_w == 0 && left_h == 0) ++total;
      return;
    }
    for (int w = 1; w <= left_w && left_h >= 1; ++w) {
      self(self, left_w - w, left_h - 1, stripes - 1);
    }
    for (int h = 2; h <= left_h && left_w >= 1; ++h) {
      self(self, left_w - 1, left_h - h, stripes - 1);
    }
  };
  rec(rec, n, r, k + 1);
  return total;
}

unsigned long long count_maximal_faces(int r, int n, int k) {
  if (r < 1 || n < 1) throw InputError("count_maximal_faces needs r, n >= 1");
  const unsigned long long dp = stripe_tuples_dp(r, n, k);
  const unsigned long long direct = count_maximal_faces_enum(r, n, k);
  if (dp != direct) {
    throw InternalError("stripe DP disagrees with direct enumeration");
  }
  return dp;
}

GfReport gf_coefficient_check(int r, int n, int k) {
  if (r < 1 || n < 1 || k < 0) throw ConfigError("gf_coefficient_check needs r, n >= 1, k >= 0");
  if (r > 20 || n > 20 || k > 20) throw ConfigError("gf_coefficient_check truncation too large");
  const int cx = r, cy = n, cz = k + 1;

  GfReport rep;
  rep.r = r;
  rep.n = n;
  rep.k = k;
  rep.boundary_case = r == 1 || n == 1;
  rep.enumeration = count_maximal_faces(r, n, k);

  // Exponential form: d/dz exp(z (y e^x - y + x e^y - x - xy)), value
  // scaled by r! n! k!.
  Series3 ex = Series3::constant(Rat(0), cx, cy, cz);
  Series3 ey = Series3::constant(Rat(0), cx, cy, cz);
  {
    Rat fact = 1;
    for (int m = 0; m <= cx; ++m) {
      if (m > 0) fact *= m;
      ex = ex + Series3::monomial(Rat(1) / fact, m, 0, 0, cx, cy, cz);
    }
    fact = 1;
    for (int m = 0; m <= cy; ++m) {
      if (m > 0) fact *= m;
      ey = ey + Series3::monomial(Rat(1) / fact, 0, m, 0, cx, cy, cz);
    }
  }
  const Series3 x = Series3::monomial(Rat(1), 1, 0, 0, cx, cy, cz);
  const Series3 y = Series3::monomial(Rat(1), 0, 1, 0, cx, cy, cz);
  const Series3 z = Series3::monomial(Rat(1), 0, 0, 1, cx, cy, cz);
  const Series3 stripe_egf = y * ex - y + x * ey - x - x * y;
  const Series3 egf = (z * stripe_egf).exp().dz();
  rep.egf_form = egf.coeff(r, n, k) * Rat(factorial_big(static_cast<unsigned>(r))) *
                    Rat(factorial_big(static_cast<unsigned>(n))) *
                    Rat(factorial_big(static_cast<unsigned>(k)));

  // Ordinary form: numerator xy/(1-y) + yx^2/(1-x); the candidate
  // denominator subtracts the stripe terms, the corrected one adds them.
  const Series3 t_h = x * y * geometric_series(1, cx, cy, cz);        // xy/(1-y)
  const Series3 t_v = x * x * y * geometric_series(0, cx, cy, cz);    // yx^2/(1-x)
  const Series3 numer = t_h + t_v;
  const Series3 one = Series3::constant(Rat(1), cx, cy, cz);
  const Series3 ogf_minus = numer * (one - z * (t_h - t_v)).reciprocal();
  const Series3 ogf_corrected = numer * (one - z * (t_h + t_v)).reciprocal();
  rep.ogf_form = ogf_minus.coeff(r, n, k);
  rep.ogf_sign_corrected = ogf_corrected.coeff(r, n, k);

  const Rat truth = Rat(static_cast<long long>(rep.enumeration));
  rep.egf_matches = rep.egf_form == truth;
  rep.ogf_matches = rep.ogf_form == truth;
  rep.corrected_matches = rep.ogf_sign_corrected == truth;
  return rep;
}

}  // namespace trop
