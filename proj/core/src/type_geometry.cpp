#include "trophull/type_geometry.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <unordered_set>

#include "trophull/errors.hpp"
#include "trophull/tropical.hpp"

namespace trop {

Grid type_of(const PointTP& z, const WeightMatrix& v) {
  if (z.dim() != v.n) throw InputError("type_of: dimension mismatch");
  Grid g(v.r, v.n);
  for (int i = 0; i < v.r; ++i) {
    Rat row_min = v.at(i, 0) - z.coords[0];
    for (int j = 1; j < v.n; ++j) {
      const Rat d = v.at(i, j) - z.coords[j];
      if (d < row_min) row_min = d;
    }
    for (int j = 0; j < v.n; ++j) {
      if (v.at(i, j) - z.coords[j] == row_min) g.set(i, j, true);
    }
  }
  return g;
}

DualPolyhedronPoint dual_lift(const PointTP& z, const WeightMatrix& v) {
  if (z.dim() != v.n) throw InputError("dual_lift: dimension mismatch");
  DualPolyhedronPoint p;
  p.z = z.coords;  // canonical already: z[0] == 0
  p.y.resize(v.r);
  for (int i = 0; i < v.r; ++i) {
    Rat m = v.at(i, 0) - z.coords[0];
    for (int j = 1; j < v.n; ++j) {
      const Rat d = v.at(i, j) - z.coords[j];
      if (d < m) m = d;
    }
    p.y[i] = m;
  }
  return p;
}

bool hull_contains(const WeightMatrix& v, const PointTP& z) {
  const Grid t = type_of(z, v);
  for (int j = 0; j < v.n; ++j) {
    if (t.col_shaded_count(j) == 0) return false;
  }
  return true;
}

namespace {

// Node numbering for the bipartite constraint graph: rows 0..r-1,
// columns r..r+n-1.
struct Potentials {
  std::vector<Rat> value;     // y_i for rows, z_j for columns
  std::vector<int> component;
  int component_count = 0;
  bool consistent = true;
};

// Propagate y_i + z_j = v_ij over the shaded boxes; label connected
// components and detect inconsistent cycles.
Potentials propagate_tight(const Grid& g, const WeightMatrix& v) {
  const int r = v.r, n = v.n, total = r + n;
  Potentials p;
  p.value.assign(total, Rat(0));
  p.component.assign(total, -1);

  std::vector<std::vector<int>> adj(total);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < n; ++j) {
      if (g.at(i, j)) {
        adj[i].push_back(r + j);
        adj[r + j].push_back(i);
      }
    }
  }

  for (int start = 0; start < total; ++start) {
    if (p.component[start] != -1) continue;
    const int comp = p.component_count++;
    p.component[start] = comp;
    p.value[start] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int a = queue.front();
      queue.pop_front();
      for (int b : adj[a]) {
        const int row = a < r ? a : b;
        const int col = a < r ? b : a;
        const Rat w = v.at(row, col - r);
        const Rat forced = w - p.value[a];  // y + z = v
        if (p.component[b] == -1) {
          p.component[b] = comp;
          p.value[b] = forced;
          queue.push_back(b);
        } else if (p.value[b] != forced) {
          p.consistent = false;
          return p;
        }
      }
    }
  }
  return p;
}

}  // namespace

bool is_cell(const Grid& g, const WeightMatrix& v) {
  if (g.rows != v.r || g.cols != v.n) throw InputError("is_cell: shape mismatch");
  const int r = v.r, n = v.n;

  const Potentials p = propagate_tight(g, v);
  if (!p.consistent) return false;

  // Strict constraints on the free shift of each component: moving
  // component c by t adds t to its rows and -t to its columns, so an
  // unshaded box (i,j) demands t_{c(i)} - t_{c(j)} < slack_ij.
  const int m = p.component_count;
  std::vector<std::vector<std::optional<Rat>>> dist(m, std::vector<std::optional<Rat>>(m));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < n; ++j) {
      if (g.at(i, j)) continue;
      const Rat slack = v.at(i, j) - p.value[i] - p.value[r + j];
      const int a = p.component[i];
      const int b = p.component[r + j];
      if (a == b) {
        if (!(slack > 0)) return false;
      } else if (!dist[b][a] || slack < *dist[b][a]) {
        dist[b][a] = slack;  // edge b -> a: t_a < t_b + slack
      }
    }
  }

  // The strict system is feasible iff every directed cycle has positive
  // total slack; min-plus closure detects any nonpositive cycle.
  for (int mid = 0; mid < m; ++mid) {
    for (int a = 0; a < m; ++a) {
      if (!dist[a][mid]) continue;
      for (int b = 0; b < m; ++b) {
        if (!dist[mid][b]) continue;
        const Rat through = *dist[a][mid] + *dist[mid][b];
        if (!dist[a][b] || through < *dist[a][b]) dist[a][b] = through;
      }
    }
  }
  for (int a = 0; a < m; ++a) {
    if (dist[a][a] && !(*dist[a][a] > 0)) return false;
  }
  return true;
}

PointTP coords_of(const Grid& g, const WeightMatrix& v) {
  if (g.rows != v.r || g.cols != v.n) throw InputError("coords_of: shape mismatch");
  const int n = v.n;

  // Column connectivity through shared shaded rows fixes all z
  // differences; walk a spanning tree from column 0.
  std::vector<std::optional<Rat>> z(n);
  z[0] = 0;
  std::deque<int> queue{0};
  std::vector<std::vector<int>> cols_of_row(v.r);
  for (int i = 0; i < v.r; ++i) {
    for (int j = 0; j < n; ++j) {
      if (g.at(i, j)) cols_of_row[i].push_back(j);
    }
  }
  while (!queue.empty()) {
    const int k = queue.front();
    queue.pop_front();
    for (int i = 0; i < v.r; ++i) {
      if (!g.at(i, k)) continue;
      for (int l : cols_of_row[i]) {
        const Rat forced = *z[k] + v.at(i, l) - v.at(i, k);
        if (!z[l]) {
          z[l] = forced;
          queue.push_back(l);
        } else if (*z[l] != forced) {
          throw InternalError("coords_of: inconsistent tight system");
        }
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    if (!z[j]) {
      throw PreconditionError("coords_of: shaded boxes do not connect all columns");
    }
  }
  std::vector<Rat> out(n);
  for (int j = 0; j < n; ++j) out[j] = *z[j];
  return PointTP(std::move(out));
}

namespace {

struct PivotState {
  Grid grid;
  std::vector<Rat> y;
  std::vector<Rat> z;
};

// Re-anchor the quotient representative at z[0] == 0.
void renormalize(PivotState& s) {
  const Rat c = s.z[0];
  if (c == 0) return;
  for (Rat& zj : s.z) zj -= c;
  for (Rat& yi : s.y) yi += c;
}

}  // namespace

std::vector<VertexRecord> enumerate_vertices(const WeightMatrix& v) {
  require_generic(v);
  const int r = v.r, n = v.n;

  PivotState start;
  {
    const PointTP z0 = v.row_point(0);
    start.grid = type_of(z0, v);
    const DualPolyhedronPoint d = dual_lift(z0, v);
    start.y = d.y;
    start.z = d.z;
  }
  if (!start.grid.is_spanning_tree()) {
    throw InternalError("enumerate_vertices: start type is not a vertex grid");
  }

  std::unordered_set<Grid, GridHash> visited{start.grid};
  std::deque<PivotState> frontier{start};
  std::vector<PivotState> found{start};

  while (!frontier.empty()) {
    const PivotState cur = frontier.front();
    frontier.pop_front();

    const std::vector<Cell> tree = cur.grid.shaded_cells();
    for (const Cell& removed : tree) {
      // Split the tree at the removed edge; mark the side holding row 0
      // as fixed. The other side slides along the polyhedron edge.
      std::vector<bool> moving(r + n, true);
      {
        std::deque<int> queue{0};
        moving[0] = false;
        while (!queue.empty()) {
          const int a = queue.front();
          queue.pop_front();
          for (const Cell& e : tree) {
            if (e == removed) continue;
            const int ra = e.first, ca = r + e.second;
            int b = -1;
            if (ra == a) b = ca;
            else if (ca == a) b = ra;
            if (b != -1 && moving[b]) {
              moving[b] = false;
              queue.push_back(b);
            }
          }
        }
      }

      // Direction that loosens the removed constraint: its y+z changes by
      // chg * t per unit shift, so pick t of sign -chg.
      const int chg_removed = (moving[removed.first] ? 1 : 0) - (moving[r + removed.second] ? 1 : 0);
      const int dir = -chg_removed;

      // Minimum ratio over off-tree constraints tightened by the move.
      std::optional<Rat> step;
      Cell entering{-1, -1};
      bool tie = false;
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < n; ++j) {
          if (cur.grid.at(i, j)) continue;
          const int chg = (moving[i] ? 1 : 0) - (moving[r + j] ? 1 : 0);
          if (chg * dir != 1) continue;
          const Rat slack = v.at(i, j) - cur.y[i] - cur.z[j];
          if (!step || slack < *step) {
            step = slack;
            entering = Cell{i, j};
            tie = false;
          } else if (slack == *step) {
            tie = true;
          }
        }
      }
      if (!step) continue;  // unbounded ray, no neighboring vertex
      if (tie || !(*step > 0)) {
        throw InternalError("enumerate_vertices: degenerate pivot on generic input");
      }

      PivotState next = cur;
      const Rat t = Rat(dir) * *step;
      for (int i = 0; i < r; ++i) {
        if (moving[i]) next.y[i] += t;
      }
      for (int j = 0; j < n; ++j) {
        if (moving[r + j]) next.z[j] -= t;
      }
      renormalize(next);
      next.grid.set(removed.first, removed.second, false);
      next.grid.set(entering.first, entering.second, true);

      if (visited.insert(next.grid).second) {
        frontier.push_back(next);
        found.push_back(next);
      }
    }
  }

  std::sort(found.begin(), found.end(),
            [](const PivotState& a, const PivotState& b) { return a.grid < b.grid; });

  std::vector<VertexRecord> out;
  out.reserve(found.size());
  for (const PivotState& s : found) {
    VertexRecord rec;
    rec.grid = s.grid;
    rec.coords = PointTP(s.z);
    rec.dual_point = DualPolyhedronPoint{s.y, s.z};
    if (!rec.grid.is_spanning_tree()) {
      throw InternalError("enumerate_vertices: non-tree vertex grid");
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace trop
