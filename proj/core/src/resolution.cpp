#include "trophull/resolution.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "trophull/errors.hpp"
#include "trophull/linalg.hpp"

namespace trop {

FacePoset build_face_poset(const std::vector<VertexRecord>& vertices, const WeightMatrix& v) {
  if (vertices.empty()) throw PreconditionError("build_face_poset: no vertices");
  const int r = v.r, n = v.n;
  const int dim_cap = std::min(r, n) - 1;

  FacePoset poset;
  poset.r = r;
  poset.n = n;
  poset.by_dim.emplace_back();
  poset.covers.emplace_back();  // unused slot for dimension 0

  for (const VertexRecord& rec : vertices) {
    Face f;
    f.grid = rec.grid;
    f.dim = 0;
    f.coords_sample = rec.coords;
    poset.by_dim[0].push_back(std::move(f));
    poset.vertex_coords.push_back(rec.coords);
  }
  if (!std::is_sorted(poset.by_dim[0].begin(), poset.by_dim[0].end(),
                      [](const Face& a, const Face& b) { return a.grid < b.grid; })) {
    throw PreconditionError("build_face_poset: vertices must be grid-sorted");
  }
  for (size_t i = 0; i < poset.by_dim[0].size(); ++i) {
    poset.by_dim[0][i].vertex_set = {static_cast<int>(i)};
  }

  for (int d = 1;; ++d) {
    // Unshade one box of every (d-1)-face; keep candidates that still
    // cover all rows and columns and are realizable faces.
    std::map<Grid, std::vector<int>> lower_of;  // candidate grid -> covered faces
    std::set<Grid> rejected;
    const std::vector<Face>& below = poset.by_dim[d - 1];
    for (size_t fi = 0; fi < below.size(); ++fi) {
      const Grid& base = below[fi].grid;
      for (const Cell& box : base.shaded_cells()) {
        if (base.row_shaded_count(box.first) == 1 || base.col_shaded_count(box.second) == 1) {
          continue;  // would empty a row or column
        }
        Grid cand = base;
        cand.set(box.first, box.second, false);
        auto it = lower_of.find(cand);
        if (it != lower_of.end()) {
          it->second.push_back(static_cast<int>(fi));
          continue;
        }
        if (rejected.count(cand)) continue;
        if (!is_cell(cand, v)) {
          rejected.insert(std::move(cand));
          continue;
        }
        lower_of.emplace(std::move(cand), std::vector<int>{static_cast<int>(fi)});
      }
    }
    if (lower_of.empty()) break;
    if (d > dim_cap) {
      throw InternalError("face of dimension " + std::to_string(d) +
                          " above the cap " + std::to_string(dim_cap));
    }

    poset.by_dim.emplace_back();
    poset.covers.emplace_back();
    std::vector<Face>& level = poset.by_dim[d];
    for (const auto& [grid, lowers] : lower_of) {  // std::map: grid-sorted
      Face f;
      f.grid = grid;
      f.dim = d;
      if (f.grid.unshaded_count() != (r - 1) * (n - 1) + d) {
        throw InternalError("face dimension grading violated");
      }
      std::vector<Rat> mean(n, Rat(0));
      for (size_t vi = 0; vi < vertices.size(); ++vi) {
        if (grid.shading_subset_of(vertices[vi].grid)) {
          f.vertex_set.push_back(static_cast<int>(vi));
          for (int j = 0; j < n; ++j) mean[j] += vertices[vi].coords.coords[j];
        }
      }
      if (f.vertex_set.empty()) throw InternalError("face with empty vertex set");
      const Rat scale = Rat(1) / Rat(static_cast<int>(f.vertex_set.size()));
      for (Rat& c : mean) c *= scale;
      f.coords_sample = PointTP(std::move(mean));

      const int upper = static_cast<int>(level.size());
      for (int lower : lowers) poset.covers[d].emplace_back(lower, upper);
      level.push_back(std::move(f));
    }
    std::sort(poset.covers[d].begin(), poset.covers[d].end());
  }

  return poset;
}

namespace {

// Geometric orientation data of one face: anchor point and an ordered
// basis of its direction space, picked greedily over the canonically
// ordered vertices in the projection onto the last n-1 coordinates.
struct FaceFrame {
  RatVec anchor;
  std::vector<RatVec> basis;
};

RatVec projected(const PointTP& p) {
  return RatVec(p.coords.begin() + 1, p.coords.end());
}

FaceFrame frame_of(const Face& f, const std::vector<PointTP>& vertex_coords, int n) {
  FaceFrame frame;
  frame.anchor = projected(vertex_coords[f.vertex_set[0]]);
  IndependentSet indep(n - 1);
  for (size_t k = 1; k < f.vertex_set.size(); ++k) {
    RatVec dir = projected(vertex_coords[f.vertex_set[k]]);
    for (int c = 0; c < n - 1; ++c) dir[c] -= frame.anchor[c];
    if (indep.try_add(dir)) frame.basis.push_back(std::move(dir));
    if (static_cast<int>(frame.basis.size()) == f.dim) break;
  }
  if (static_cast<int>(frame.basis.size()) != f.dim) {
    throw InternalError("face of dimension " + std::to_string(f.dim) +
                        " spans rank " + std::to_string(frame.basis.size()));
  }
  return frame;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

// Component of w orthogonal to the span of basis (within any space
// containing both).
RatVec orthogonal_part(const RatVec& w, const std::vector<RatVec>& basis) {
  if (basis.empty()) return w;
  const size_t d = basis.size();
  RatMat gram(d, RatVec(d));
  RatVec rhs(d);
  for (size_t a = 0; a < d; ++a) {
    for (size_t b = 0; b < d; ++b) gram[a][b] = dot(basis[a], basis[b]);
    rhs[a] = dot(basis[a], w);
  }
  const auto lambda = solve_linear(gram, rhs);
  if (!lambda) throw InternalError("orientation: singular Gram matrix");
  RatVec out = w;
  for (size_t a = 0; a < d; ++a) {
    for (size_t c = 0; c < out.size(); ++c) out[c] -= (*lambda)[a] * basis[a][c];
  }
  return out;
}

// Incidence sign of facet F inside G: +1 when (outward normal of F,
// basis of F) agrees with the orientation of G's basis.
int incidence_sign(const Face& f_lower, const FaceFrame& lower, const Face& f_upper,
                   const FaceFrame& upper, const std::vector<PointTP>& vertex_coords) {
  // A vertex of the upper face outside the lower one points inward.
  int q = -1;
  for (int vi : f_upper.vertex_set) {
    if (!std::binary_search(f_lower.vertex_set.begin(), f_lower.vertex_set.end(), vi)) {
      q = vi;
      break;
    }
  }
  if (q < 0) throw InternalError("orientation: cover without a fresh vertex");

  RatVec w = projected(vertex_coords[q]);
  for (size_t c = 0; c < w.size(); ++c) w[c] -= lower.anchor[c];
  RatVec outward = orthogonal_part(w, lower.basis);
  bool nonzero = false;
  for (const Rat& c : outward) nonzero = nonzero || c != 0;
  if (!nonzero) throw InternalError("orientation: degenerate normal");
  for (Rat& c : outward) c = -c;

  // Express [outward | basis of F] in the basis of G and take the sign of
  // the determinant of the coordinate matrix.
  const size_t dim_up = upper.basis.size();
  const size_t space = outward.size();
  RatMat bg(space, RatVec(dim_up));
  for (size_t col = 0; col < dim_up; ++col) {
    for (size_t row = 0; row < space; ++row) bg[row][col] = upper.basis[col][row];
  }
  RatMat x(dim_up, RatVec(dim_up));
  for (size_t col = 0; col < dim_up; ++col) {
    const RatVec& target = col == 0 ? outward : lower.basis[col - 1];
    const auto sol = solve_linear(bg, target);
    if (!sol) throw InternalError("orientation: facet direction outside face span");
    for (size_t row = 0; row < dim_up; ++row) x[row][col] = (*sol)[row];
  }
  const int sign = det_sign(x);
  if (sign == 0) throw InternalError("orientation: singular change of basis");
  return sign;
}

}  // namespace

std::vector<MonomialMatrix> boundary_matrices(const FacePoset& poset) {
  std::vector<MonomialMatrix> matrices;
  if (poset.max_dim() < 1) return matrices;

  std::vector<std::vector<FaceFrame>> frames(poset.max_dim() + 1);
  for (int d = 0; d <= poset.max_dim(); ++d) {
    frames[d].reserve(poset.by_dim[d].size());
    for (const Face& f : poset.by_dim[d]) {
      frames[d].push_back(frame_of(f, poset.vertex_coords, poset.n));
    }
  }

  for (int d = 1; d <= poset.max_dim(); ++d) {
    MonomialMatrix m;
    for (const Face& f : poset.by_dim[d - 1]) m.row_labels.push_back(monomial_from_unshaded(f.grid));
    for (const Face& f : poset.by_dim[d]) m.col_labels.push_back(monomial_from_unshaded(f.grid));
    m.entries.assign(m.rows(), std::vector<int>(m.cols(), 0));
    for (const auto& [lower, upper] : poset.covers[d]) {
      m.entries[lower][upper] = incidence_sign(poset.by_dim[d - 1][lower], frames[d - 1][lower],
                                               poset.by_dim[d][upper], frames[d][upper],
                                               poset.vertex_coords);
    }
    matrices.push_back(std::move(m));
  }

  // Chain-complex law: consecutive boundaries compose to zero.
  for (size_t k = 0; k + 1 < matrices.size(); ++k) {
    const MonomialMatrix& a = matrices[k];
    const MonomialMatrix& b = matrices[k + 1];
    for (int i = 0; i < a.rows(); ++i) {
      for (int j = 0; j < b.cols(); ++j) {
        int sum = 0;
        for (int t = 0; t < a.cols(); ++t) sum += a.entries[i][t] * b.entries[t][j];
        if (sum != 0) throw InternalError("boundary matrices do not compose to zero");
      }
    }
  }
  return matrices;
}

std::vector<long long> f_vector(const FacePoset& poset) {
  std::vector<long long> f;
  for (const auto& level : poset.by_dim) f.push_back(static_cast<long long>(level.size()));
  return f;
}

BigInt generic_face_count(int r, int n, int i) {
  if (i < 0 || r - i - 1 < 0 || n - i - 1 < 0) return 0;
  const BigInt numer = factorial_big(static_cast<unsigned>(r + n - i - 2));
  return numer / (factorial_big(static_cast<unsigned>(r - i - 1)) *
                  factorial_big(static_cast<unsigned>(n - i - 1)) *
                  factorial_big(static_cast<unsigned>(i)));
}

std::vector<BigInt> generic_f_vector(int r, int n) {
  std::vector<BigInt> f;
  for (int i = 0; i <= std::min(r, n) - 1; ++i) f.push_back(generic_face_count(r, n, i));
  return f;
}

FMatrix f_matrix(const FacePoset& poset) {
  FMatrix fm;
  for (int d = 0; d <= poset.max_dim(); ++d) {
    for (const Face& f : poset.by_dim[d]) {
      ++fm.counts[{d, static_cast<int>(f.vertex_set.size())}];
    }
  }
  return fm;
}

std::vector<Face> maximal_faces(const FacePoset& poset,
                                const std::vector<MonomialMatrix>& matrices) {
  std::vector<Face> out;
  for (int d = 0; d <= poset.max_dim(); ++d) {
    const int count = poset.face_count(d);
    std::vector<bool> has_upper(count, false);
    if (d + 1 <= poset.max_dim()) {
      const MonomialMatrix& next = matrices[d];  // matrices[d] is M_{d+1}
      for (int row = 0; row < next.rows(); ++row) {
        for (int col = 0; col < next.cols(); ++col) {
          if (next.entries[row][col] != 0) has_upper[row] = true;
        }
      }
    }
    for (int i = 0; i < count; ++i) {
      if (d == poset.n - 1 || !has_upper[i]) out.push_back(poset.by_dim[d][i]);
    }
  }
  return out;
}

bool minimality_linearity_check(const std::vector<MonomialMatrix>& matrices) {
  std::vector<SqfMonomial> seen;
  for (size_t k = 0; k < matrices.size(); ++k) {
    const MonomialMatrix& m = matrices[k];
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = 0; j < m.cols(); ++j) {
        if (m.entries[i][j] == 0) continue;
        if (m.col_labels[j].degree() != m.row_labels[i].degree() + 1) return false;
        if (!m.row_labels[i].divides(m.col_labels[j])) return false;
      }
    }
    // Collect each grading's labels once; M_{i+1} rows repeat M_i columns.
    if (k == 0) seen.insert(seen.end(), m.row_labels.begin(), m.row_labels.end());
    seen.insert(seen.end(), m.col_labels.begin(), m.col_labels.end());
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

}  // namespace trop
