#include "trophull/halfspace.hpp"

#include <algorithm>

#include "trophull/errors.hpp"

namespace trop {

bool halfspace_contains(const Halfspace& h, const PointTP& z) {
  if (z.dim() != h.apex.dim()) throw InputError("halfspace_contains: dimension mismatch");
  const int n = z.dim();
  Rat min_diff = z.coords[0] - h.apex.coords[0];
  for (int j = 1; j < n; ++j) {
    const Rat d = z.coords[j] - h.apex.coords[j];
    if (d < min_diff) min_diff = d;
  }
  for (int j : h.sectors) {
    if (z.coords[j] - h.apex.coords[j] == min_diff) return true;
  }
  return false;
}

namespace {

std::vector<unsigned> column_row_masks(const Grid& g) {
  std::vector<unsigned> masks(g.cols, 0);
  for (int j = 0; j < g.cols; ++j) {
    for (int i = 0; i < g.rows; ++i) {
      if (g.at(i, j)) masks[j] |= 1u << i;
    }
  }
  return masks;
}

std::vector<int> bits_to_columns(unsigned set, int n) {
  std::vector<int> cols;
  for (int j = 0; j < n; ++j) {
    if (set & (1u << j)) cols.push_back(j);
  }
  return cols;
}

}  // namespace

std::vector<std::vector<int>> covering_sets(const VertexRecord& v) {
  const Grid& g = v.grid;
  const int n = g.cols;
  if (g.rows > 31 || n > 31) throw PreconditionError("covering_sets: grid too large");
  const unsigned all_rows = (1u << g.rows) - 1;
  const std::vector<unsigned> col_mask = column_row_masks(g);

  std::vector<unsigned> minimal;
  // Subsets by increasing size keep the minimality filter to a subset test
  // against already-accepted covers.
  std::vector<unsigned> by_size[32];
  for (unsigned set = 1; set < (1u << n); ++set) {
    by_size[std::popcount(set)].push_back(set);
  }
  for (int size = 1; size <= n; ++size) {
    for (unsigned set : by_size[size]) {
      unsigned covered = 0;
      for (int j = 0; j < n; ++j) {
        if (set & (1u << j)) covered |= col_mask[j];
      }
      if (covered != all_rows) continue;
      bool dominated = false;
      for (unsigned small : minimal) {
        if ((small & set) == small) {
          dominated = true;
          break;
        }
      }
      if (!dominated) minimal.push_back(set);
    }
  }
  std::sort(minimal.begin(), minimal.end());
  std::vector<std::vector<int>> out;
  out.reserve(minimal.size());
  for (unsigned set : minimal) out.push_back(bits_to_columns(set, n));
  return out;
}

std::vector<std::vector<int>> partition_filter(const VertexRecord& v) {
  const Grid& g = v.grid;
  const int n = g.cols;
  if (g.rows > 31 || n > 31) throw PreconditionError("partition_filter: grid too large");
  const unsigned all_rows = (1u << g.rows) - 1;
  const std::vector<unsigned> col_mask = column_row_masks(g);

  std::vector<std::vector<int>> out;
  for (unsigned set = 1; set < (1u << n); ++set) {
    unsigned covered = 0;
    bool disjoint = true;
    for (int j = 0; j < n && disjoint; ++j) {
      if (!(set & (1u << j))) continue;
      if (covered & col_mask[j]) disjoint = false;
      covered |= col_mask[j];
    }
    if (disjoint && covered == all_rows) out.push_back(bits_to_columns(set, n));
  }
  return out;
}

std::vector<Halfspace> exterior_description(const FacePoset& poset,
                                            const std::vector<VertexRecord>& vertices) {
  std::vector<Halfspace> out;
  for (const VertexRecord& v : vertices) {
    const auto partitions = partition_filter(v);
    for (const std::vector<int>& cover : covering_sets(v)) {
      if (static_cast<int>(cover.size()) == poset.n) continue;  // sector set must be proper
      Halfspace h;
      h.apex = v.coords;
      h.sectors = cover;
      h.source_vertex = v.grid;
      h.partition_flag = std::find(partitions.begin(), partitions.end(), cover) != partitions.end();
      for (const PointTP& p : poset.vertex_coords) {
        if (!halfspace_contains(h, p)) {
          throw InternalError("constructed halfspace misses a vertex of the polytope");
        }
      }
      out.push_back(std::move(h));
    }
  }
  return out;
}

}  // namespace trop
