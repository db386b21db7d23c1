#include "trophull/ideal.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "trophull/errors.hpp"
#include "trophull/tropical.hpp"

namespace trop {

namespace {

// Bitset over the cells that actually occur in the hypergraph.
struct Mask {
  std::vector<std::uint64_t> w;

  explicit Mask(size_t universe) : w((universe + 63) / 64, 0) {}

  void set(size_t x) { w[x >> 6] |= std::uint64_t{1} << (x & 63); }
  bool test(size_t x) const { return (w[x >> 6] >> (x & 63)) & 1; }

  bool intersects(const Mask& o) const {
    for (size_t k = 0; k < w.size(); ++k) {
      if (w[k] & o.w[k]) return true;
    }
    return false;
  }

  // Number of common elements; when exactly one, *lone is its index.
  int intersection_count(const Mask& o, size_t* lone) const {
    int count = 0;
    for (size_t k = 0; k < w.size(); ++k) {
      std::uint64_t common = w[k] & o.w[k];
      while (common) {
        if (++count > 1) return count;
        const int bit = std::countr_zero(common);
        *lone = (k << 6) + bit;
        common &= common - 1;
      }
    }
    return count;
  }

  bool operator==(const Mask&) const = default;
  bool operator<(const Mask& o) const { return w < o.w; }
};

// T is a minimal transversal iff every member has a private edge: an edge
// meeting T in exactly that member.
bool certified_minimal(const Mask& t, const std::vector<Mask>& edges, size_t universe) {
  Mask privates(universe);
  for (const Mask& e : edges) {
    size_t lone = 0;
    if (t.intersection_count(e, &lone) == 1) privates.set(lone);
  }
  for (size_t k = 0; k < t.w.size(); ++k) {
    if ((t.w[k] & ~privates.w[k]) != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<SqfMonomial> minimal_transversals(const std::vector<SqfMonomial>& edges) {
  // An empty edge kills every transversal; with no edges at all the empty
  // set is the unique minimal transversal.
  std::map<Cell, size_t> cell_id;
  std::vector<Cell> cells;
  for (const SqfMonomial& e : edges) {
    if (e.support.empty()) return {};
    for (const Cell& c : e.support) {
      if (cell_id.emplace(c, cells.size()).second) cells.push_back(c);
    }
  }
  const size_t universe = cells.size();

  std::vector<Mask> edge_masks;
  edge_masks.reserve(edges.size());
  for (const SqfMonomial& e : edges) {
    Mask m(universe);
    for (const Cell& c : e.support) m.set(cell_id.at(c));
    edge_masks.push_back(std::move(m));
  }
  std::sort(edge_masks.begin(), edge_masks.end());
  edge_masks.erase(std::unique(edge_masks.begin(), edge_masks.end()), edge_masks.end());

  // Incremental dualization: extend transversals missing the next edge by
  // one of its members, keeping exactly the certified-minimal results.
  std::vector<Mask> duals{Mask(universe)};
  std::vector<Mask> processed;
  for (const Mask& edge : edge_masks) {
    processed.push_back(edge);
    std::vector<Mask> next;
    std::vector<Mask> grown;
    for (Mask& t : duals) {
      if (t.intersects(edge)) {
        next.push_back(std::move(t));  // still minimal: its certificates persist
        continue;
      }
      for (size_t x = 0; x < universe; ++x) {
        if (!edge.test(x)) continue;
        Mask extended = t;
        extended.set(x);
        if (certified_minimal(extended, processed, universe)) {
          grown.push_back(std::move(extended));
        }
      }
    }
    std::sort(grown.begin(), grown.end());
    grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
    next.insert(next.end(), grown.begin(), grown.end());
    duals = std::move(next);
  }

  std::vector<SqfMonomial> out;
  out.reserve(duals.size());
  for (const Mask& t : duals) {
    std::vector<Cell> members;
    for (size_t x = 0; x < universe; ++x) {
      if (t.test(x)) members.push_back(cells[x]);
    }
    out.emplace_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal dual_generators_from_vertices(const std::vector<VertexRecord>& vertices,
                                            int rows, int cols) {
  std::vector<SqfMonomial> gens;
  gens.reserve(vertices.size());
  const int expected_degree = (rows - 1) * (cols - 1);
  for (const VertexRecord& v : vertices) {
    SqfMonomial m = monomial_from_unshaded(v.grid);
    if (m.degree() != expected_degree) {
      throw InternalError("vertex label of degree " + std::to_string(m.degree()) +
                          ", expected " + std::to_string(expected_degree));
    }
    gens.push_back(std::move(m));
  }
  MonomialIdeal ideal = MonomialIdeal::minimalized(std::move(gens));
  if (ideal.generators.size() != vertices.size()) {
    throw InternalError("vertex labels are not an antichain");
  }
  return ideal;
}

MonomialIdeal initial_ideal(const WeightMatrix& v) {
  return initial_ideal(v, enumerate_vertices(v));
}

MonomialIdeal initial_ideal(const WeightMatrix& v,
                            const std::vector<VertexRecord>& vertices) {
  require_generic(v);
  // Minimal non-faces of the complex whose facets are the shaded vertex
  // sets = minimal transversals of the facet complements.
  std::vector<SqfMonomial> complements;
  complements.reserve(vertices.size());
  for (const VertexRecord& rec : vertices) {
    complements.push_back(monomial_from_unshaded(rec.grid));
  }
  return MonomialIdeal::minimalized(minimal_transversals(complements));
}

MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
  // Expanding the intersection of the primes m^a over the generators is
  // exactly the minimal-transversal computation on their supports.
  return MonomialIdeal::minimalized(minimal_transversals(ideal.generators));
}

std::vector<SqfMonomial> minor_initial_forms(const WeightMatrix& v) {
  std::vector<SqfMonomial> forms;
  for (int i = 0; i < v.r; ++i) {
    for (int k = i + 1; k < v.r; ++k) {
      for (int j = 0; j < v.n; ++j) {
        for (int l = j + 1; l < v.n; ++l) {
          const Rat diag = v.at(i, j) + v.at(k, l);
          const Rat anti = v.at(i, l) + v.at(k, j);
          if (diag == anti) {
            throw GenericityError("tied 2x2 minor", {i, k}, {j, l});
          }
          if (diag > anti) {
            forms.push_back(SqfMonomial({{i, j}, {k, l}}));
          } else {
            forms.push_back(SqfMonomial({{i, l}, {k, j}}));
          }
        }
      }
    }
  }
  std::sort(forms.begin(), forms.end());
  return forms;
}

}  // namespace trop
