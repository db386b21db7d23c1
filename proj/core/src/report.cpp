#include "trophull/report.hpp"

#include <algorithm>
#include <map>

#include "trophull/cyclic.hpp"
#include "trophull/errors.hpp"
#include "trophull/halfspace.hpp"
#include "trophull/ideal.hpp"
#include "trophull/oracle.hpp"
#include "trophull/perturb.hpp"
#include "trophull/resolution.hpp"
#include "trophull/tropical.hpp"
#include "trophull/type_geometry.hpp"

namespace trop {

namespace {

using json = nlohmann::ordered_json;

json coords_json(const PointTP& p) {
  json a = json::array();
  for (const Rat& c : p.coords) a.push_back(rat_to_string(c));
  return a;
}

json indices_1based(const std::vector<int>& xs) {
  json a = json::array();
  for (int x : xs) a.push_back(x + 1);
  return a;
}

json ideal_json(const MonomialIdeal& ideal) {
  json a = json::array();
  for (const SqfMonomial& g : ideal.generators) a.push_back(g.to_string());
  return a;
}

json vertices_json(const std::vector<VertexRecord>& vertices) {
  json a = json::array();
  for (const VertexRecord& v : vertices) {
    json rec;
    rec["grid"] = v.grid.to_bitstring();
    rec["coords"] = coords_json(v.coords);
    rec["label"] = monomial_from_unshaded(v.grid).to_string();
    a.push_back(std::move(rec));
  }
  return a;
}

json faces_json(const FacePoset& poset) {
  json levels = json::array();
  for (int d = 0; d <= poset.max_dim(); ++d) {
    json level = json::array();
    for (const Face& f : poset.by_dim[d]) {
      json rec;
      rec["grid"] = f.grid.to_bitstring();
      rec["label"] = monomial_from_unshaded(f.grid).to_string();
      rec["dim"] = f.dim;
      rec["vertices"] = f.vertex_set;  // positions in the vertices array
      level.push_back(std::move(rec));
    }
    levels.push_back(std::move(level));
  }
  return levels;
}

json f_matrix_json(const FMatrix& fm) {
  json obj = json::object();
  for (const auto& [key, count] : fm.counts) {
    obj[std::to_string(key.first)][std::to_string(key.second)] = count;
  }
  return obj;
}

json matrices_json(const std::vector<MonomialMatrix>& matrices) {
  json a = json::array();
  for (size_t k = 0; k < matrices.size(); ++k) {
    const MonomialMatrix& m = matrices[k];
    json rec;
    rec["index"] = k + 1;  // M_{k+1}
    json rows = json::array();
    for (const SqfMonomial& l : m.row_labels) rows.push_back(l.to_string());
    json cols = json::array();
    for (const SqfMonomial& l : m.col_labels) cols.push_back(l.to_string());
    rec["rows"] = std::move(rows);
    rec["cols"] = std::move(cols);
    json triplets = json::array();
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = 0; j < m.cols(); ++j) {
        if (m.entries[i][j] != 0) {
          triplets.push_back({rec["rows"][i], rec["cols"][j], m.entries[i][j]});
        }
      }
    }
    rec["triplets"] = std::move(triplets);
    a.push_back(std::move(rec));
  }
  return a;
}

json halfspaces_json(const std::vector<Halfspace>& halfspaces) {
  json a = json::array();
  for (const Halfspace& h : halfspaces) {
    json rec;
    rec["apex"] = coords_json(h.apex);
    rec["sectors"] = indices_1based(h.sectors);
    rec["source_vertex"] = h.source_vertex.to_bitstring();
    rec["partition_flag"] = h.partition_flag;
    a.push_back(std::move(rec));
  }
  return a;
}

}  // namespace

json check_generic_report(const WeightMatrix& v) {
  json rep;
  rep["r"] = v.r;
  rep["n"] = v.n;
  const GenericityResult res = is_generic(v);
  rep["generic"] = res.generic;
  if (!res.generic) {
    rep["witness"]["rows"] = indices_1based(res.witness_rows);
    rep["witness"]["cols"] = indices_1based(res.witness_cols);
  }
  return rep;
}

json run_hull(const WeightMatrix& v, const HullOptions& options) {
  require_generic(v);
  const std::vector<VertexRecord> vertices = enumerate_vertices(v);
  const FacePoset poset = build_face_poset(vertices, v);
  const std::vector<MonomialMatrix> matrices = boundary_matrices(poset);
  const MonomialIdeal dual_gens = dual_generators_from_vertices(vertices, v.r, v.n);
  const std::vector<Halfspace> halfspaces = exterior_description(poset, vertices);
  const std::vector<Face> maximal = maximal_faces(poset, matrices);

  json rep;
  rep["generic"] = true;
  rep["perturbed"] = false;
  rep["r"] = v.r;
  rep["n"] = v.n;
  rep["vertices"] = vertices_json(vertices);
  rep["f_vector"] = f_vector(poset);
  rep["f_matrix"] = f_matrix_json(f_matrix(poset));
  rep["faces_by_dim"] = faces_json(poset);
  rep["dual_generators"] = ideal_json(dual_gens);
  if (options.with_initial) {
    rep["initial_ideal"] = ideal_json(initial_ideal(v, vertices));
  }
  rep["monomial_matrices"] = matrices_json(matrices);
  json maxi = json::array();
  for (const Face& f : maximal) {
    json rec;
    rec["dim"] = f.dim;
    rec["grid"] = f.grid.to_bitstring();
    rec["label"] = monomial_from_unshaded(f.grid).to_string();
    maxi.push_back(std::move(rec));
  }
  rep["maximal_faces"] = std::move(maxi);
  rep["halfspaces"] = halfspaces_json(halfspaces);
  // Every emitted halfspace contains the polytope, but the family is not
  // pruned to an irredundant one.
  rep["halfspaces_possibly_redundant"] = true;

  if (options.halfspace_analysis) {
    // The partition refinement is a conjecture: partitions are reported
    // as candidate minimal halfspaces, but halfspaces of this shape are
    // known to occur non-minimally too, so nothing here is asserted.
    json analysis;
    analysis["experimental"] = true;
    analysis["note"] =
        "partition-shaped halfspaces are candidates for minimality only; "
        "the converse is known to fail";
    json per_vertex = json::array();
    for (const VertexRecord& rec : vertices) {
      json entry;
      entry["grid"] = rec.grid.to_bitstring();
      json covers = json::array();
      for (const auto& c : covering_sets(rec)) covers.push_back(indices_1based(c));
      json partitions = json::array();
      for (const auto& p : partition_filter(rec)) partitions.push_back(indices_1based(p));
      entry["minimal_covers"] = std::move(covers);
      entry["partitions"] = std::move(partitions);
      per_vertex.push_back(std::move(entry));
    }
    analysis["per_vertex"] = std::move(per_vertex);
    rep["halfspace_analysis"] = std::move(analysis);
  }

  if (options.run_oracle) {
    if (v.r * v.n > 20) {
      throw ConfigError("--oracle is limited to r*n <= 20");
    }
    json oracle;
    const std::vector<Grid> expected_vertices = brute_force_vertex_grids(v);
    std::vector<Grid> got_vertices;
    for (const VertexRecord& rec : vertices) got_vertices.push_back(rec.grid);
    oracle["vertices_match"] = expected_vertices == got_vertices;

    const std::vector<std::vector<Grid>> expected_faces = brute_force_face_grids(v);
    std::vector<std::vector<Grid>> got_faces;
    for (int d = 0; d <= poset.max_dim(); ++d) {
      got_faces.emplace_back();
      for (const Face& f : poset.by_dim[d]) got_faces.back().push_back(f.grid);
    }
    oracle["faces_match"] = expected_faces == got_faces;
    rep["oracle"] = std::move(oracle);
  }
  return rep;
}

json perturb_and_hull(const WeightMatrix& v, const HullOptions& options) {
  if (is_generic(v).generic) {
    return run_hull(v, options);  // refinement of a generic instance changes nothing
  }

  const PerturbedWeights pw = perturb_weights(v);
  const std::vector<VertexRecord> refined_vertices = enumerate_vertices(pw.refined);
  const FacePoset poset = build_face_poset(refined_vertices, pw.refined);
  const MonomialIdeal dual_gens =
      dual_generators_from_vertices(refined_vertices, v.r, v.n);

  // Coordinates in the original weights; vertices sharing them merge.
  std::map<PointTP, int> merged_index;
  std::vector<PointTP> merged_coords;
  std::vector<std::vector<std::string>> merged_grids;
  std::vector<int> vertex_to_merged(refined_vertices.size());
  for (size_t k = 0; k < refined_vertices.size(); ++k) {
    const PointTP original = coords_of(refined_vertices[k].grid, v);
    auto [it, fresh] = merged_index.emplace(original, static_cast<int>(merged_coords.size()));
    if (fresh) {
      merged_coords.push_back(original);
      merged_grids.emplace_back();
    }
    vertex_to_merged[k] = it->second;
    merged_grids[it->second].push_back(refined_vertices[k].grid.to_bitstring());
  }

  json rep;
  rep["generic"] = false;
  rep["perturbed"] = true;
  rep["experimental"] = true;
  rep["note"] =
      "weights were refined by a generic tiebreaker and coincident vertices "
      "merged; this identification is a heuristic for degenerate input";
  rep["r"] = v.r;
  rep["n"] = v.n;
  rep["tiebreaker"] = pw.used_fallback ? "powers_of_two" : "cyclic";

  json merged = json::array();
  for (size_t m = 0; m < merged_coords.size(); ++m) {
    json rec;
    rec["coords"] = coords_json(merged_coords[m]);
    rec["grids"] = merged_grids[m];
    merged.push_back(std::move(rec));
  }
  rep["vertices"] = std::move(merged);
  rep["refined_f_vector"] = f_vector(poset);
  rep["dual_generators"] = ideal_json(dual_gens);

  json levels = json::array();
  for (int d = 0; d <= poset.max_dim(); ++d) {
    json level = json::array();
    for (const Face& f : poset.by_dim[d]) {
      json rec;
      rec["grid"] = f.grid.to_bitstring();
      rec["dim"] = f.dim;
      std::vector<int> verts;
      for (int vi : f.vertex_set) verts.push_back(vertex_to_merged[vi]);
      std::sort(verts.begin(), verts.end());
      verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
      rec["vertices"] = verts;
      level.push_back(std::move(rec));
    }
    levels.push_back(std::move(level));
  }
  rep["faces_by_dim"] = std::move(levels);
  return rep;
}

json gf_check_report(int r, int n, int k) {
  const GfReport g = gf_coefficient_check(r, n, k);
  json rep;
  rep["r"] = g.r;
  rep["n"] = g.n;
  rep["k"] = g.k;
  rep["enumeration"] = g.enumeration;
  rep["egf_form"] = rat_to_string(g.egf_form);
  rep["ogf_form"] = rat_to_string(g.ogf_form);
  rep["ogf_sign_corrected"] = rat_to_string(g.ogf_sign_corrected);
  rep["egf_matches"] = g.egf_matches;
  rep["ogf_matches"] = g.ogf_matches;
  rep["corrected_matches"] = g.corrected_matches;
  rep["boundary_case"] = g.boundary_case;
  if (!g.egf_matches || !g.ogf_matches) {
    rep["flag"] = "candidate generating function disagrees with enumeration";
  }
  return rep;
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

}  // namespace trop
