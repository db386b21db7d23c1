#pragma once

/**
 * End-to-end pipeline and JSON reporting: genericity check, vertex
 * enumeration, ideals, face poset, boundary matrices, face counts and
 * halfspaces, in one deterministic report.
 */

#include <string>

#include <json.hpp>

#include "trophull/point.hpp"

namespace trop {

struct HullOptions {
  bool with_initial = false;    // include the initial ideal I
  bool halfspace_analysis = false;  // include the experimental partition cross-tab
  bool run_oracle = false;      // brute-force cross-checks (small inputs only)
};

/// Full pipeline on generic input. Throws GenericityError when the input
/// is degenerate.
nlohmann::ordered_json run_hull(const WeightMatrix& v, const HullOptions& options = {});

/// Pipeline for possibly non-generic input: symbolic perturbation, face
/// computation on the refined weights, coordinates in the original
/// weights, and vertices with equal coordinates identified. On generic
/// input this reduces exactly to run_hull.
nlohmann::ordered_json perturb_and_hull(const WeightMatrix& v, const HullOptions& options = {});

/// Genericity verdict only.
nlohmann::ordered_json check_generic_report(const WeightMatrix& v);

/// Three-way generating-function report as JSON.
nlohmann::ordered_json gf_check_report(int r, int n, int k);

std::string dump_report(const nlohmann::ordered_json& report);

}  // namespace trop
