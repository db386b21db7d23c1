/**
 * trophull: tropical convex hulls of rational points, with the face
 * poset, resolution boundary matrices, f-data, halfspace descriptions
 * and cyclic-polytope cross-checks, reported as JSON.
 */

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trophull/cyclic.hpp"
#include "trophull/errors.hpp"
#include "trophull/io.hpp"
#include "trophull/report.hpp"
#include "trophull/resolution.hpp"
#include "trophull/svg.hpp"
#include "trophull/tropical.hpp"
#include "trophull/type_geometry.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitNonGeneric = 3;
constexpr int kExitInternal = 4;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw trop::InputError("cannot write '" + out_path + "'");
  out << text;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  return trop::read_file(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropical convex hull computations over exact rationals"};

  std::string input_path;
  std::vector<int> cyclic_args;
  std::vector<int> gf_args;
  std::string svg_path;
  std::string out_path;
  bool check_generic = false;
  bool perturb = false;
  bool with_initial = false;
  bool halfspaces = false;
  bool oracle = false;

  app.add_option("input", input_path,
                 "points file: JSON {\"points\": [[...], ...]} or CSV, '-' for stdin");
  app.add_option("--cyclic", cyclic_args, "use the cyclic instance C_{R,N}")
      ->expected(2);
  app.add_option("--gf-check", gf_args,
                 "generating-function report for maximal k-faces of C_{R,N}")
      ->expected(3);
  app.add_flag("--check-generic", check_generic, "stop after the genericity check");
  app.add_flag("--perturb", perturb, "refine non-generic weights by a tiebreaker");
  app.add_flag("--with-initial", with_initial, "include the initial ideal in the report");
  app.add_flag("--halfspaces", halfspaces, "include the experimental halfspace analysis");
  app.add_flag("--oracle", oracle, "run brute-force cross-checks (small inputs only)");
  app.add_option("--svg", svg_path, "write an SVG drawing (3 coordinates only)");
  app.add_option("--out", out_path, "write the JSON report to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitParse;
  }

  try {
    if (!gf_args.empty()) {
      if (!input_path.empty() || !cyclic_args.empty()) {
        throw trop::InputError("--gf-check runs standalone, without an input");
      }
      write_output(trop::dump_report(trop::gf_check_report(gf_args[0], gf_args[1], gf_args[2])),
                   out_path);
      return kExitOk;
    }

    trop::WeightMatrix v;
    if (!cyclic_args.empty()) {
      if (!input_path.empty()) {
        throw trop::InputError("choose either an input file or --cyclic, not both");
      }
      v = trop::cyclic_points(cyclic_args[0], cyclic_args[1]);
    } else if (!input_path.empty()) {
      v = trop::parse_points_text(read_input(input_path));
    } else {
      throw trop::InputError("no input: pass a points file, '-', or --cyclic R N");
    }

    if (check_generic) {
      const auto rep = trop::check_generic_report(v);
      write_output(trop::dump_report(rep), out_path);
      return rep["generic"].get<bool>() ? kExitOk : kExitNonGeneric;
    }

    trop::HullOptions options;
    options.with_initial = with_initial;
    options.halfspace_analysis = halfspaces;
    options.run_oracle = oracle;

    const nlohmann::ordered_json rep =
        perturb ? trop::perturb_and_hull(v, options) : trop::run_hull(v, options);
    write_output(trop::dump_report(rep), out_path);

    if (!svg_path.empty()) {
      // Drawing needs the geometry again; only generic (or generic after
      // refinement delegation) reports carry a full poset.
      if (!rep["generic"].get<bool>()) {
        throw trop::InputError("--svg needs a generic instance (or --perturb on one)");
      }
      const auto vertices = trop::enumerate_vertices(v);
      trop::emit_svg(trop::build_face_poset(vertices, v), svg_path);
    }
    return kExitOk;
  } catch (const trop::GenericityError& e) {
    nlohmann::ordered_json rep;
    rep["generic"] = false;
    rep["error"] = e.what();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i : e.witness_rows) rows.push_back(i + 1);
    nlohmann::ordered_json cols = nlohmann::ordered_json::array();
    for (int j : e.witness_cols) cols.push_back(j + 1);
    rep["witness"]["rows"] = std::move(rows);
    rep["witness"]["cols"] = std::move(cols);
    rep["hint"] = "rerun with --perturb to refine the weights";
    std::cout << trop::dump_report(rep);
    return kExitNonGeneric;
  } catch (const trop::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const trop::ParseError& e) {
    std::cerr << "parse error at line " << e.location.line << ", column " << e.location.column
              << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}
