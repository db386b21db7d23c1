#include "trophull/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "trophull/errors.hpp"

namespace trop {

namespace {

struct Xy {
  double x = 0;
  double y = 0;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const FacePoset& poset) {
  if (poset.n != 3) {
    throw PreconditionError("SVG rendering is only supported for points in 3 coordinates");
  }

  // Plane coordinates (z_2 - z_1, z_3 - z_1); canonical points already
  // have z_1 = 0. Drawing precision does not feed back into any result.
  std::vector<Xy> pts;
  for (const PointTP& p : poset.vertex_coords) {
    pts.push_back(Xy{static_cast<double>(p.coords[1]), static_cast<double>(p.coords[2])});
  }

  double min_x = pts[0].x, max_x = pts[0].x, min_y = pts[0].y, max_y = pts[0].y;
  for (const Xy& p : pts) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1.0});
  const double scale = 400.0 / span;
  const double margin = 40.0;
  auto place = [&](const Xy& p) {
    // Flip y so larger coordinates point up.
    return Xy{margin + (p.x - min_x) * scale, margin + (max_y - p.y) * scale};
  };
  const double width = margin * 2 + (max_x - min_x) * scale;
  const double height = margin * 2 + (max_y - min_y) * scale;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
      << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " "
      << fmt(height) << "\">\n";

  if (poset.max_dim() >= 2) {
    for (const Face& f : poset.by_dim[2]) {
      // Order polygon vertices by angle around the centroid.
      std::vector<int> ring = f.vertex_set;
      double cx = 0, cy = 0;
      for (int vi : ring) {
        cx += pts[vi].x;
        cy += pts[vi].y;
      }
      cx /= static_cast<double>(ring.size());
      cy /= static_cast<double>(ring.size());
      std::sort(ring.begin(), ring.end(), [&](int a, int b) {
        const double aa = std::atan2(pts[a].y - cy, pts[a].x - cx);
        const double ab = std::atan2(pts[b].y - cy, pts[b].x - cx);
        return aa < ab;
      });
      out << "  <polygon points=\"";
      for (size_t k = 0; k < ring.size(); ++k) {
        const Xy p = place(pts[ring[k]]);
        out << (k ? " " : "") << fmt(p.x) << "," << fmt(p.y);
      }
      out << "\" fill=\"#cfe0f0\" stroke=\"none\"/>\n";
    }
  }

  if (poset.max_dim() >= 1) {
    for (const Face& f : poset.by_dim[1]) {
      const Xy a = place(pts[f.vertex_set[0]]);
      const Xy b = place(pts[f.vertex_set[1]]);
      out << "  <line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x)
          << "\" y2=\"" << fmt(b.y) << "\" stroke=\"#274060\" stroke-width=\"2\"/>\n";
    }
  }

  for (size_t k = 0; k < pts.size(); ++k) {
    const Xy p = place(pts[k]);
    out << "  <circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y)
        << "\" r=\"4\" fill=\"#b3382c\">\n    <title>"
        << monomial_from_unshaded(poset.by_dim[0][k].grid).to_string()
        << "</title>\n  </circle>\n";
    out << "  <text x=\"" << fmt(p.x + 6) << "\" y=\"" << fmt(p.y - 6)
        << "\" font-size=\"12\" font-family=\"sans-serif\">" << k + 1 << "</text>\n";
  }

  out << "</svg>\n";
  return out.str();
}

void emit_svg(const FacePoset& poset, const std::string& path) {
  const std::string body = render_svg(poset);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << body;
}

}  // namespace trop
