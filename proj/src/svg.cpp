#include "cakecut/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <thread>

#include "cakecut/error.hpp"
#include "cakecut/format.hpp"

namespace cakecut {

namespace {

struct Frame {
  Vector lo;
  Vector hi;
};

Frame inflated_frame(const Cake& c) {
  Frame f{c.bbox_lo(), c.bbox_hi()};
  for (int i = 0; i < 2; ++i) {
    const double pad = 0.1 * (f.hi[i] - f.lo[i]);
    f.lo[i] -= pad;
    f.hi[i] += pad;
  }
  return f;
}

std::string num(double v) {
  // Six significant digits keep documents small; geometry stays exact in the API.
  std::ostringstream os;
  os.precision(6);
  os << (v == 0.0 ? 0.0 : v);  // no "-0"
  return os.str();
}

std::string point_list(const std::vector<Vector>& pts) {
  std::string s;
  for (const Vector& p : pts) {
    if (!s.empty()) s += ' ';
    s += num(p[0]) + "," + num(-p[1]);
  }
  return s;
}

std::string color_for(double value) {
  static constexpr std::array<std::array<double, 3>, 5> stops = {{
      {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}}};
  const double t = std::clamp(value / 0.5, 0.0, 1.0) * (stops.size() - 1);
  const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(t), stops.size() - 2);
  const double w = t - static_cast<double>(k);
  std::ostringstream os;
  os << "rgb(";
  for (int i = 0; i < 3; ++i) {
    const double ch = stops[k][static_cast<std::size_t>(i)] * (1 - w) + stops[k + 1][static_cast<std::size_t>(i)] * w;
    os << static_cast<int>(std::lround(ch)) << (i < 2 ? "," : ")");
  }
  return os.str();
}

void require_planar(const Cake& c) {
  if (c.dim() != 2) throw Error(ErrorCode::UnsupportedDimension, "rendering is supported for 2D cakes only");
}

// Marching squares over cell centers.
std::string isoline_path(const HeatmapGrid& g, double level) {
  std::ostringstream d;
  auto lerp = [&](const Vector& p, const Vector& q, double vp, double vq) {
    const double t = (level - vp) / (vq - vp);
    return Vector{p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])};
  };
  for (int r = 0; r + 1 < g.resolution; ++r) {
    for (int col = 0; col + 1 < g.resolution; ++col) {
      const std::array<Vector, 4> p = {g.cell_center(r, col), g.cell_center(r, col + 1), g.cell_center(r + 1, col + 1),
                                       g.cell_center(r + 1, col)};
      const std::array<double, 4> v = {g.at(r, col), g.at(r, col + 1), g.at(r + 1, col + 1), g.at(r + 1, col)};
      std::vector<Vector> crossings;
      for (int e = 0; e < 4; ++e) {
        const int f = (e + 1) % 4;
        if ((v[e] >= level) != (v[f] >= level)) crossings.push_back(lerp(p[e], p[f], v[e], v[f]));
      }
      for (std::size_t k = 0; k + 1 < crossings.size(); k += 2) {
        d << 'M' << num(crossings[k][0]) << ',' << num(-crossings[k][1]) << 'L' << num(crossings[k + 1][0]) << ','
          << num(-crossings[k + 1][1]);
      }
    }
  }
  return d.str();
}

std::string bound_label(int n) { return "1/" + std::to_string(n + 1); }

}  // namespace

Vector HeatmapGrid::cell_center(int row, int col) const {
  const double w = (hi[0] - lo[0]) / resolution;
  const double h = (hi[1] - lo[1]) / resolution;
  return Vector{lo[0] + (col + 0.5) * w, lo[1] + (row + 0.5) * h};
}

HeatmapGrid heatmap_grid(const Cake& c, int resolution) {
  require_planar(c);
  if (resolution < 1 || resolution > 512) {
    throw Error(ErrorCode::InvalidArgument, "heatmap resolution must be in [1, 512]");
  }
  const Frame f = inflated_frame(c);
  HeatmapGrid g{resolution, f.lo, f.hi, std::vector<double>(static_cast<std::size_t>(resolution * resolution))};
  const unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int r = static_cast<int>(w); r < resolution; r += static_cast<int>(workers)) {
        for (int col = 0; col < resolution; ++col) {
          g.values[static_cast<std::size_t>(r * resolution + col)] = depth_at(c, g.cell_center(r, col)).upper;
        }
      }
    });
  }
  pool.clear();
  return g;
}

std::string render_svg(const Cake& c, const SvgOverlay& overlay) {
  require_planar(c);
  const Frame f = inflated_frame(c);
  const double width = f.hi[0] - f.lo[0];
  const double height = f.hi[1] - f.lo[1];
  const double diag = std::hypot(width, height);
  const bool heat = std::holds_alternative<HeatmapOverlay>(overlay);
  const double legend_width = heat ? 0.3 * width : 0.0;
  const double stroke = 0.004 * diag;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(f.lo[0]) << ' '
      << num(-f.hi[1]) << ' ' << num(width + legend_width) << ' ' << num(height) << "\" width=\"" << 600.0 * (width + legend_width) / width
      << "\" height=\"" << 600.0 * height / width << "\">\n";

  if (const auto* h = std::get_if<HeatmapOverlay>(&overlay)) {
    const HeatmapGrid g = heatmap_grid(c, h->resolution);
    const double cw = width / g.resolution;
    const double ch = height / g.resolution;
    out << "<g class=\"heatmap\">\n";
    for (int r = 0; r < g.resolution; ++r) {
      for (int col = 0; col < g.resolution; ++col) {
        const double x = f.lo[0] + col * cw;
        const double y = f.lo[1] + (r + 1) * ch;
        out << "<rect class=\"heat-cell\" x=\"" << num(x) << "\" y=\"" << num(-y) << "\" width=\"" << num(cw * 1.01)
            << "\" height=\"" << num(ch * 1.01) << "\" fill=\"" << color_for(g.at(r, col)) << "\"/>\n";
      }
    }
    out << "</g>\n";
    for (const Simplex& s : c.pieces()) {
      out << "<polygon class=\"piece\" points=\"" << point_list(s.vertices()) << "\" fill=\"none\" stroke=\"#222\" stroke-width=\""
          << num(stroke) << "\"/>\n";
    }
    const double bound = 1.0 / (c.dim() + 1);
    out << "<path class=\"isoline\" d=\"" << isoline_path(g, bound) << "\" fill=\"none\" stroke=\"white\" stroke-width=\""
        << num(stroke) << "\"/>\n";

    // Legend: color bar over [0, 1/2] with the 1/(n+1) level labeled.
    const double bx = f.hi[0] + 0.05 * width;
    const double bw = 0.08 * width;
    const double font = 0.04 * diag;
    out << "<g class=\"legend\">\n";
    constexpr int kSteps = 50;
    for (int k = 0; k < kSteps; ++k) {
      const double v0 = 0.5 * k / kSteps;
      const double y0 = f.lo[1] + height * k / kSteps;
      out << "<rect x=\"" << num(bx) << "\" y=\"" << num(-(y0 + height / kSteps)) << "\" width=\"" << num(bw)
          << "\" height=\"" << num(height / kSteps * 1.01) << "\" fill=\"" << color_for(v0 + 0.25 / kSteps) << "\"/>\n";
    }
    auto tick = [&](double v, const std::string& label, const char* cls) {
      const double y = f.lo[1] + height * v / 0.5;
      out << "<line class=\"" << cls << "\" x1=\"" << num(bx - 0.02 * width) << "\" y1=\"" << num(-y) << "\" x2=\""
          << num(bx + bw + 0.02 * width) << "\" y2=\"" << num(-y) << "\" stroke=\"black\" stroke-width=\"" << num(stroke)
          << "\"/>\n"
          << "<text class=\"" << cls << "-label\" x=\"" << num(bx + bw + 0.03 * width) << "\" y=\"" << num(-y + 0.35 * font)
          << "\" font-size=\"" << num(font) << "\">" << label << "</text>\n";
    };
    tick(0.0, "0", "legend-tick");
    tick(0.5, "1/2", "legend-tick");
    tick(bound, bound_label(c.dim()) + " = " + format_double(bound), "legend-isoline");
    out << "</g>\n";
  } else {
    for (const Simplex& s : c.pieces()) {
      out << "<polygon class=\"piece\" points=\"" << point_list(s.vertices()) << "\" fill=\"#f2c78a\" stroke=\"#8a5a2b\" stroke-width=\""
          << num(stroke) << "\"/>\n";
    }
  }

  if (const auto* cut = std::get_if<Cut>(&overlay)) {
    if (cut->anchor.dim() != 2 || cut->direction.dim() != 2) {
      throw Error(ErrorCode::MixedDimensions, "cut overlay must be 2D");
    }
    const double offset = dot(cut->direction, cut->anchor);
    const ConvexRegion shade = clip_convex(ConvexRegion::box(f.lo, f.hi), -cut->direction, -offset);
    out << "<polygon class=\"cut-shade\" points=\"" << point_list(shade.vertices)
        << "\" fill=\"#3060c0\" fill-opacity=\"0.3\" stroke=\"none\"/>\n";
    // Boundary line, clipped to the frame along its own direction.
    const Vector along{-cut->direction[1], cut->direction[0]};
    double s0 = -INFINITY;
    double s1 = INFINITY;
    for (int i = 0; i < 2; ++i) {
      if (std::abs(along[i]) < 1e-300) continue;
      double a = (f.lo[i] - cut->anchor[i]) / along[i];
      double b = (f.hi[i] - cut->anchor[i]) / along[i];
      if (a > b) std::swap(a, b);
      s0 = std::max(s0, a);
      s1 = std::min(s1, b);
    }
    const Vector p = cut->anchor + along * s0;
    const Vector q = cut->anchor + along * s1;
    out << "<line class=\"cut-line\" x1=\"" << num(p[0]) << "\" y1=\"" << num(-p[1]) << "\" x2=\"" << num(q[0])
        << "\" y2=\"" << num(-q[1]) << "\" stroke=\"#1030a0\" stroke-width=\"" << num(1.5 * stroke) << "\"/>\n";
    out << "<circle class=\"anchor\" cx=\"" << num(cut->anchor[0]) << "\" cy=\"" << num(-cut->anchor[1]) << "\" r=\""
        << num(3 * stroke) << "\" fill=\"#1030a0\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace cakecut
