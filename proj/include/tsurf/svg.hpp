#pragma once

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tsurf/cylinders.hpp"
#include "tsurf/error.hpp"
#include "tsurf/flow.hpp"
#include "tsurf/surface.hpp"

namespace tsurf {

struct RenderSpec {
  double width = 800;
  double height = 600;
  double margin = 24;
  double edge_stroke = 1.5;
  double trajectory_stroke = 1.25;
  double label_size = 12;
  std::vector<std::string> palette = {"#d9d9d9", "#a6a6a6", "#737373", "#bfbfbf",
                                      "#8c8c8c", "#595959", "#cccccc", "#404040"};

  void validate() const {
    if (width <= 0 || height <= 0 || margin < 0 || edge_stroke <= 0 || trajectory_stroke <= 0 || label_size <= 0)
      throw Error(ErrorKind::InvalidArgument, "render dimensions must be positive");
    if (palette.size() < 8) throw Error(ErrorKind::InvalidArgument, "palette needs at least 8 tones");
  }
};

/// Piece of a trajectory inside one polygon.
struct Segment {
  std::size_t polygon;
  Vec2 from, to;
};

/// One segment per polygon visit. For periodic traces exactly one period is
/// returned; otherwise the pieces between consecutive crossings.
inline std::vector<Segment> trajectory_segments(const Surface& s, const TraceResult& r) {
  auto entry_after = [&](const Crossing& c) {
    Vec2 e = s.polygon(c.edge.polygon).edge_vector(c.edge.edge);
    Scalar u = dot(c.point - s.polygon(c.edge.polygon).tail(c.edge.edge), e) / norm2(e);
    return s.transport(c.edge, u);
  };
  std::vector<Segment> out;
  const auto& cs = r.crossings;
  if (r.periodic() && r.period() > 0 && r.period() <= cs.size()) {
    const std::size_t p = r.period(), k = cs.size() - p;
    for (std::size_t i = 0; i < p; ++i) {
      const Crossing& prev = cs[k + (i + p - 1) % p];
      out.push_back({cs[k + i].edge.polygon, entry_after(prev), cs[k + i].point});
    }
    return out;
  }
  for (std::size_t i = 1; i < cs.size(); ++i) out.push_back({cs[i].edge.polygon, entry_after(cs[i - 1]), cs[i].point});
  return out;
}

struct Overlays {
  std::optional<std::vector<Segment>> trajectory;
  std::optional<CylinderDecomposition> cylinders;
  bool vertex_markers = false;
};

namespace detail {

inline std::string fmt6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);
  return buf;
}

class Canvas {
 public:
  Canvas(const Surface& s, const RenderSpec& spec) : spec_(spec) {
    bool first = true;
    for (const auto& p : s.polygons())
      for (const auto& v : p.vertices()) {
        double x = v.x.to_double(), y = v.y.to_double();
        if (first) {
          x0_ = x1_ = x;
          y0_ = y1_ = y;
          first = false;
        }
        x0_ = std::min(x0_, x), x1_ = std::max(x1_, x);
        y0_ = std::min(y0_, y), y1_ = std::max(y1_, y);
      }
    double sx = (spec.width - 2 * spec.margin) / std::max(x1_ - x0_, 1e-12);
    double sy = (spec.height - 2 * spec.margin) / std::max(y1_ - y0_, 1e-12);
    scale_ = std::min(sx, sy);
  }

  std::string x(double v) const { return fmt6(spec_.margin + (v - x0_) * scale_); }
  std::string y(double v) const { return fmt6(spec_.height - spec_.margin - (v - y0_) * scale_); }
  std::string point(const Vec2& p) const { return x(p.x.to_double()) + "," + y(p.y.to_double()); }

 private:
  const RenderSpec& spec_;
  double x0_ = 0, x1_ = 1, y0_ = 0, y1_ = 1, scale_ = 1;
};

}  // namespace detail

/// Polygon outlines with edge labels, plus the requested overlays. Output is
/// byte-for-byte deterministic.
inline std::string render_svg(const Surface& s, const Overlays& overlays = {}, const RenderSpec& spec = {}) {
  spec.validate();
  detail::Canvas cv(s, spec);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << detail::fmt6(spec.width)
     << "\" height=\"" << detail::fmt6(spec.height) << "\" viewBox=\"0 0 " << detail::fmt6(spec.width) << ' '
     << detail::fmt6(spec.height) << "\">\n";

  if (overlays.cylinders) {
    const auto& cyls = overlays.cylinders->cylinders;
    const Vec2& d = overlays.cylinders->direction;
    for (std::size_t c = 0; c < cyls.size(); ++c) {
      os << "<g class=\"cylinder\" fill=\"" << spec.palette[c % spec.palette.size()] << "\" stroke=\"none\">\n";
      for (const auto& st : cyls[c].strips) {
        const Polygon& p = s.polygon(st.polygon);
        auto at = [&](std::size_t k, const Scalar& h) {
          Vec2 a = p.tail(k), b = p.head(k);
          Scalar ha = cross(d, a), hb = cross(d, b);
          return a + ((h - ha) / (hb - ha)) * (b - a);
        };
        os << "<polygon points=\"" << cv.point(at(st.left_edge, st.h1)) << ' ' << cv.point(at(st.left_edge, st.h0))
           << ' ' << cv.point(at(st.right_edge, st.h0)) << ' ' << cv.point(at(st.right_edge, st.h1)) << "\"/>\n";
      }
      os << "</g>\n";
    }
  }

  os << "<g class=\"polygons\" fill=\"none\" stroke=\"black\" stroke-width=\"" << detail::fmt6(spec.edge_stroke) << "\">\n";
  for (const auto& p : s.polygons()) {
    os << "<polygon points=\"";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << cv.point(p.vertex(i));
    os << "\"/>\n";
  }
  os << "</g>\n";

  if (overlays.trajectory) {
    os << "<g class=\"trajectory\" stroke=\"black\" stroke-width=\"" << detail::fmt6(spec.trajectory_stroke)
       << "\" stroke-dasharray=\"4 2\">\n";
    for (const auto& seg : *overlays.trajectory)
      os << "<line x1=\"" << cv.x(seg.from.x.to_double()) << "\" y1=\"" << cv.y(seg.from.y.to_double()) << "\" x2=\""
         << cv.x(seg.to.x.to_double()) << "\" y2=\"" << cv.y(seg.to.y.to_double()) << "\"/>\n";
    os << "</g>\n";
  }

  if (overlays.vertex_markers) {
    os << "<g class=\"vertices\" stroke=\"black\">\n";
    auto classes = vertex_classes(s);
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (const auto& k : classes[c].corners) {
        const Vec2& v = s.polygon(k.polygon).vertex(k.vertex);
        os << "<circle cx=\"" << cv.x(v.x.to_double()) << "\" cy=\"" << cv.y(v.y.to_double()) << "\" r=\"3.000000\" fill=\""
           << spec.palette[(c * 3) % spec.palette.size()] << "\"/>\n";
      }
    os << "</g>\n";
  }

  os << "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"" << detail::fmt6(spec.label_size)
     << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">\n";
  for (std::size_t pi = 0; pi < s.polygons().size(); ++pi) {
    const Polygon& p = s.polygon(pi);
    Vec2 c = p.centroid();
    for (std::size_t k = 0; k < p.size(); ++k) {
      Vec2 m = Scalar(Rational(1, 2)) * (p.tail(k) + p.head(k));
      Vec2 at = m + Scalar(Rational(1, 8)) * (c - m);
      os << "<text x=\"" << cv.x(at.x.to_double()) << "\" y=\"" << cv.y(at.y.to_double()) << "\">" << s.label({pi, k})
         << "</text>\n";
    }
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace tsurf
