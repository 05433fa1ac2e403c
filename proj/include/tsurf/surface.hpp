#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsurf/error.hpp"
#include "tsurf/geometry.hpp"

namespace tsurf {

/// A simple polygon with counterclockwise vertices. Edge i runs from vertex i
/// to vertex i+1 (mod n).
class Polygon {
 public:
  Polygon() = default;
  explicit Polygon(std::vector<Vec2> vertices) : vertices_(std::move(vertices)) { validate(); }

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vec2>& vertices() const { return vertices_; }
  const Vec2& vertex(std::size_t i) const { return vertices_[i % size()]; }
  const Vec2& tail(std::size_t edge) const { return vertex(edge); }
  const Vec2& head(std::size_t edge) const { return vertex(edge + 1); }
  Vec2 edge_vector(std::size_t edge) const { return head(edge) - tail(edge); }

  /// Twice the signed area.
  Scalar doubled_area() const {
    Scalar a = 0;
    for (std::size_t i = 0; i < size(); ++i) a += cross(vertex(i), vertex(i + 1));
    return a;
  }
  Scalar area() const { return doubled_area() / Scalar(2); }

  /// Interior angle at vertex i in (0, 2pi), from the coordinates.
  double interior_angle(std::size_t i) const {
    const Vec2& v = vertex(i);
    return ccw_angle(vertex(i + 1) - v, vertex(i + size() - 1) - v);
  }

  Vec2 centroid() const {
    Scalar sx = 0, sy = 0;
    for (const auto& v : vertices_) {
      sx += v.x;
      sy += v.y;
    }
    Scalar n(static_cast<std::int64_t>(size()));
    return {sx / n, sy / n};
  }

 private:
  void validate() const {
    if (size() < 3) throw Error(ErrorKind::DegeneratePolygon, "polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < size(); ++i)
      if (near(vertex(i), vertex(i + 1))) throw Error(ErrorKind::DegeneratePolygon, "zero-length edge");
    if (sign(doubled_area()) <= 0)
      throw Error(ErrorKind::DegeneratePolygon, "polygon must have positive area (counterclockwise)");
    // Non-adjacent edges must not touch.
    auto orient = [](const Vec2& a, const Vec2& b, const Vec2& c) { return sign(cross(b - a, c - a)); };
    auto on_segment = [&](const Vec2& a, const Vec2& b, const Vec2& p) {
      return orient(a, b, p) == 0 && sign(dot(p - a, p - b)) <= 0;
    };
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (j == i + 1 || (i == 0 && j == n - 1)) continue;
        const Vec2 &a = tail(i), &b = head(i), &c = tail(j), &d = head(j);
        int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
        bool hit = (o1 * o2 < 0 && o3 * o4 < 0) || on_segment(a, b, c) || on_segment(a, b, d) ||
                   on_segment(c, d, a) || on_segment(c, d, b);
        if (hit) throw Error(ErrorKind::DegeneratePolygon, "polygon is not simple");
      }
    }
  }

  std::vector<Vec2> vertices_;
};

struct EdgeRef {
  std::size_t polygon = 0;
  std::size_t edge = 0;
  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// Identification of two polygon edges. With reversed == false the head of
/// `a` meets the tail of `b` (the translation convention); with reversed ==
/// true head meets head.
struct Gluing {
  EdgeRef a;
  EdgeRef b;
  bool reversed = false;
  std::string label;
};

struct Corner {
  std::size_t polygon = 0;
  std::size_t vertex = 0;
  friend bool operator==(const Corner&, const Corner&) = default;
  friend auto operator<=>(const Corner&, const Corner&) = default;
};

struct VertexClass {
  std::vector<Corner> corners;  // in the order the chase visits them
  double total_angle = 0.0;     // radians
};

struct FlatnessEntry {
  double total_angle = 0.0;
  std::optional<std::int64_t> multiple_of_2pi;
};

struct FlatnessReport {
  std::vector<FlatnessEntry> vertices;
  bool flat = true;
};

/// Where an edge leads: the partner edge and the gluing joining them.
struct Partner {
  EdgeRef edge;
  std::size_t gluing = 0;
  bool reversed = false;
};

/// Polygons with a perfect matching of their edges. Immutable once built.
class Surface {
 public:
  /// Validates and builds. Throws NotAMatching, LengthMismatch or
  /// DegeneratePolygon.
  static Surface build(std::vector<Polygon> polygons, std::vector<Gluing> gluings) {
    Surface s;
    s.polygons_ = std::move(polygons);
    s.gluings_ = std::move(gluings);
    s.index();
    return s;
  }

  const std::vector<Polygon>& polygons() const { return polygons_; }
  const Polygon& polygon(std::size_t i) const { return polygons_.at(i); }
  const std::vector<Gluing>& gluings() const { return gluings_; }
  std::size_t edge_count() const {
    std::size_t n = 0;
    for (const auto& p : polygons_) n += p.size();
    return n;
  }

  const Partner& partner(const EdgeRef& e) const { return partner_[offset_[e.polygon] + e.edge]; }
  const std::string& label(const EdgeRef& e) const { return gluings_[partner(e).gluing].label; }

  bool is_translation_gluing(std::size_t g) const { return translation_[g]; }
  bool is_translation_surface() const {
    return std::all_of(translation_.begin(), translation_.end(), [](bool b) { return b; });
  }

  Scalar area() const {
    Scalar a = 0;
    for (const auto& p : polygons_) a += p.area();
    return a;
  }

  /// Point on edge `e` at parameter s mapped across its gluing.
  Vec2 transport(const EdgeRef& e, const Scalar& s) const {
    const Partner& pt = partner(e);
    const Polygon& q = polygon(pt.edge.polygon);
    Scalar t = pt.reversed ? s : Scalar(1) - s;
    return q.tail(pt.edge.edge) + t * q.edge_vector(pt.edge.edge);
  }

 private:
  void index() {
    offset_.assign(polygons_.size() + 1, 0);
    for (std::size_t i = 0; i < polygons_.size(); ++i) offset_[i + 1] = offset_[i] + polygons_[i].size();
    const std::size_t total = offset_.back();
    partner_.assign(total, Partner{});
    std::vector<int> seen(total, 0);
    auto slot = [&](const EdgeRef& e) -> std::size_t {
      if (e.polygon >= polygons_.size() || e.edge >= polygons_[e.polygon].size())
        throw Error(ErrorKind::NotAMatching, "edge reference out of range");
      return offset_[e.polygon] + e.edge;
    };
    translation_.assign(gluings_.size(), false);
    for (std::size_t g = 0; g < gluings_.size(); ++g) {
      auto& gl = gluings_[g];
      if (gl.a == gl.b) throw Error(ErrorKind::NotAMatching, "an edge cannot be glued to itself");
      std::size_t sa = slot(gl.a), sb = slot(gl.b);
      if (++seen[sa] > 1 || ++seen[sb] > 1) throw Error(ErrorKind::NotAMatching, "edge glued twice");
      partner_[sa] = {gl.b, g, gl.reversed};
      partner_[sb] = {gl.a, g, gl.reversed};
      Vec2 va = polygons_[gl.a.polygon].edge_vector(gl.a.edge);
      Vec2 vb = polygons_[gl.b.polygon].edge_vector(gl.b.edge);
      if (!(norm2(va) == norm2(vb))) throw Error(ErrorKind::LengthMismatch, "glued edges differ in length");
      translation_[g] = !gl.reversed && (va + vb) == Vec2{0, 0};
      if (gl.label.empty()) gl.label = default_label(g);
    }
    for (std::size_t i = 0; i < total; ++i)
      if (seen[i] == 0) throw Error(ErrorKind::NotAMatching, "edge left unglued");
  }

  static std::string default_label(std::size_t g) {
    if (g < 26) return std::string(1, static_cast<char>('A' + g));
    return "g" + std::to_string(g);
  }

  std::vector<Polygon> polygons_;
  std::vector<Gluing> gluings_;
  std::vector<std::size_t> offset_;
  std::vector<Partner> partner_;
  std::vector<bool> translation_;
};

inline Surface build_surface(std::vector<Polygon> polygons, std::vector<Gluing> gluings) {
  return Surface::build(std::move(polygons), std::move(gluings));
}

/// Partition of the corners into surface vertices, found by walking around
/// each vertex counterclockwise and hopping across the gluing of the edge the
/// walk leaves through. A reversed gluing flips the local sense of the walk.
inline std::vector<VertexClass> vertex_classes(const Surface& s) {
  std::vector<std::vector<bool>> visited;
  for (const auto& p : s.polygons()) visited.emplace_back(p.size(), false);

  std::vector<VertexClass> classes;
  for (std::size_t p = 0; p < s.polygons().size(); ++p) {
    for (std::size_t v = 0; v < s.polygon(p).size(); ++v) {
      if (visited[p][v]) continue;
      VertexClass vc;
      // State: the corner, and whether the walk leaves it through the edge
      // ending there (the incoming edge, the counterclockwise sense).
      Corner c{p, v};
      bool leave_via_incoming = true;
      while (!visited[c.polygon][c.vertex]) {
        visited[c.polygon][c.vertex] = true;
        vc.corners.push_back(c);
        vc.total_angle += s.polygon(c.polygon).interior_angle(c.vertex);
        const std::size_t n = s.polygon(c.polygon).size();
        EdgeRef out = leave_via_incoming ? EdgeRef{c.polygon, (c.vertex + n - 1) % n} : EdgeRef{c.polygon, c.vertex};
        // The vertex sits at the head of `out` when leaving via the incoming edge.
        bool at_head = leave_via_incoming;
        const Partner& pt = s.partner(out);
        bool partner_head = pt.reversed ? at_head : !at_head;
        const std::size_t m = s.polygon(pt.edge.polygon).size();
        std::size_t vertex = partner_head ? (pt.edge.edge + 1) % m : pt.edge.edge;
        c = Corner{pt.edge.polygon, vertex};
        // Arriving through the partner's tail means it is the corner's outgoing
        // edge, so the walk continues through the incoming one, and vice versa.
        leave_via_incoming = !partner_head;
      }
      classes.push_back(std::move(vc));
    }
  }
  return classes;
}

inline double angle_around(const Surface& s, const VertexClass& v) {
  double a = 0.0;
  for (const auto& c : v.corners) a += s.polygon(c.polygon).interior_angle(c.vertex);
  return a;
}

/// V - E + F.
inline std::int64_t euler_characteristic(const Surface& s) {
  auto v = static_cast<std::int64_t>(vertex_classes(s).size());
  auto e = static_cast<std::int64_t>(s.edge_count() / 2);
  auto f = static_cast<std::int64_t>(s.polygons().size());
  return v - e + f;
}

inline std::int64_t genus(const Surface& s) {
  std::int64_t chi = euler_characteristic(s);
  if (chi % 2 != 0) throw Error(ErrorKind::OddEulerCharacteristic, "chi = " + std::to_string(chi));
  return (2 - chi) / 2;
}

/// Returns k when angle = 2 pi k within eps.
inline std::optional<std::int64_t> multiple_of_2pi(double angle) {
  double k = angle / (2.0 * std::numbers::pi);
  double r = std::round(k);
  if (r >= 1.0 && std::abs(angle - 2.0 * std::numbers::pi * r) <= Tolerance::eps())
    return static_cast<std::int64_t>(r);
  return std::nullopt;
}

inline FlatnessReport flatness_report(const Surface& s) {
  FlatnessReport r;
  for (const auto& vc : vertex_classes(s)) {
    FlatnessEntry e{vc.total_angle, multiple_of_2pi(vc.total_angle)};
    r.flat = r.flat && e.multiple_of_2pi.has_value();
    r.vertices.push_back(e);
  }
  return r;
}

/// Vertex classes whose angle is not 2 pi: the cone points that cannot be
/// erased by regluing.
inline std::vector<VertexClass> singular_vertices(const Surface& s) {
  std::vector<VertexClass> out;
  for (auto& vc : vertex_classes(s))
    if (multiple_of_2pi(vc.total_angle) != std::optional<std::int64_t>(1)) out.push_back(std::move(vc));
  return out;
}

}  // namespace tsurf
