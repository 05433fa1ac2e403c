#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tsurf/error.hpp"
#include "tsurf/surface.hpp"
#include "tsurf/words.hpp"

namespace tsurf {

/// Representative with positive x, or x = 0 and positive y.
inline Vec2 canonical_direction(const Vec2& d) {
  if (is_zero(d.x) && is_zero(d.y)) throw Error(ErrorKind::InvalidArgument, "direction must be nonzero");
  if (sign(d.x) < 0 || (sign(d.x) == 0 && sign(d.y) < 0)) return -d;
  return d;
}

/// Exact directions stay as given; float directions are scaled to unit length.
inline Vec2 working_direction(const Vec2& d) {
  if (is_zero(d.x) && is_zero(d.y)) throw Error(ErrorKind::InvalidArgument, "direction must be nonzero");
  if (d.x.is_exact() && d.y.is_exact()) return d;
  double n = std::hypot(d.xd(), d.yd());
  return {d.xd() / n, d.yd() / n};
}

struct Crossing {
  EdgeRef edge;      // edge left through, in the polygon being left
  std::string label;
  Vec2 point;        // exit point, in that polygon's coordinates
  Scalar param;      // flow time since the previous crossing (0 for a start on the edge)
};

struct Periodic {
  std::size_t period;
};
struct VertexHit {
  std::size_t at_crossing;
};
struct BudgetExhausted {};
using Terminal = std::variant<Periodic, VertexHit, BudgetExhausted>;

struct TraceResult {
  std::vector<Crossing> crossings;
  Terminal terminal = BudgetExhausted{};
  Vec2 direction;          // the direction actually flowed (unit when float)
  Scalar cycle_param = 0;  // flow time of one period, when periodic

  bool periodic() const { return std::holds_alternative<Periodic>(terminal); }
  bool hit_vertex() const { return std::holds_alternative<VertexHit>(terminal); }
  std::size_t period() const { return std::get<Periodic>(terminal).period; }
  /// Euclidean length of one period.
  double cycle_length() const { return cycle_param.to_double() * norm(direction).to_double(); }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (const auto& c : crossings) out.push_back(c.label);
    return out;
  }
  std::string word() const {
    std::string w;
    for (const auto& c : crossings) w += c.label;
    return w;
  }
};

struct TraceState {
  std::size_t polygon = 0;
  std::optional<std::size_t> entry;  // edge the flow came in through
  Vec2 point;
};

namespace detail {

inline bool same_state(const TraceState& a, const TraceState& b) {
  return a.polygon == b.polygon && a.entry == b.entry && near(a.point, b.point);
}

inline bool near_vertex(const Polygon& p, const Vec2& x) {
  for (const auto& v : p.vertices()) {
    Vec2 d = x - v;
    if (d.x.is_exact() && d.y.is_exact()) {
      if (is_zero(d.x) && is_zero(d.y)) return true;
    } else if (std::hypot(d.xd(), d.yd()) <= Tolerance::eps()) {
      return true;
    }
  }
  return false;
}

/// Edge whose relative interior contains x, if any.
inline std::optional<std::size_t> edge_containing(const Polygon& p, const Vec2& x) {
  for (std::size_t k = 0; k < p.size(); ++k) {
    Vec2 e = p.edge_vector(k), r = x - p.tail(k);
    Scalar len2 = norm2(e);
    if (!is_zero(cross(e, r) / sqrt(len2))) continue;
    Scalar u = dot(e, r) / len2;
    if (sign(u) > 0 && sign(Scalar(1) - u) > 0) return k;
  }
  return std::nullopt;
}

struct Exit {
  std::size_t edge;
  Scalar t;
  Scalar u;
};

inline std::optional<Exit> next_exit(const Polygon& p, const TraceState& st, const Vec2& d) {
  std::optional<Exit> best;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (st.entry && *st.entry == k) continue;
    Vec2 e = p.edge_vector(k);
    Scalar den = cross(d, e);
    if (is_zero(den)) continue;
    Vec2 w = p.tail(k) - st.point;
    Scalar t = cross(w, e) / den;
    Scalar u = cross(w, d) / den;
    if (sign(t) <= 0 || sign(u) < 0 || sign(Scalar(1) - u) < 0) continue;
    if (!best || t < best->t) best = Exit{k, t, u};
  }
  return best;
}

}  // namespace detail

/// Straight-line flow on a translation surface. A start on an edge, heading
/// into the polygon, counts as an initial crossing of that edge.
inline TraceResult trace(const Surface& s, std::size_t polygon, const Vec2& start, const Vec2& direction,
                         std::size_t max_crossings = 10000) {
  if (!s.is_translation_surface())
    throw Error(ErrorKind::NonTranslationGluing, "flow needs every gluing to be a translation");
  if (polygon >= s.polygons().size()) throw Error(ErrorKind::InvalidArgument, "polygon index out of range");
  TraceResult r;
  r.direction = working_direction(direction);
  const Vec2& d = r.direction;
  if (detail::near_vertex(s.polygon(polygon), start))
    throw Error(ErrorKind::StartTooCloseToVertex, "start is within eps of a vertex");

  TraceState st{polygon, std::nullopt, start};
  std::optional<TraceState> anchor;
  if (auto k = detail::edge_containing(s.polygon(polygon), start)) {
    const Polygon& p = s.polygon(polygon);
    EdgeRef here{polygon, *k};
    int side = sign(cross(p.edge_vector(*k), d));
    if (side == 0) {
      // Flowing along the edge: treat as interior.
    } else {
      Scalar u = dot(p.edge_vector(*k), start - p.tail(*k)) / norm2(p.edge_vector(*k));
      const Partner& pt = s.partner(here);
      Vec2 across = s.transport(here, u);
      if (side > 0) {
        st.entry = *k;
        r.crossings.push_back({pt.edge, s.label(here), across, 0});
      } else {
        st = TraceState{pt.edge.polygon, pt.edge.edge, across};
        r.crossings.push_back({here, s.label(here), start, 0});
      }
      anchor = st;
    }
  }

  Scalar run = 0;
  while (true) {
    const Polygon& p = s.polygon(st.polygon);
    auto ex = detail::next_exit(p, st, d);
    if (!ex) throw Error(ErrorKind::NumericalFailure, "ray left polygon without crossing an edge");
    EdgeRef out{st.polygon, ex->edge};
    Vec2 x = st.point + ex->t * d;
    if (sign(ex->u) == 0 || sign(Scalar(1) - ex->u) == 0) {
      r.crossings.push_back({out, s.label(out), x, ex->t});
      r.terminal = VertexHit{r.crossings.size() - 1};
      return r;
    }
    const Partner& pt = s.partner(out);
    TraceState next{pt.edge.polygon, pt.edge.edge, s.transport(out, ex->u)};
    if (anchor) run += ex->t;
    if (anchor && detail::same_state(next, *anchor)) {
      r.terminal = Periodic{r.crossings.size()};
      r.cycle_param = run;
      return r;
    }
    r.crossings.push_back({out, s.label(out), x, ex->t});
    if (!anchor) anchor = next;
    st = next;
    if (r.crossings.size() >= max_crossings) {
      r.terminal = BudgetExhausted{};
      return r;
    }
  }
}

/// Interior points of polygon 0 tried in turn as default starts.
inline std::vector<Vec2> default_starts(const Polygon& p) {
  std::vector<Vec2> out;
  Vec2 c = p.centroid();
  out.push_back(c);
  const Rational fr[] = {Rational(1, 7), Rational(2, 7), Rational(3, 11), Rational(5, 13), Rational(1, 3)};
  for (const auto& f : fr)
    for (std::size_t k = 0; k < p.size(); ++k) out.push_back(c + Scalar(f) * (p.vertex(k) - c));
  return out;
}

struct CuttingSequence {
  std::vector<std::string> labels;
  bool periodic = false;
  bool budget_exhausted = false;
  TraceResult trace;

  std::string word() const {
    std::string w;
    for (const auto& l : labels) w += l;
    return w;
  }
  /// The cyclic word, when periodic.
  std::optional<CyclicWord> cyclic() const {
    if (!periodic || labels.empty()) return std::nullopt;
    return CyclicWord(word());
  }
};

struct StartPoint {
  std::size_t polygon = 0;
  Vec2 point;
};

inline CuttingSequence cutting_sequence(const Surface& s, const Vec2& d, std::optional<StartPoint> start = std::nullopt,
                                        std::size_t max_crossings = 10000) {
  auto pack = [](TraceResult tr) {
    CuttingSequence cs;
    cs.labels = tr.labels();
    cs.periodic = tr.periodic();
    cs.budget_exhausted = std::holds_alternative<BudgetExhausted>(tr.terminal);
    cs.trace = std::move(tr);
    return cs;
  };
  if (start) return pack(trace(s, start->polygon, start->point, d, max_crossings));
  for (const auto& p : default_starts(s.polygon(0))) {
    try {
      auto tr = trace(s, 0, p, d, max_crossings);
      if (!tr.hit_vertex()) return pack(std::move(tr));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::StartTooCloseToVertex) throw;
    }
  }
  throw Error(ErrorKind::StartTooCloseToVertex, "every default start ran into a vertex");
}

/// Period of some closed trajectory in direction d found within the budget.
inline std::optional<std::size_t> certify_periodic_direction(const Surface& s, const Vec2& d,
                                                             std::size_t budget = 10000) {
  if (!s.is_translation_surface()) return std::nullopt;
  for (std::size_t i = 0; i < s.polygons().size(); ++i) {
    for (const auto& p : default_starts(s.polygon(i))) {
      try {
        auto tr = trace(s, i, p, d, budget);
        if (tr.periodic()) return tr.period();
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::StartTooCloseToVertex) throw;
      }
    }
  }
  return std::nullopt;
}

/// The bounce word of the square billiard corresponding to torus word w.
inline CyclicWord torus_word_to_billiard(const CyclicWord& w) {
  check_binary(w);
  if (!is_valid(validate(w))) throw Error(ErrorKind::InvalidCuttingSequence, w.letters() + " is not a cutting sequence");
  return CyclicWord(w.letters() + w.letters());
}

/// Inverse of torus_word_to_billiard.
inline CyclicWord billiard_word_to_torus(const CyclicWord& ww) {
  const std::string& s = ww.letters();
  if (s.size() % 2 != 0 || s.substr(0, s.size() / 2) != s.substr(s.size() / 2))
    throw Error(ErrorKind::InvalidCuttingSequence, s + " is not a doubled word");
  CyclicWord w(s.substr(0, s.size() / 2));
  if (!is_valid(validate(w))) throw Error(ErrorKind::InvalidCuttingSequence, w.letters() + " is not a cutting sequence");
  return w;
}

struct BilliardResult {
  std::vector<std::string> bounces;  // A: horizontal walls, B: vertical walls
  std::vector<Vec2> points;
  std::optional<std::size_t> period;

  std::string word() const {
    std::string w;
    for (const auto& b : bounces) w += b;
    return w;
  }
};

/// Reflection on the unit-square table. A start on a wall, heading inward,
/// counts as a bounce off that wall.
inline BilliardResult billiard_trace(const Vec2& start, const Vec2& direction, std::size_t max_bounces = 10000) {
  BilliardResult r;
  Vec2 d = working_direction(direction);
  Vec2 p = start;
  auto corner = [](const Vec2& x) {
    bool ex = is_zero(x.x) || is_zero(x.x - Scalar(1));
    bool ey = is_zero(x.y) || is_zero(x.y - Scalar(1));
    return ex && ey;
  };
  if (corner(p)) throw Error(ErrorKind::CornerHit, "start is a corner");
  if (sign(p.x) < 0 || sign(p.x - Scalar(1)) > 0 || sign(p.y) < 0 || sign(p.y - Scalar(1)) > 0)
    throw Error(ErrorKind::InvalidArgument, "start is off the table");
  if ((is_zero(p.y) && sign(d.y) > 0) || (is_zero(p.y - Scalar(1)) && sign(d.y) < 0)) {
    r.bounces.push_back("A");
    r.points.push_back(p);
  } else if ((is_zero(p.x) && sign(d.x) > 0) || (is_zero(p.x - Scalar(1)) && sign(d.x) < 0)) {
    r.bounces.push_back("B");
    r.points.push_back(p);
  }
  const Vec2 p0 = p, d0 = d;
  const bool anchored = !r.bounces.empty();
  std::optional<Vec2> ap, ad;
  if (anchored) {
    ap = p0;
    ad = d0;
  }
  while (r.bounces.size() < max_bounces) {
    std::optional<Scalar> tx, ty;
    if (sign(d.x) > 0) tx = (Scalar(1) - p.x) / d.x;
    if (sign(d.x) < 0) tx = (Scalar(0) - p.x) / d.x;
    if (sign(d.y) > 0) ty = (Scalar(1) - p.y) / d.y;
    if (sign(d.y) < 0) ty = (Scalar(0) - p.y) / d.y;
    Scalar t;
    bool hit_x = false, hit_y = false;
    if (tx && ty) {
      int c = compare(*tx, *ty);
      hit_x = c <= 0;
      hit_y = c >= 0;
      t = c <= 0 ? *tx : *ty;
    } else if (tx) {
      hit_x = true;
      t = *tx;
    } else {
      hit_y = true;
      t = *ty;
    }
    p = p + t * d;
    if (hit_x && hit_y) throw Error(ErrorKind::CornerHit, "trajectory runs into a corner");
    if (hit_x) d.x = -d.x;
    if (hit_y) d.y = -d.y;
    if (ap && near(p, *ap) && d == *ad) {
      r.period = r.bounces.size();
      return r;
    }
    r.bounces.push_back(hit_y ? "A" : "B");
    r.points.push_back(p);
    if (!ap) {
      ap = p;
      ad = d;
    }
  }
  return r;
}

/// Slope p/q started from the bottom wall at x = 1/(2p), which no corner
/// trajectory passes through.
inline BilliardResult billiard_trace(std::int64_t p, std::int64_t q, std::size_t max_bounces = 10000) {
  if (p < 0 || q < 0 || (p == 0 && q == 0)) throw Error(ErrorKind::InvalidArgument, "slope needs p, q >= 0");
  if (p == 0) return billiard_trace(Vec2{0, Rational(1, 2)}, Vec2{1, 0}, max_bounces);
  return billiard_trace(Vec2{Rational(1, 2 * p), 0}, Vec2{q, p}, max_bounces);
}

/// Bounces of a ray in the infinite sector between the ray at angle 0 and
/// the ray at angle theta. The ray arrives heading at angle pi + phi and
/// first strikes the angle-0 wall at (1, 0).
inline std::size_t sector_bounces(double theta, double phi) {
  const double pi = std::numbers::pi;
  if (!(theta > 0 && theta < pi)) throw Error(ErrorKind::InvalidArgument, "sector angle must lie in (0, pi)");
  if (!(phi > 0 && phi <= theta + 1e-12)) throw Error(ErrorKind::InvalidArgument, "incoming angle must lie in (0, theta]");
  double px = 1.0, py = 0.0;
  double a = pi - phi;  // heading after the first bounce
  std::size_t count = 1;
  int last = 0;
  const double eps = 1e-12;
  for (std::size_t guard = 0; guard < 100000; ++guard) {
    double dx = std::cos(a), dy = std::sin(a);
    double best = INFINITY;
    int wall = -1;
    for (int w = 0; w < 2; ++w) {
      if (w == last) continue;
      double wa = w == 0 ? 0.0 : theta;
      double ux = std::cos(wa), uy = std::sin(wa);
      double den = dx * uy - dy * ux;
      if (std::abs(den) < eps) continue;
      double t = (py * ux - px * uy) / den;
      double s = (px * dy - py * dx) / -den;
      if (t > eps && s > eps && t < best) {
        best = t;
        wall = w;
      }
    }
    if (wall < 0) return count;
    px += best * dx;
    py += best * dy;
    double wa = wall == 0 ? 0.0 : theta;
    a = 2 * wa - a;
    last = wall;
    ++count;
  }
  throw Error(ErrorKind::NumericalFailure, "sector simulation did not terminate");
}

}  // namespace tsurf
