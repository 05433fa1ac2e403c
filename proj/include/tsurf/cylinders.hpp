#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "tsurf/cf.hpp"
#include "tsurf/error.hpp"
#include "tsurf/families.hpp"
#include "tsurf/flow.hpp"
#include "tsurf/surface.hpp"

namespace tsurf {

/// Piece of a cylinder inside one polygon: the band between two lines
/// parallel to the direction, cut off by an entry edge and an exit edge.
/// Heights are cross(d, x) for the working direction d.
struct Strip {
  std::size_t polygon = 0;
  Scalar h0, h1;
  std::size_t left_edge = 0;   // flow enters here
  std::size_t right_edge = 0;  // flow leaves here
  Scalar area;
};

struct Cylinder {
  std::vector<Strip> strips;
  Scalar width;
  Scalar height;
  Scalar modulus;
  Scalar area;
  bool rectangular = false;  // every strip's side edges are perpendicular to the direction
  std::string core_word;
  StartPoint core_start;
};

struct CylinderDecomposition {
  Vec2 direction;  // working direction
  std::vector<Cylinder> cylinders;
  std::size_t separatrix_segments = 0;

  std::vector<Scalar> moduli() const {
    std::vector<Scalar> m;
    for (const auto& c : cylinders) m.push_back(c.modulus);
    return m;
  }
};

namespace detail {

/// Saddle-connection piece inside a polygon: the level h, along-range [a0, a1].
struct Cut {
  std::size_t polygon;
  Scalar h;
  Scalar a0, a1;
};

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

class Decomposer {
 public:
  Decomposer(const Surface& s, const Vec2& d, std::size_t budget) : s_(s), d_(working_direction(d)), budget_(budget) {
    classes_ = vertex_classes(s);
    for (std::size_t c = 0; c < classes_.size(); ++c)
      for (const auto& k : classes_[c].corners) class_of_[k] = c;
  }

  CylinderDecomposition run() {
    if (!s_.is_translation_surface())
      throw Error(ErrorKind::NonTranslationGluing, "cylinders need a translation surface");
    for (std::size_t c = 0; c < classes_.size(); ++c)
      if (multiple_of_2pi(classes_[c].total_angle) != std::optional<std::int64_t>(1)) follow_from(c);
    build_strips();
    merge();
    return assemble();
  }

 private:
  Scalar height(const Vec2& x) const { return cross(d_, x); }
  Scalar along(const Vec2& x) const { return dot(d_, x); }

  void add_cut(std::size_t poly, const Vec2& from, const Vec2& to) {
    Scalar a0 = along(from), a1 = along(to);
    if (a1 < a0) std::swap(a0, a1);
    cuts_.push_back({poly, height(from), a0, a1});
  }

  /// Where the direction leaves vertex class c: (corner, runs along its outgoing edge).
  std::vector<std::pair<Corner, bool>> departures(std::size_t c) const {
    std::vector<std::pair<Corner, bool>> out;
    for (const auto& k : classes_[c].corners) {
      const Polygon& p = s_.polygon(k.polygon);
      Vec2 e_out = p.edge_vector(k.vertex);
      Vec2 e_in = p.vertex(k.vertex + p.size() - 1) - p.vertex(k.vertex);
      if (is_zero(cross(e_out, d_) / norm(e_out)) && sign(dot(e_out, d_)) > 0) {
        out.push_back({k, true});
        continue;
      }
      if (is_zero(cross(e_in, d_) / norm(e_in))) continue;
      double to_d = ccw_angle(e_out, d_), to_in = ccw_angle(e_out, e_in);
      if (to_d < to_in && std::abs(to_d - to_in) > Tolerance::eps()) out.push_back({k, false});
    }
    return out;
  }

  /// Traces every separatrix leaving vertex class c in direction d, passing
  /// straight through regular vertices, until each ends at a cone point.
  void follow_from(std::size_t c) {
    for (const auto& [corner, along_edge] : departures(c)) follow(corner, along_edge);
  }

  void follow(Corner start, bool along_edge) {
    std::size_t steps = 0;
    Corner k = start;
    bool edge = along_edge;
    while (true) {
      if (++steps > budget_) throw Error(ErrorKind::NotCylinderDirection, "a separatrix did not reach a vertex");
      ++segments_;
      const Polygon& p = s_.polygon(k.polygon);
      std::optional<Corner> arrival;
      if (edge) {
        add_cut(k.polygon, p.vertex(k.vertex), p.vertex(k.vertex + 1));
        const Partner& pt = s_.partner({k.polygon, k.vertex});
        const Polygon& q = s_.polygon(pt.edge.polygon);
        add_cut(pt.edge.polygon, q.head(pt.edge.edge), q.tail(pt.edge.edge));
        arrival = Corner{k.polygon, (k.vertex + 1) % p.size()};
      } else {
        TraceState st{k.polygon, std::nullopt, p.vertex(k.vertex)};
        while (!arrival) {
          if (++steps > budget_) throw Error(ErrorKind::NotCylinderDirection, "a separatrix did not reach a vertex");
          const Polygon& cur = s_.polygon(st.polygon);
          auto ex = next_exit(cur, st, d_);
          if (!ex) throw Error(ErrorKind::NumericalFailure, "separatrix left a polygon without crossing an edge");
          Vec2 x = st.point + ex->t * d_;
          add_cut(st.polygon, st.point, x);
          if (sign(ex->u) == 0) {
            arrival = Corner{st.polygon, ex->edge};
          } else if (sign(Scalar(1) - ex->u) == 0) {
            arrival = Corner{st.polygon, (ex->edge + 1) % cur.size()};
          } else {
            EdgeRef out{st.polygon, ex->edge};
            const Partner& pt = s_.partner(out);
            st = TraceState{pt.edge.polygon, pt.edge.edge, s_.transport(out, ex->u)};
          }
        }
      }
      std::size_t c = class_of_.at(*arrival);
      if (multiple_of_2pi(classes_[c].total_angle) != std::optional<std::int64_t>(1)) return;
      auto next = departures(c);
      if (next.size() != 1) throw Error(ErrorKind::NumericalFailure, "regular vertex without a unique continuation");
      k = next[0].first;
      edge = next[0].second;
    }
  }

  /// Point of edge k of polygon p at height h (the edge must cross h).
  Vec2 at_height(const Polygon& p, std::size_t k, const Scalar& h) const {
    Vec2 a = p.tail(k), b = p.head(k);
    Scalar ha = height(a), hb = height(b);
    return a + ((h - ha) / (hb - ha)) * (b - a);
  }

  void build_strips() {
    for (std::size_t pi = 0; pi < s_.polygons().size(); ++pi) {
      const Polygon& p = s_.polygon(pi);
      std::vector<Scalar> levels;
      for (const auto& v : p.vertices()) levels.push_back(height(v));
      for (const auto& c : cuts_)
        if (c.polygon == pi) levels.push_back(c.h);
      std::sort(levels.begin(), levels.end(), [](const Scalar& a, const Scalar& b) { return a.to_double() < b.to_double(); });
      std::vector<Scalar> uniq;
      for (const auto& h : levels)
        if (uniq.empty() || !(h == uniq.back())) uniq.push_back(h);
      for (std::size_t i = 0; i + 1 < uniq.size(); ++i) {
        Scalar h0 = uniq[i], h1 = uniq[i + 1];
        Scalar hm = (h0 + h1) / Scalar(2);
        std::vector<std::pair<Scalar, std::size_t>> hits;
        for (std::size_t k = 0; k < p.size(); ++k) {
          int sa = sign(height(p.tail(k)) - hm), sb = sign(height(p.head(k)) - hm);
          if (sa * sb < 0) hits.push_back({along(at_height(p, k, hm)), k});
        }
        std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) { return a.first.to_double() < b.first.to_double(); });
        for (std::size_t j = 0; j + 1 < hits.size(); j += 2) {
          Strip st{pi, h0, h1, hits[j].second, hits[j + 1].second, 0};
          st.area = strip_area(st);
          strips_.push_back(st);
        }
      }
    }
  }

  /// Along-range of a strip at level h (h0 <= h <= h1).
  std::pair<Scalar, Scalar> span(const Strip& st, const Scalar& h) const {
    const Polygon& p = s_.polygon(st.polygon);
    return {along(at_height(p, st.left_edge, h)), along(at_height(p, st.right_edge, h))};
  }

  Scalar strip_area(const Strip& st) const {
    auto [l0, r0] = span(st, st.h0);
    auto [l1, r1] = span(st, st.h1);
    return ((r0 - l0) + (r1 - l1)) * (st.h1 - st.h0) / (Scalar(2) * norm2(d_));
  }

  bool cut_covers(std::size_t poly, const Scalar& h, const Scalar& lo, const Scalar& hi) const {
    for (const auto& c : cuts_) {
      if (c.polygon != poly || !(c.h == h)) continue;
      Scalar a = c.a0 > lo ? c.a0 : lo, b = c.a1 < hi ? c.a1 : hi;
      if (sign(b - a) > 0) return true;
    }
    return false;
  }

  void merge() {
    uf_.emplace(strips_.size());
    auto& uf = *uf_;
    for (std::size_t i = 0; i < strips_.size(); ++i) {
      const Strip& a = strips_[i];
      // Across the exit edge.
      EdgeRef out{a.polygon, a.right_edge};
      const Partner& pt = s_.partner(out);
      Vec2 tau = s_.polygon(pt.edge.polygon).head(pt.edge.edge) - s_.polygon(a.polygon).tail(a.right_edge);
      Scalar dh = height(tau);
      for (std::size_t j = 0; j < strips_.size(); ++j) {
        const Strip& b = strips_[j];
        if (b.polygon != pt.edge.polygon || b.left_edge != pt.edge.edge) continue;
        Scalar lo = a.h0 + dh > b.h0 ? a.h0 + dh : b.h0;
        Scalar hi = a.h1 + dh < b.h1 ? a.h1 + dh : b.h1;
        if (sign(hi - lo) > 0) uf.join(i, j);
      }
      // Directly above, inside the same polygon.
      for (std::size_t j = 0; j < strips_.size(); ++j) {
        const Strip& b = strips_[j];
        if (b.polygon != a.polygon || !(b.h0 == a.h1)) continue;
        auto [al, ar] = span(a, a.h1);
        auto [bl, br] = span(b, b.h0);
        Scalar lo = al > bl ? al : bl, hi = ar < br ? ar : br;
        if (sign(hi - lo) > 0 && !cut_covers(a.polygon, a.h1, lo, hi)) uf.join(i, j);
      }
    }
    // Across edges parallel to the direction.
    for (std::size_t pi = 0; pi < s_.polygons().size(); ++pi) {
      const Polygon& p = s_.polygon(pi);
      for (std::size_t k = 0; k < p.size(); ++k) {
        Vec2 e = p.edge_vector(k);
        if (!is_zero(cross(e, d_) / norm(e)) || sign(dot(e, d_)) < 0) continue;
        // Edge runs along +d, so the polygon lies above it.
        const Partner& pt = s_.partner({pi, k});
        const Polygon& q = s_.polygon(pt.edge.polygon);
        Vec2 tau = q.head(pt.edge.edge) - p.tail(k);
        Scalar he = height(p.tail(k));
        Scalar ea = along(p.tail(k)), eb = along(p.head(k));
        for (std::size_t i = 0; i < strips_.size(); ++i) {
          const Strip& a = strips_[i];
          if (a.polygon != pi || !(a.h0 == he)) continue;
          auto [al, ar] = span(a, a.h0);
          for (std::size_t j = 0; j < strips_.size(); ++j) {
            const Strip& b = strips_[j];
            if (b.polygon != pt.edge.polygon || !(b.h1 == he + height(tau))) continue;
            auto [bl, br] = span(b, b.h1);
            Scalar shift = along(tau);
            Scalar lo_s = al, hi_s = ar;
            if (bl - shift > lo_s) lo_s = bl - shift;
            if (ea > lo_s) lo_s = ea;
            if (br - shift < hi_s) hi_s = br - shift;
            if (eb < hi_s) hi_s = eb;
            if (sign(hi_s - lo_s) > 0 && !cut_covers(pi, he, lo_s, hi_s)) uf.join(i, j);
          }
        }
      }
    }
  }

  CylinderDecomposition assemble() {
    auto& uf = *uf_;
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < strips_.size(); ++i) groups[uf.find(i)].push_back(i);
    CylinderDecomposition dec;
    dec.direction = d_;
    dec.separatrix_segments = segments_;
    std::vector<std::vector<std::size_t>> ordered;
    for (auto& [root, members] : groups) ordered.push_back(members);
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (const auto& members : ordered) {
      Cylinder cyl;
      cyl.area = 0;
      cyl.rectangular = true;
      for (auto i : members) {
        const Strip& st = strips_[i];
        cyl.strips.push_back(st);
        cyl.area += st.area;
        const Polygon& p = s_.polygon(st.polygon);
        if (!is_zero(dot(p.edge_vector(st.left_edge), d_)) || !is_zero(dot(p.edge_vector(st.right_edge), d_)))
          cyl.rectangular = false;
      }
      const Strip& first = strips_[members.front()];
      const Polygon& p = s_.polygon(first.polygon);
      // A leaf may still run into a regular vertex of another polygon, so try
      // a few heights inside the strip.
      std::optional<TraceResult> core;
      Vec2 mid;
      for (const Rational& f : {Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(2, 7), Rational(5, 7),
                                Rational(3, 11), Rational(8, 13)}) {
        Scalar h = first.h0 + Scalar(f) * (first.h1 - first.h0);
        Vec2 l = at_height(p, first.left_edge, h), r = at_height(p, first.right_edge, h);
        mid = Scalar(Rational(1, 2)) * (l + r);
        auto tr = trace(s_, first.polygon, mid, d_, 100000);
        if (tr.periodic()) {
          core = std::move(tr);
          break;
        }
        if (!tr.hit_vertex()) break;
      }
      if (!core) throw Error(ErrorKind::NotCylinderDirection, "core curve does not close");
      const TraceResult& tr = *core;
      Scalar width2 = tr.cycle_param * tr.cycle_param * norm2(d_);
      cyl.width = sqrt(width2);
      cyl.height = cyl.area / cyl.width;
      cyl.modulus = width2 / cyl.area;
      cyl.core_word = tr.word();
      cyl.core_start = {first.polygon, mid};
      dec.cylinders.push_back(std::move(cyl));
    }
    return dec;
  }

  const Surface& s_;
  Vec2 d_;
  std::size_t budget_;
  std::vector<VertexClass> classes_;
  std::map<Corner, std::size_t> class_of_;
  std::vector<Cut> cuts_;
  std::vector<Strip> strips_;
  std::optional<UnionFind> uf_;
  std::size_t segments_ = 0;
};

}  // namespace detail

/// Cylinders of a translation surface in direction d. Every separatrix from a
/// cone point must end at a cone point within `budget` segments.
inline CylinderDecomposition decompose_cylinders(const Surface& s, const Vec2& d, std::size_t budget = 200) {
  return detail::Decomposer(s, d, budget).run();
}

/// Ratios m_i / m_1 as rationals, if all of them are.
inline std::optional<std::vector<Rational>> moduli_rationally_related(const CylinderDecomposition& dec,
                                                                      std::int64_t max_denominator = 64) {
  std::vector<Rational> out;
  if (dec.cylinders.empty()) return out;
  const Scalar& m1 = dec.cylinders.front().modulus;
  for (const auto& c : dec.cylinders) {
    Scalar r = c.modulus / m1;
    if (r.is_exact()) {
      out.push_back(r.exact());
      continue;
    }
    auto q = rational_approximation(r.to_double(), max_denominator, 10 * Tolerance::eps());
    if (!q) return std::nullopt;
    out.push_back(*q);
  }
  return out;
}

/// Smallest M > 0 with every M / m_i an integer.
inline std::optional<Scalar> minimal_shear_parameter(const CylinderDecomposition& dec, std::int64_t max_denominator = 64) {
  auto ratios = moduli_rationally_related(dec, max_denominator);
  if (!ratios || ratios->empty()) return std::nullopt;
  std::int64_t l = 1, g = 0;
  for (const auto& r : *ratios) {
    l = std::lcm(l, r.num());
    g = std::gcd(g, r.den());
  }
  return dec.cylinders.front().modulus * Scalar(Rational(l, g));
}

/// Number of twists M / m_i each cylinder receives under the shear with parameter M.
inline std::vector<std::int64_t> twist_counts(const CylinderDecomposition& dec, const Scalar& M) {
  std::vector<std::int64_t> out;
  for (const auto& c : dec.cylinders) {
    Scalar q = M / c.modulus;
    auto k = q.is_exact() ? nearest_integer(q) : [&]() -> std::optional<std::int64_t> {
      double r = std::round(q.to_double());
      if (std::abs(q.to_double() - r) <= 10 * Tolerance::eps() * std::max(1.0, std::abs(r)))
        return static_cast<std::int64_t>(r);
      return std::nullopt;
    }();
    if (!k || *k <= 0) throw Error(ErrorKind::NonIntegerTwist, "M / m = " + q.to_string());
    out.push_back(*k);
  }
  return out;
}

enum class MiracleFamily { RegularEven, Double };

struct MiracleEntry {
  double modulus;
  double expected;
  bool rectangular;
  bool pass;
};

struct MiracleReport {
  MiracleFamily family;
  std::int64_t n;
  std::vector<MiracleEntry> cylinders;
  bool rectangle_present = false;
  bool rectangle_expected = false;
  bool pass = true;
};

/// Horizontal moduli against the closed forms: 2 cot(pi/n) for every
/// cylinder, except a rectangular one of modulus cot(pi/n), which the even
/// family has exactly when 4 divides n.
inline MiracleReport modulus_miracle_check(MiracleFamily family, std::int64_t n) {
  MiracleReport r{family, n, {}, false, false, true};
  Surface s = family == MiracleFamily::RegularEven ? regular_even_gon(n) : double_ngon(n);
  auto dec = decompose_cylinders(s, Vec2{1, 0});
  double c = 1.0 / std::tan(std::numbers::pi / static_cast<double>(n));
  r.rectangle_expected = family == MiracleFamily::RegularEven && n % 4 == 0;
  std::size_t rects = 0;
  for (const auto& cyl : dec.cylinders) {
    bool rect = family == MiracleFamily::RegularEven && cyl.rectangular;
    double expected = rect ? c : 2 * c;
    double m = cyl.modulus.to_double();
    bool ok = std::abs(m - expected) <= 1e-9 * std::max(1.0, expected);
    rects += rect ? 1 : 0;
    r.cylinders.push_back({m, expected, rect, ok});
    r.pass = r.pass && ok;
  }
  r.rectangle_present = rects > 0;
  r.pass = r.pass && (r.rectangle_present == r.rectangle_expected) && rects <= 1;
  return r;
}

}  // namespace tsurf
