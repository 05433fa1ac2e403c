#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include "tsurf/error.hpp"
#include "tsurf/rational.hpp"
#include "tsurf/surface.hpp"

namespace tsurf {

namespace detail {

inline std::string letter(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('A' + i));
  return "L" + std::to_string(i);
}

/// Unit vector at angle (num/den)*pi, exact on the axes.
inline Vec2 unit_pi(std::int64_t num, std::int64_t den) {
  std::int64_t twice = 2 * num;
  if (twice % den == 0) {
    std::int64_t q = ((twice / den) % 4 + 4) % 4;  // quarter turns
    static constexpr int cs[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return {cs[q][0], cs[q][1]};
  }
  return unit(std::numbers::pi * static_cast<double>(num) / static_cast<double>(den));
}

/// Regular n-gon with unit edges, edge k pointing at angle 2*pi*k/n + turn*pi,
/// first vertex at `origin`.
inline std::vector<Vec2> regular_ngon(std::int64_t n, Rational turn = 0, Vec2 origin = {0, 0}) {
  std::vector<Vec2> v{origin};
  for (std::int64_t k = 0; k + 1 < n; ++k) {
    Rational a = Rational(2 * k, n) + turn;
    v.push_back(v.back() + unit_pi(a.num(), a.den()));
  }
  return v;
}

inline Scalar min_x(const std::vector<Vec2>& v) {
  Scalar m = v[0].x;
  for (const auto& p : v) m = p.x < m ? p.x : m;
  return m;
}
inline Scalar max_x(const std::vector<Vec2>& v) {
  Scalar m = v[0].x;
  for (const auto& p : v) m = p.x > m ? p.x : m;
  return m;
}

/// Shifts `v` so its leftmost point sits `gap` to the right of `after`.
inline std::vector<Vec2> place_right_of(std::vector<Vec2> v, const Scalar& after, const Scalar& gap = Rational(1, 2)) {
  Scalar dx = after + gap - min_x(v);
  for (auto& p : v) p.x += dx;
  return v;
}

}  // namespace detail

/// Single polygon with edge k glued to edge k + n/2.
inline Surface opposite_sides_surface(const Polygon& p) {
  const std::size_t n = p.size();
  if (n % 2 != 0) throw Error(ErrorKind::NotOppositeParallel, "odd number of edges");
  std::vector<Gluing> g;
  for (std::size_t k = 0; k < n / 2; ++k) {
    if (!((p.edge_vector(k) + p.edge_vector(k + n / 2)) == Vec2{0, 0}))
      throw Error(ErrorKind::NotOppositeParallel, "edges " + std::to_string(k) + " and " + std::to_string(k + n / 2));
    g.push_back({{0, k}, {0, k + n / 2}, false, detail::letter(k)});
  }
  return build_surface({p}, g);
}

/// Unit square; A joins bottom and top, B joins right and left.
inline Surface square_torus() {
  Polygon sq({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  return build_surface({sq}, {{{0, 0}, {0, 2}, false, "A"}, {{0, 1}, {0, 3}, false, "B"}});
}

inline Surface rectangle_torus(const Scalar& w, const Scalar& h) {
  Polygon r({{0, 0}, {w, 0}, {w, h}, {0, h}});
  return build_surface({r}, {{{0, 0}, {0, 2}, false, "A"}, {{0, 1}, {0, 3}, false, "B"}});
}

/// Parallelogram spanned by v1 then v2 (counterclockwise).
inline Surface parallelogram_torus(const Vec2& v1, const Vec2& v2) {
  Polygon p({{0, 0}, v1, v1 + v2, v2});
  return build_surface({p}, {{{0, 0}, {0, 2}, false, "A"}, {{0, 1}, {0, 3}, false, "B"}});
}

/// Any hexagon with three pairs of opposite parallel sides.
inline Surface hexagon_torus(const std::vector<Vec2>& vertices) {
  if (vertices.size() != 6) throw Error(ErrorKind::NotOppositeParallel, "hexagon needs 6 vertices");
  return opposite_sides_surface(Polygon(vertices));
}

inline Surface hexagon_torus() { return hexagon_torus(detail::regular_ngon(6)); }

/// Regular n-gon (n even) with unit edges, a horizontal bottom edge, and
/// opposite sides glued.
inline Surface regular_even_gon(std::int64_t n) {
  if (n < 4 || n % 2 != 0) throw Error(ErrorKind::InvalidArgument, "regular_even_gon needs even n >= 4");
  return opposite_sides_surface(Polygon(detail::regular_ngon(n)));
}

/// A regular n-gon and its half-turn image, edge k of one glued to edge k of
/// the other. Labels run counterclockwise from the bottom edge of the first.
inline Surface double_ngon(std::int64_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "double_ngon needs n >= 3");
  auto p1 = detail::regular_ngon(n);
  auto p2 = detail::regular_ngon(n, 1);
  p2 = detail::place_right_of(p2, detail::max_x(p1));
  std::vector<Gluing> g;
  for (std::int64_t k = 0; k < n; ++k)
    g.push_back({{0, static_cast<std::size_t>(k)}, {1, static_cast<std::size_t>(k)}, false, detail::letter(k)});
  return build_surface({Polygon(p1), Polygon(p2)}, g);
}

/// Regular 2n-gon whose even edges are glued to one regular n-gon and odd
/// edges to another. Labels follow the 2n-gon's edges.
inline Surface ward(std::int64_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "ward needs n >= 3");
  auto big = detail::regular_ngon(2 * n);
  auto q1 = detail::place_right_of(detail::regular_ngon(n, 1), detail::max_x(big));
  auto q2 = detail::place_right_of(detail::regular_ngon(n, Rational(1) + Rational(1, n)), detail::max_x(q1));
  std::vector<Gluing> g;
  for (std::int64_t k = 0; k < 2 * n; ++k) {
    std::size_t other = (k % 2 == 0) ? 1 : 2;
    g.push_back({{0, static_cast<std::size_t>(k)}, {other, static_cast<std::size_t>(k / 2)}, false, detail::letter(k)});
  }
  return build_surface({Polygon(big), Polygon(q1), Polygon(q2)}, g);
}

/// Unit square with left and right joined by translation and the top and
/// bottom each folded in half about their midpoints.
inline Surface pillowcase() {
  Polygon p({{0, 0}, {Rational(1, 2), 0}, {1, 0}, {1, 1}, {Rational(1, 2), 1}, {0, 1}});
  return build_surface({p}, {{{0, 2}, {0, 5}, false, "A"}, {{0, 0}, {0, 1}, false, "B"}, {{0, 3}, {0, 4}, false, "C"}});
}

/// Closed polyhedron from oriented faces (lists of vertex ids, each face
/// counterclockwise seen from outside) and a planar model for each face size.
inline Surface polyhedron(const std::vector<std::vector<int>>& faces,
                          const std::map<std::size_t, std::vector<Vec2>>& models) {
  std::vector<Polygon> polys;
  Scalar right = 0;
  for (const auto& f : faces) {
    auto v = detail::place_right_of(models.at(f.size()), right);
    right = detail::max_x(v);
    polys.emplace_back(v);
  }
  std::map<std::pair<int, int>, EdgeRef> directed;
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t k = 0; k < faces[i].size(); ++k)
      directed[{faces[i][k], faces[i][(k + 1) % faces[i].size()]}] = {i, k};
  std::vector<Gluing> g;
  for (const auto& [uv, e] : directed) {
    if (uv.first > uv.second) continue;
    auto it = directed.find({uv.second, uv.first});
    if (it == directed.end()) throw Error(ErrorKind::NotAMatching, "face list is not closed");
    g.push_back({e, it->second, false, detail::letter(g.size())});
  }
  return build_surface(std::move(polys), std::move(g));
}

inline Surface tetrahedron() {
  return polyhedron({{0, 2, 1}, {0, 1, 3}, {1, 2, 3}, {0, 3, 2}}, {{3, detail::regular_ngon(3)}});
}

inline Surface cube() {
  return polyhedron({{0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4}, {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}},
                    {{4, detail::regular_ngon(4)}});
}

struct SquareTiledSpec {
  std::size_t n_squares = 0;
  std::vector<std::size_t> right;  // right[i]: square to the right of square i
  std::vector<std::size_t> top;    // top[i]: square above square i
};

/// Unit squares laid out in a row, square i's right edge glued to the left of
/// right[i] and its top to the bottom of top[i].
inline Surface square_tiled(const SquareTiledSpec& spec) {
  const std::size_t n = spec.n_squares;
  auto check_perm = [n](const std::vector<std::size_t>& p, const char* name) {
    if (p.size() != n) throw Error(ErrorKind::InvalidPermutation, std::string(name) + " has the wrong length");
    std::vector<bool> hit(n, false);
    for (auto x : p) {
      if (x >= n || hit[x]) throw Error(ErrorKind::InvalidPermutation, std::string(name) + " is not a bijection");
      hit[x] = true;
    }
  };
  if (n == 0) throw Error(ErrorKind::InvalidPermutation, "no squares");
  check_perm(spec.right, "right");
  check_perm(spec.top, "top");
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    adj[i].push_back(spec.right[i]);
    adj[spec.right[i]].push_back(i);
    adj[i].push_back(spec.top[i]);
    adj[spec.top[i]].push_back(i);
  }
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    for (auto j : adj[i])
      if (!seen[j]) {
        seen[j] = true;
        ++reached;
        stack.push_back(j);
      }
  }
  if (reached != n) throw Error(ErrorKind::Disconnected, "squares do not form one surface");

  std::vector<Polygon> polys;
  for (std::size_t i = 0; i < n; ++i) {
    Scalar x = Rational(5 * static_cast<std::int64_t>(i), 4);
    polys.emplace_back(std::vector<Vec2>{{x, 0}, {x + 1, 0}, {x + 1, 1}, {x, 1}});
  }
  std::vector<Gluing> g;
  auto name = [n](const char* base, std::size_t i) { return n == 1 ? std::string(base) : base + std::to_string(i); };
  for (std::size_t i = 0; i < n; ++i) g.push_back({{i, 2}, {spec.top[i], 0}, false, name("A", i)});
  for (std::size_t i = 0; i < n; ++i) g.push_back({{i, 1}, {spec.right[i], 3}, false, name("B", i)});
  return build_surface(std::move(polys), std::move(g));
}

/// Inner corner at the origin: a w1-by-h1 core rectangle, a w2-by-h1 rectangle
/// to its right and a w1-by-h2 rectangle above it.
inline Surface l_table(const Scalar& w1, const Scalar& h1, const Scalar& w2, const Scalar& h2) {
  Polygon core({{-w1, -h1}, {0, -h1}, {0, 0}, {-w1, 0}});
  Polygon side({{0, -h1}, {w2, -h1}, {w2, 0}, {0, 0}});
  Polygon up({{-w1, 0}, {0, 0}, {0, h2}, {-w1, h2}});
  return build_surface({core, side, up}, {
                                             {{0, 1}, {1, 3}, false, "A"},
                                             {{1, 1}, {0, 3}, false, "B"},
                                             {{0, 2}, {2, 0}, false, "C"},
                                             {{2, 2}, {0, 0}, false, "D"},
                                             {{1, 2}, {1, 0}, false, "E"},
                                             {{2, 1}, {2, 3}, false, "F"},
                                         });
}

inline Surface three_square_l() { return l_table(1, 1, 1, 1); }

inline double golden_ratio() { return (1.0 + std::sqrt(5.0)) / 2.0; }

/// Unit square with golden rectangles (1/phi thick) on its top and right.
inline Surface golden_l() {
  double t = 1.0 / golden_ratio();
  return l_table(1, 1, t, t);
}

struct TriangleSpec {
  std::array<Rational, 3> angles;  // multiples of pi
};

namespace detail {

/// Linear isometry x -> rot(r * pi / D) * (flip ? conj(x) : x), with r taken mod 2D.
struct DihedralElement {
  bool flip = false;
  std::int64_t rot = 0;
  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
  friend auto operator<=>(const DihedralElement&, const DihedralElement&) = default;
};

inline DihedralElement compose(const DihedralElement& g, const DihedralElement& h, std::int64_t D) {
  std::int64_t r = (g.flip ? -h.rot : h.rot) + g.rot;
  return {g.flip != h.flip, ((r % (2 * D)) + 2 * D) % (2 * D)};
}

inline Vec2 act(const DihedralElement& g, const Vec2& v, std::int64_t D) {
  Vec2 w = g.flip ? Vec2{v.x, -v.y} : v;
  Vec2 c = unit_pi(g.rot, D);
  return {c.x * w.x - c.y * w.y, c.y * w.x + c.x * w.y};
}

}  // namespace detail

/// Reflects copies of a rational triangle across its sides until every side
/// of every copy has a partner, then glues partners by translation. One copy
/// per element of the dihedral group generated by the side reflections.
inline Surface unfold_triangle(const TriangleSpec& t) {
  Rational sum = 0;
  std::int64_t D = 1;
  for (const auto& a : t.angles) {
    if (a <= Rational(0)) throw Error(ErrorKind::InvalidArgument, "triangle angles must be positive");
    sum += a;
    D = std::lcm(D, a.den());
  }
  if (sum != Rational(1)) throw Error(ErrorKind::InvalidArgument, "triangle angles must sum to pi");

  const double pi = std::numbers::pi;
  double b = std::sin(t.angles[1].to_double() * pi) / std::sin(t.angles[2].to_double() * pi);
  Vec2 dir2 = detail::unit_pi(t.angles[0].num() * (D / t.angles[0].den()), D);
  std::array<Vec2, 3> base{Vec2{0, 0}, Vec2{1, 0}, Scalar(b) * dir2};

  // Side s runs from base[s] to base[s+1]; its direction, in units of pi/D.
  std::array<std::int64_t, 3> side_dir{0, D - t.angles[1].num() * (D / t.angles[1].den()),
                                       D + t.angles[0].num() * (D / t.angles[0].den())};
  std::array<detail::DihedralElement, 3> refl;
  for (int s = 0; s < 3; ++s) refl[s] = {true, ((2 * side_dir[s]) % (2 * D) + 2 * D) % (2 * D)};

  const std::size_t budget = static_cast<std::size_t>(2 * D);
  std::map<detail::DihedralElement, std::size_t> index;
  std::vector<detail::DihedralElement> elems;
  std::vector<Vec2> offset;
  std::queue<std::size_t> todo;
  index[{false, 0}] = 0;
  elems.push_back({false, 0});
  offset.push_back({0, 0});
  todo.push(0);
  while (!todo.empty()) {
    std::size_t i = todo.front();
    todo.pop();
    for (int s = 0; s < 3; ++s) {
      auto h = detail::compose(elems[i], refl[s], D);
      if (index.count(h)) continue;
      if (elems.size() >= budget) throw Error(ErrorKind::UnfoldingBudgetExceeded, "more than 2D copies");
      index[h] = elems.size();
      // Keep the shared side in place: t_h = t_g + g(v_s) - h(v_s).
      offset.push_back(offset[i] + detail::act(elems[i], base[s], D) - detail::act(h, base[s], D));
      elems.push_back(h);
      todo.push(elems.size() - 1);
    }
  }

  std::vector<Polygon> polys;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::array<Vec2, 3> v;
    for (int k = 0; k < 3; ++k) v[k] = offset[i] + detail::act(elems[i], base[k], D);
    if (elems[i].flip)
      polys.emplace_back(std::vector<Vec2>{v[0], v[2], v[1]});
    else
      polys.emplace_back(std::vector<Vec2>{v[0], v[1], v[2]});
  }
  auto edge_of = [&](std::size_t copy, int side) -> std::size_t {
    return elems[copy].flip ? static_cast<std::size_t>(2 - side) : static_cast<std::size_t>(side);
  };
  std::vector<Gluing> g;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int s = 0; s < 3; ++s) {
      std::size_t j = index.at(detail::compose(elems[i], refl[s], D));
      if (j < i) continue;
      g.push_back({{i, edge_of(i, s)}, {j, edge_of(j, s)}, false, "s" + std::to_string(s) + "_" + std::to_string(g.size())});
    }
  return build_surface(std::move(polys), std::move(g));
}

}  // namespace tsurf
