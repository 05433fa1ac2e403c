#include <gtest/gtest.h>

#include <numbers>

#include "tsurf/families.hpp"
#include "tsurf/surface.hpp"

using namespace tsurf;

namespace {

Polygon unit_square() { return Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::NumericalFailure;
}

}  // namespace

TEST(Polygon, RejectsDegenerateInput) {
  EXPECT_EQ(kind_of([] { Polygon({{0, 0}, {1, 0}}); }), ErrorKind::DegeneratePolygon);
  EXPECT_EQ(kind_of([] { Polygon({{0, 0}, {1, 0}, {1, 0}, {0, 1}}); }), ErrorKind::DegeneratePolygon);
  EXPECT_EQ(kind_of([] { Polygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}}); }), ErrorKind::DegeneratePolygon);
  EXPECT_EQ(kind_of([] { Polygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}); }), ErrorKind::DegeneratePolygon);
}

TEST(Polygon, AreaAndAngles) {
  Polygon p = unit_square();
  EXPECT_EQ(p.area(), Scalar(1));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(p.interior_angle(i), std::numbers::pi / 2, 1e-12);
}

TEST(Surface, RejectsBadMatchings) {
  auto sq = unit_square();
  EXPECT_EQ(kind_of([&] { build_surface({sq}, {{{0, 0}, {0, 2}, false, "A"}}); }), ErrorKind::NotAMatching);
  EXPECT_EQ(kind_of([&] { build_surface({sq}, {{{0, 0}, {0, 0}, false, "A"}, {{0, 1}, {0, 3}, false, "B"}}); }),
            ErrorKind::NotAMatching);
  EXPECT_EQ(kind_of([&] {
              build_surface({sq}, {{{0, 0}, {0, 2}, false, "A"}, {{0, 0}, {0, 1}, false, "B"}, {{0, 3}, {0, 1}, false, "C"}});
            }),
            ErrorKind::NotAMatching);
  Polygon rect({{0, 0}, {2, 0}, {2, 1}, {0, 1}});
  EXPECT_EQ(kind_of([&] { build_surface({rect}, {{{0, 0}, {0, 1}, false, "A"}, {{0, 2}, {0, 3}, false, "B"}}); }),
            ErrorKind::LengthMismatch);
}

TEST(Surface, TranslationDetection) {
  auto t = square_torus();
  EXPECT_TRUE(t.is_translation_surface());
  auto flipped =
      build_surface({unit_square()}, {{{0, 0}, {0, 2}, true, "A"}, {{0, 1}, {0, 3}, false, "B"}});
  EXPECT_FALSE(flipped.is_translation_surface());
  EXPECT_FALSE(pillowcase().is_translation_surface());
}

TEST(Surface, TransportAcrossGluing) {
  auto t = square_torus();
  Vec2 x = t.transport({0, 0}, Rational(1, 4));
  EXPECT_EQ(x.x, Scalar(Rational(1, 4)));
  EXPECT_EQ(x.y, Scalar(1));
}

TEST(Topology, SquareTorus) {
  auto t = square_torus();
  auto v = vertex_classes(t);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NEAR(v[0].total_angle, 2 * std::numbers::pi, 1e-9);
  EXPECT_EQ(v[0].corners.size(), 4u);
  EXPECT_EQ(euler_characteristic(t), 0);
  EXPECT_EQ(genus(t), 1);
}

TEST(Topology, OctagonHasOneConePoint) {
  auto s = regular_even_gon(8);
  auto v = vertex_classes(s);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NEAR(angle_around(s, v[0]), 6 * std::numbers::pi, 1e-9);
  EXPECT_EQ(genus(s), 2);
  EXPECT_EQ(singular_vertices(s).size(), 1u);
}

TEST(Topology, OddEulerCharacteristicIsReported) {
  // Antipodal gluing of both side pairs.
  auto s = build_surface({unit_square()}, {{{0, 0}, {0, 2}, true, "A"}, {{0, 1}, {0, 3}, true, "B"}});
  EXPECT_EQ(euler_characteristic(s), 1);
  EXPECT_EQ(kind_of([&] { genus(s); }), ErrorKind::OddEulerCharacteristic);
}

TEST(Topology, FlatnessReport) {
  auto r = flatness_report(hexagon_torus());
  EXPECT_TRUE(r.flat);
  EXPECT_EQ(r.vertices.size(), 2u);
  auto c = flatness_report(cube());
  EXPECT_FALSE(c.flat);
}

TEST(Topology, MultipleOfTwoPi) {
  EXPECT_EQ(multiple_of_2pi(6 * std::numbers::pi), 3);
  EXPECT_FALSE(multiple_of_2pi(std::numbers::pi).has_value());
}
