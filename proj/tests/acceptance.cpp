// Acceptance checks, one line per criterion. Exit status is the number of failures.
#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "tsurf/tsurf.hpp"

using namespace tsurf;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream why;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

std::string cli_out(std::vector<std::string> args, int* code = nullptr) {
  std::ostringstream out, err;
  int c = cli::run(args, out, err);
  if (code) *code = c;
  return out.str();
}

bool near(double a, double b, double tol = 1e-9) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

std::set<std::string> canon(const std::vector<std::string>& ws) {
  std::set<std::string> s;
  for (const auto& w : ws) s.insert(CyclicWord(w).canonical());
  return s;
}

std::vector<std::string> core_words(const CylinderDecomposition& d) {
  std::vector<std::string> out;
  for (const auto& c : d.cylinders) out.push_back(c.core_word);
  return out;
}

std::vector<double> moduli_set(const Surface& s) {
  std::vector<double> m;
  for (const auto& c : decompose_cylinders(s, Vec2{1, 0}).cylinders) m.push_back(c.modulus.to_double());
  std::sort(m.begin(), m.end());
  std::vector<double> u;
  for (double x : m)
    if (u.empty() || !near(u.back(), x)) u.push_back(x);
  return u;
}

bool same_values(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!near(a[i], b[i])) return false;
  return true;
}

CyclicWord traced(std::int64_t p, std::int64_t q) {
  auto seq = cutting_sequence(square_torus(), Vec2{Scalar(q), Scalar(p)},
                              StartPoint{0, Vec2{Rational(1, 2), Rational(2 * q + 1, 4 * q)}});
  if (!seq.periodic) throw Error(ErrorKind::NumericalFailure, "trace did not close");
  return CyclicWord(seq.word());
}

void c1(Check& c) {
  c.expect(cli_out({"cf", "expand", "15/11"}) == "[1, 2, 1, 3]\n", "cli output");
  c.expect(cf_expand(15, 11).terms == std::vector<std::int64_t>{1, 2, 1, 3}, "cf_expand");
  c.expect(rectangle_cut_counts(15, 11) == std::vector<std::int64_t>{1, 2, 1, 3}, "rectangle cutting");
}

void c2(Check& c) {
  c.expect(word_from_slope(7, 4) == CyclicWord("BABAABAABAA"), "final word");
  c.expect(cli_out({"cutseq", "from-slope", "7/4"}) == "BABAABAABAA\n", "cli output");
  auto st = word_from_cf_staged(cf_expand(7, 4)).stages;
  const std::vector<std::string> words{"B", "BAAA", "ABBB", "AABABAB", "BBABABA", "BABAABAABAA"};
  const std::vector<std::string> slopes{"0", "3", "1/3", "4/3", "3/4", "7/4"};
  c.expect(st.size() == words.size(), "stage count");
  for (std::size_t i = 0; i < std::min(st.size(), words.size()); ++i) {
    c.expect(st[i].word == CyclicWord(words[i]), "stage word " + words[i]);
    c.expect(st[i].slope.to_string() == slopes[i], "stage slope " + slopes[i]);
  }
}

void c3(Check& c) {
  c.expect(derive(CyclicWord("BAABA")) == CyclicWord("BAB"), "derive(BAABA)");
  c.expect(lengthen_B(CyclicWord("ABABB")) == CyclicWord("ABBABBB"), "lengthen_B(ABABB)");
  c.expect(derive(CyclicWord("BAAAABAAA")) == CyclicWord("BAAABAA"), "derive(BAAAABAAA)");
}

void c4(Check& c) {
  CyclicWord in("BAABABAABABA");
  auto r = cf_from_word(in);
  const std::vector<std::string> chain{"BABBABB", "ABAABAA", "ABABA", "ABB", "BAA", "BA", "B"};
  c.expect(r.trace.size() == chain.size(), "chain length");
  for (std::size_t i = 0; i < std::min(r.trace.size(), chain.size()); ++i)
    c.expect(r.trace[i].word == CyclicWord(chain[i]), "chain word " + chain[i]);
  c.expect(cf_eval(r.cf) == Rational(7, 5), "slope 7/5");
  c.expect(slope_of(in) == Rational(7, 5), "slope_of input");
}

void c5(Check& c) {
  ShearMatrix m(3, 7, 2, 5);
  c.expect(decompose(m).to_string() == "S^1 T^2 S^2", "decomposition");
  auto r = apply_matrix_to_word(m, CyclicWord("AB"));
  const std::vector<std::pair<std::string, std::string>> rows{
      {"ABB", "1/2"}, {"ABBB", "1/3"}, {"AABABAB", "4/3"}, {"AAABAABAAB", "7/3"}, {"ABABABBABABBABABB", "7/10"}};
  c.expect(r.stages.size() == rows.size(), "row count");
  for (std::size_t i = 0; i < std::min(r.stages.size(), rows.size()); ++i) {
    c.expect(r.stages[i].word.letters() == rows[i].first, "row word " + rows[i].first);
    c.expect(r.stages[i].slope.to_string() == rows[i].second, "row slope " + rows[i].second);
  }
  c.expect(r.word == CyclicWord("ABABABBABABBABABB"), "final word");
  c.expect(slope_action(m, Slope{1, 1}).to_string() == "7/10", "slope action");
}

void c6(Check& c) {
  const double two_pi = 2 * std::numbers::pi;
  auto sq = square_torus();
  c.expect(vertex_classes(sq).size() == 1 && euler_characteristic(sq) == 0 && genus(sq) == 1, "square torus");
  auto hex = hexagon_torus();
  auto hv = vertex_classes(hex);
  c.expect(hv.size() == 2 && euler_characteristic(hex) == 0 && genus(hex) == 1, "hexagon torus");
  for (const auto& v : hv) c.expect(near(v.total_angle, two_pi), "hexagon angle");
  c.expect(euler_characteristic(tetrahedron()) == 2 && genus(tetrahedron()) == 0, "tetrahedron");
  c.expect(euler_characteristic(cube()) == 2 && genus(cube()) == 0, "cube");
  auto oct = regular_even_gon(8);
  auto ov = vertex_classes(oct);
  c.expect(ov.size() == 1 && near(ov[0].total_angle, 3 * two_pi) && genus(oct) == 2, "octagon");
  auto dp = double_ngon(5);
  c.expect(vertex_classes(dp).size() == 1 && genus(dp) == 2, "double pentagon");
}

void c7(Check& c) {
  const double r2 = std::sqrt(2.0), phi = (1 + std::sqrt(5.0)) / 2, cot36 = 1 / std::tan(std::numbers::pi / 5);
  c.expect(same_values(moduli_set(regular_even_gon(8)), {1 + r2, 2 * (1 + r2)}), "octagon moduli");
  auto dp = decompose_cylinders(double_ngon(5), Vec2{1, 0});
  c.expect(dp.cylinders.size() == 2, "double pentagon cylinder count");
  for (const auto& cyl : dp.cylinders) c.expect(near(cyl.modulus.to_double(), 2 * cot36), "double pentagon modulus");
  if (dp.cylinders.size() == 2) {
    double a = dp.cylinders[0].width.to_double(), b = dp.cylinders[1].width.to_double();
    c.expect(near(std::max(a, b) / std::min(a, b), phi), "width ratio");
  }
  auto gl = decompose_cylinders(golden_l(), Vec2{1, 0});
  for (const auto& cyl : gl.cylinders) c.expect(near(cyl.modulus.to_double(), phi), "golden L modulus");
  c.expect(same_values(moduli_set(three_square_l()), {1, 2}), "three-square L moduli");
  auto hex = decompose_cylinders(regular_even_gon(6), Vec2{1, 0});
  for (const auto& cyl : hex.cylinders) {
    c.expect(near(cyl.modulus.to_double(), 2 * std::sqrt(3.0)), "hexagon modulus");
    c.expect(!cyl.rectangular, "hexagon rectangle");
  }
  for (std::int64_t n : {4, 6, 8, 10, 12})
    c.expect(modulus_miracle_check(MiracleFamily::RegularEven, n).pass, "even n=" + std::to_string(n));
  for (std::int64_t n : {3, 5, 7, 9})
    c.expect(modulus_miracle_check(MiracleFamily::Double, n).pass, "double n=" + std::to_string(n));
}

void c8(Check& c) {
  c.expect(torus_word_to_billiard(CyclicWord("ABBB")).letters() == "ABBBABBB", "doubled word");
  auto b = billiard_trace(1, 3);
  c.expect(b.period == std::optional<std::size_t>(8), "period 8");
  c.expect(CyclicWord(b.word()) == CyclicWord("ABBBABBB"), "bounce word");
  for (std::int64_t n = 1; n <= 15; ++n)
    for (std::int64_t p = 0; p <= n; ++p) {
      std::int64_t q = n - p;
      if (q == 0 || std::gcd(p, q) != 1) continue;
      std::size_t torus = traced(p, q).size();
      auto r = billiard_trace(p, q);
      c.expect(r.period && *r.period == 2 * torus && *r.period % 2 == 0,
               "slope " + Rational(p, q).to_string());
    }
}

void c9(Check& c) {
  auto e4 = enumerate_valid_periodic(4);
  c.expect(canon({e4.words[0].letters(), e4.words.back().letters()}) == std::set<std::string>{"ABBB", "AAAB"} &&
               e4.words.size() == 2 && e4.swap_classes.size() == 1,
           "period 4");
  std::set<std::string> w5;
  for (const auto& w : enumerate_valid_periodic(5).words) w5.insert(w.canonical());
  c.expect(w5 == canon({"ABBBB", "ABABB", "AABAB", "AAAAB"}) && enumerate_valid_periodic(5).swap_classes.size() == 2,
           "period 5");
  std::set<std::string> enumerated{"A", "B"};
  for (std::int64_t n = 2; n <= 12; ++n)
    for (const auto& w : enumerate_valid_periodic(n).words) enumerated.insert(w.canonical());
  c.expect(enumerated == oracle::all_cutting_sequences(12), "enumeration against lattice oracle");
  for (std::size_t len = 1; len <= 12; ++len)
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
      std::string w;
      for (std::size_t i = 0; i < len; ++i) w += (bits >> i) & 1 ? 'B' : 'A';
      bool expect = enumerated.count(oracle::least_rotation(oracle::primitive_root(w))) > 0;
      if (is_valid(validate(CyclicWord(w))) != expect) {
        c.expect(false, "validate(" + w + ")");
        return;
      }
    }
}

void c10(Check& c) {
  auto s = double_ngon(5);
  auto horiz = decompose_cylinders(s, Vec2{1, 0});
  c.expect(canon(core_words(horiz)) == canon({"BE", "CD"}), "horizontal words");
  // The flip-shear fixing the horizontal direction carries 3pi/5 to pi/10.
  const double c36 = 1 / std::tan(std::numbers::pi / 5);
  Vec2 b = unit(3 * std::numbers::pi / 5);
  Vec2 d{-b.x + Scalar(2 * c36) * b.y, b.y};
  c.expect(near(std::atan2(d.y.to_double(), d.x.to_double()), std::numbers::pi / 10), "direction (d)");
  auto tilted = decompose_cylinders(s, d);
  c.expect(canon(core_words(tilted)) == canon({"BECE", "ABECDCEB"}), "direction (d) words");
  c.expect(sandwiched(CyclicWord("BECE")) == CyclicWord("BC"), "sandwiched(BECE)");
  c.expect(sandwiched(CyclicWord("ABECDCEB")) == CyclicWord("AD"), "sandwiched(ABECDCEB)");
}

void c11(Check& c) {
  for (std::int64_t n = 1; n <= 20; ++n)
    for (std::int64_t p = 0; p < n; ++p) {
      std::int64_t q = n - p;
      if (std::gcd(p, q) != 1) continue;
      if (!(traced(p, q) == word_from_slope(p, q))) c.expect(false, "tracer at " + Rational(p, q).to_string());
    }
  const std::vector<std::pair<std::int64_t, std::int64_t>> bases{{1, 1}, {2, 3}, {1, 2}, {3, 1}, {0, 1}};
  for (std::size_t len = 0; len <= 4; ++len)
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
      ShearMatrix m;
      for (std::size_t i = 0; i < len; ++i) m = m * ((bits >> i) & 1 ? ShearMatrix::T() : ShearMatrix::S());
      for (auto [p, q] : bases) {
        Slope image = slope_action(m, Slope{p, q});
        if (image.is_infinite()) continue;
        auto sym = apply_matrix_to_word(m, word_from_slope(p, q)).word;
        if (!(sym == traced(image.num, image.den))) c.expect(false, "matrix " + m.to_string());
      }
    }
  for (std::int64_t P = 2; P <= 12; ++P)
    for (const auto& w : enumerate_valid_periodic(P).words)
      for (std::size_t n = 1; n <= static_cast<std::size_t>(2 * P); ++n)
        if (complexity(w, n) != std::min<std::size_t>(n + 1, static_cast<std::size_t>(P)))
          c.expect(false, "complexity of " + w.letters());
}

void c12(Check& c) {
  const double two_pi = 2 * std::numbers::pi;
  auto u8 = unfold_triangle({{Rational(1, 2), Rational(1, 8), Rational(3, 8)}});
  auto oct = regular_even_gon(8);
  c.expect(u8.polygons().size() == 16, "16 triangles");
  auto s8 = singular_vertices(u8);
  c.expect(s8.size() == 1 && near(s8[0].total_angle, 3 * two_pi), "one 6pi cone point");
  c.expect(genus(u8) == 2 && genus(oct) == 2, "genus 2");
  c.expect(same_values(moduli_set(u8), moduli_set(oct)), "octagon moduli set");

  auto uw = unfold_triangle({{Rational(1, 4), Rational(1, 8), Rational(5, 8)}});
  auto w4 = ward(4);
  auto sw = singular_vertices(uw), sv = singular_vertices(w4);
  c.expect(sw.size() == sv.size(), "cone point count");
  for (std::size_t i = 0; i < std::min(sw.size(), sv.size()); ++i)
    c.expect(near(sw[i].total_angle, sv[i].total_angle), "cone angle");
  c.expect(genus(uw) == genus(w4), "genus");
  c.expect(same_values(moduli_set(uw), moduli_set(w4)), "moduli set");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"continued fraction of 15/11 and rectangle cutting", c1},
      {"staged construction of the slope 7/4 word", c2},
      {"derive and lengthen on fixed words", c3},
      {"reduction chain of BAABABAABABA to slope 7/5", c4},
      {"decomposition of [3, 7; 2, 5] and its action on AB", c5},
      {"vertex, Euler characteristic and genus table", c6},
      {"horizontal cylinder moduli and the modulus check", c7},
      {"square billiard words and periods", c8},
      {"enumeration and exhaustive validation up to length 12", c9},
      {"double pentagon cylinder words and sandwiched letters", c10},
      {"tracer, matrix action and complexity oracles", c11},
      {"triangle unfoldings against octagon and ward(4)", c12},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << criteria[i].first;
    if (!c.ok) std::cout << " -- " << c.why.str();
    std::cout << '\n';
    failures += c.ok ? 0 : 1;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed\n";
  return failures;
}
