#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tsurf/error.hpp"
#include "tsurf/rational.hpp"

namespace tsurf {

/// Integer matrix [a, b; c, d] with determinant 1.
struct ShearMatrix {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  ShearMatrix() = default;
  ShearMatrix(std::int64_t a_, std::int64_t b_, std::int64_t c_, std::int64_t d_) : a(a_), b(b_), c(c_), d(d_) {
    if (a * d - b * c != 1) throw Error(ErrorKind::InvalidDeterminant, "determinant is " + std::to_string(a * d - b * c));
  }

  static ShearMatrix S() { return {1, 1, 0, 1}; }
  static ShearMatrix T() { return {1, 0, 1, 1}; }

  friend ShearMatrix operator*(const ShearMatrix& x, const ShearMatrix& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  ShearMatrix inverse() const { return {d, -b, -c, a}; }

  friend bool operator==(const ShearMatrix&, const ShearMatrix&) = default;

  std::string to_string() const {
    std::ostringstream os;
    os << '[' << a << ", " << b << "; " << c << ", " << d << ']';
    return os.str();
  }
};

enum class Generator { S, T };

struct ShearFactor {
  Generator gen;
  std::int64_t exponent;
  friend bool operator==(const ShearFactor&, const ShearFactor&) = default;
};

/// Product of generator powers, read left to right.
struct ShearWord {
  std::vector<ShearFactor> factors;

  friend bool operator==(const ShearWord&, const ShearWord&) = default;

  /// Appends gen^e, merging with a trailing factor of the same generator.
  void push(Generator g, std::int64_t e = 1) {
    if (e <= 0) throw Error(ErrorKind::InvalidArgument, "shear exponents must be positive");
    if (!factors.empty() && factors.back().gen == g)
      factors.back().exponent += e;
    else
      factors.push_back({g, e});
  }

  ShearMatrix product() const {
    ShearMatrix m;
    for (const auto& f : factors)
      for (std::int64_t i = 0; i < f.exponent; ++i) m = m * (f.gen == Generator::S ? ShearMatrix::S() : ShearMatrix::T());
    return m;
  }

  std::string to_string() const {
    if (factors.empty()) return "I";
    std::string s;
    for (const auto& f : factors) {
      if (!s.empty()) s += ' ';
      s += (f.gen == Generator::S ? "S^" : "T^") + std::to_string(f.exponent);
    }
    return s;
  }
};

/// Peels S or T off the left until what remains is a pure power of one of
/// them. Needs nonnegative entries.
inline ShearWord decompose(ShearMatrix m) {
  if (m.a < 0 || m.b < 0 || m.c < 0 || m.d < 0) throw Error(ErrorKind::NegativeEntry, m.to_string());
  ShearWord w;
  while (true) {
    if (m.a == 1 && m.c == 0 && m.d == 1) {
      if (m.b > 0) w.push(Generator::S, m.b);
      return w;
    }
    if (m.a == 1 && m.b == 0 && m.d == 1) {
      if (m.c > 0) w.push(Generator::T, m.c);
      return w;
    }
    if (m.a >= m.c && m.b >= m.d) {
      m = ShearMatrix::S().inverse() * m;
      w.push(Generator::S);
    } else {
      m = ShearMatrix::T().inverse() * m;
      w.push(Generator::T);
    }
  }
}

inline bool verify_decomposition(const ShearMatrix& m, const ShearWord& w) { return w.product() == m; }

/// Slope of a line; den == 0 encodes the vertical line.
struct Slope {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Slope infinity() { return {1, 0}; }
  static Slope of(const Rational& r) { return {r.num(), r.den()}; }
  bool is_infinite() const { return den == 0; }
  Rational value() const {
    if (is_infinite()) throw Error(ErrorKind::VerticalSlope, "slope is infinite");
    return Rational(num, den);
  }
  friend bool operator==(const Slope&, const Slope&) = default;
  std::string to_string() const {
    if (is_infinite()) return "inf";
    return Rational(num, den).to_string();
  }
};

/// Image of the line through (q, p) under m, as a slope with den >= 0.
inline Slope slope_action(const ShearMatrix& m, const Slope& s) {
  std::int64_t x = s.is_infinite() ? 0 : s.den;
  std::int64_t y = s.is_infinite() ? 1 : s.num;
  std::int64_t nx = m.a * x + m.b * y;
  std::int64_t ny = m.c * x + m.d * y;
  if (nx == 0) return Slope::infinity();
  Rational r(ny, nx);
  return {r.num(), r.den()};
}

}  // namespace tsurf
