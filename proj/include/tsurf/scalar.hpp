#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "tsurf/rational.hpp"

namespace tsurf {

/// Process-wide absolute tolerance used whenever a float Scalar is compared.
/// Defaults to 1e-9; the CLI exposes it as --eps.
class Tolerance {
 public:
  static double eps() { return value().load(std::memory_order_relaxed); }
  static void set_eps(double e) {
    if (!(e > 0.0)) throw Error(ErrorKind::InvalidArgument, "eps must be positive");
    value().store(e, std::memory_order_relaxed);
  }

 private:
  static std::atomic<double>& value() {
    static std::atomic<double> v{1e-9};
    return v;
  }
};

/// Restores the previous tolerance on scope exit.
class ScopedEps {
 public:
  explicit ScopedEps(double e) : saved_(Tolerance::eps()) { Tolerance::set_eps(e); }
  ~ScopedEps() { Tolerance::set_eps(saved_); }
  ScopedEps(const ScopedEps&) = delete;
  ScopedEps& operator=(const ScopedEps&) = delete;

 private:
  double saved_;
};

/// A real number that stays an exact Rational for as long as every input is
/// rational, and degrades to a double (compared within Tolerance::eps())
/// once anything irrational enters or an exact operation would overflow.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : exact_(true), q_(v) {}             // NOLINT(implicit)
  Scalar(std::int64_t v) : exact_(true), q_(v) {}    // NOLINT(implicit)
  Scalar(const Rational& q) : exact_(true), q_(q) {}  // NOLINT(implicit)
  Scalar(double f) : exact_(false), f_(f) {}          // NOLINT(implicit)

  static Scalar ratio(std::int64_t n, std::int64_t d) { return Scalar(Rational(n, d)); }

  bool is_exact() const { return exact_; }
  const Rational& exact() const { return q_; }
  double to_double() const { return exact_ ? q_.to_double() : f_; }

  /// "p/q" for exact values, shortest round-trip decimal otherwise.
  std::string to_string() const {
    if (exact_) return q_.to_string();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", f_);
    return buf;
  }

  /// Integers and "p/q" parse exactly; anything with a decimal point or
  /// exponent parses as a float.
  static Scalar parse(std::string_view s) {
    if (s.find_first_of(".eE") == std::string_view::npos) return Scalar(Rational::parse(s));
    std::string tmp(s);
    char* end = nullptr;
    double v = std::strtod(tmp.c_str(), &end);
    if (end != tmp.c_str() + tmp.size()) throw Error(ErrorKind::ParseError, "not a number: '" + tmp + "'");
    return Scalar(v);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const Rational& x, const Rational& y) { return x + y; },
                   [](double x, double y) { return x + y; });
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const Rational& x, const Rational& y) { return x - y; },
                   [](double x, double y) { return x - y; });
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const Rational& x, const Rational& y) { return x * y; },
                   [](double x, double y) { return x * y; });
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.exact_ && b.q_.num() == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
    return combine(a, b, [](const Rational& x, const Rational& y) { return x / y; },
                   [](double x, double y) { return x / y; });
  }
  Scalar operator-() const { return exact_ ? Scalar(-q_) : Scalar(-f_); }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  /// -1, 0 or +1; a float within eps of zero has sign 0.
  friend int sign(const Scalar& a) {
    if (a.exact_) return a.q_.num() > 0 ? 1 : (a.q_.num() < 0 ? -1 : 0);
    if (std::abs(a.f_) <= Tolerance::eps()) return 0;
    return a.f_ > 0 ? 1 : -1;
  }
  friend int compare(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) {
      auto c = a.q_ <=> b.q_;
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    return sign(a - b);
  }

  friend bool operator==(const Scalar& a, const Scalar& b) { return compare(a, b) == 0; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return compare(a, b) < 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return compare(a, b) > 0; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return compare(a, b) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  template <class ExactOp, class FloatOp>
  static Scalar combine(const Scalar& a, const Scalar& b, ExactOp eop, FloatOp fop) {
    if (a.exact_ && b.exact_) {
      try {
        return Scalar(eop(a.q_, b.q_));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Overflow) throw;
      }
    }
    return Scalar(fop(a.to_double(), b.to_double()));
  }

  bool exact_ = true;
  Rational q_{};
  double f_ = 0.0;
};

inline bool is_zero(const Scalar& a) { return sign(a) == 0; }
inline Scalar abs(const Scalar& a) { return sign(a) < 0 ? -a : a; }

/// Exact when the argument is the square of a rational.
inline Scalar sqrt(const Scalar& a) {
  if (a.is_exact() && a.exact().num() >= 0) {
    auto isqrt = [](std::int64_t v) -> std::optional<std::int64_t> {
      auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
      for (std::int64_t c = std::max<std::int64_t>(0, r - 1); c <= r + 1; ++c)
        if (c * c == v) return c;
      return std::nullopt;
    };
    auto n = isqrt(a.exact().num());
    auto d = isqrt(a.exact().den());
    if (n && d) return Scalar(Rational(*n, *d));
  }
  return Scalar(std::sqrt(a.to_double()));
}

/// Returns the integer k with |x - k| within eps (exactly, for exact x).
inline std::optional<std::int64_t> nearest_integer(const Scalar& x) {
  if (x.is_exact()) {
    if (x.exact().is_integer()) return x.exact().num();
    return std::nullopt;
  }
  double r = std::round(x.to_double());
  if (std::abs(x.to_double() - r) <= Tolerance::eps()) return static_cast<std::int64_t>(r);
  return std::nullopt;
}

}  // namespace tsurf
