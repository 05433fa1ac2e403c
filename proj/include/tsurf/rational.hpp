#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <charconv>
#include <limits>

#include "tsurf/error.hpp"

namespace tsurf {

/// Exact rational number over 64-bit integers, always in lowest terms with a
/// positive denominator. Arithmetic that would leave the int64 range throws
/// ErrorKind::Overflow rather than wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(implicit)
  Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool is_integer() const { return den_ == 1; }

  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view s) {
    auto slash = s.find('/');
    auto parse_int = [&](std::string_view t) {
      std::int64_t v = 0;
      if (t.empty()) throw Error(ErrorKind::ParseError, "empty integer in '" + std::string(s) + "'");
      auto first = t.data();
      if (*first == '+') ++first;
      auto [p, ec] = std::from_chars(first, t.data() + t.size(), v);
      if (ec != std::errc() || p != t.data() + t.size())
        throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(s) + "'");
      return v;
    };
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    std::int64_t d = parse_int(s.substr(slash + 1));
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(s) + "'");
    return Rational(parse_int(s.substr(0, slash)), d);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
    return from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
  }
  Rational operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  void assign(std::int64_t n, std::int64_t d) {
    if (d == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
    *this = from_wide(n, d);
  }

  static __int128 gcd_wide(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_wide(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd_wide(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 lo = std::numeric_limits<std::int64_t>::min() + 1;
    constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
    if (n < lo || n > hi || d > hi) throw Error(ErrorKind::Overflow, "rational out of int64 range");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace tsurf
