#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tsurf/error.hpp"
#include "tsurf/rational.hpp"

namespace tsurf {

/// [a1, a2, ..., ak] with a1 >= 0 and a_i >= 1 afterwards.
struct ContinuedFraction {
  std::vector<std::int64_t> terms;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < terms.size(); ++i) os << (i ? ", " : "") << terms[i];
    os << ']';
    return os.str();
  }
};

inline void check_cf(const ContinuedFraction& cf) {
  if (cf.terms.empty()) throw Error(ErrorKind::InvalidArgument, "continued fraction has no terms");
  if (cf.terms[0] < 0) throw Error(ErrorKind::InvalidArgument, "first term must be nonnegative");
  for (std::size_t i = 1; i < cf.terms.size(); ++i)
    if (cf.terms[i] < 1) throw Error(ErrorKind::InvalidArgument, "terms after the first must be positive");
}

/// Euclidean expansion of p/q.
inline ContinuedFraction cf_expand(std::int64_t p, std::int64_t q) {
  if (p < 0 || q < 1) throw Error(ErrorKind::InvalidArgument, "cf_expand needs p >= 0 and q >= 1");
  ContinuedFraction cf;
  while (true) {
    cf.terms.push_back(p / q);
    std::int64_t r = p % q;
    if (r == 0) break;
    p = q;
    q = r;
  }
  return cf;
}

inline ContinuedFraction cf_expand(const Rational& r) { return cf_expand(r.num(), r.den()); }

inline Rational cf_eval(const ContinuedFraction& cf) {
  check_cf(cf);
  Rational x(cf.terms.back());
  for (std::size_t i = cf.terms.size() - 1; i-- > 0;) x = Rational(cf.terms[i]) + Rational(1) / x;
  return x;
}

/// Successive convergents h_i / k_i.
inline std::vector<Rational> convergents(const ContinuedFraction& cf) {
  check_cf(cf);
  std::vector<Rational> out;
  __int128 h0 = 1, h1 = cf.terms[0], k0 = 0, k1 = 1;
  out.emplace_back(static_cast<std::int64_t>(h1), 1);
  for (std::size_t i = 1; i < cf.terms.size(); ++i) {
    __int128 h2 = cf.terms[i] * h1 + h0, k2 = cf.terms[i] * k1 + k0;
    if (h2 > INT64_MAX || k2 > INT64_MAX) break;
    out.emplace_back(static_cast<std::int64_t>(h2), static_cast<std::int64_t>(k2));
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
  }
  return out;
}

/// Greedy square cutting on a p-by-q rectangle (p along x, q along y): the
/// number of largest squares removed at each size, by repeated subtraction.
/// A leading 0 is reported when p < q so the list reads like cf_expand(p/q).
inline std::vector<std::int64_t> rectangle_cut_counts(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) throw Error(ErrorKind::InvalidArgument, "rectangle sides must be positive");
  std::vector<std::int64_t> counts;
  if (p < q) counts.push_back(0);
  std::int64_t w = std::max(p, q), h = std::min(p, q);
  while (h > 0) {
    std::int64_t n = 0;
    while (w >= h) {
      w -= h;
      ++n;
    }
    counts.push_back(n);
    std::swap(w, h);
  }
  return counts;
}

/// Expansion of a float, stopping after max_terms or once the remainder is
/// within the precision a double can carry.
inline ContinuedFraction cf_expand_float(double x, std::size_t max_terms = 40, double noise = 1e-9) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw Error(ErrorKind::InvalidArgument, "cf_expand_float needs x >= 0");
  ContinuedFraction cf;
  for (std::size_t i = 0; i < max_terms; ++i) {
    double a = std::floor(x);
    cf.terms.push_back(static_cast<std::int64_t>(a));
    double r = x - a;
    if (r < noise) break;
    x = 1.0 / r;
    if (x > 1e15) break;
  }
  return cf;
}

/// Closest convergent of x with denominator <= max_den, if it matches within tol.
inline std::optional<Rational> rational_approximation(double x, std::int64_t max_den, double tol) {
  bool neg = x < 0;
  double ax = std::abs(x);
  std::optional<Rational> best;
  for (const auto& c : convergents(cf_expand_float(ax, 64, 0.0))) {
    if (c.den() > max_den) break;
    if (std::abs(c.to_double() - ax) <= tol) {
      best = neg ? -c : c;
      break;
    }
  }
  return best;
}

}  // namespace tsurf
