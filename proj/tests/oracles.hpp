#pragma once

// Reference computations that share no code with the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

/// Letters met by the line y = (p/q) x + c, 0 < c < 1/q, over one period
/// x in [0, q): B at each vertical grid line, A at each horizontal one.
inline std::string lattice_word(std::int64_t p, std::int64_t q) {
  struct Hit {
    std::int64_t key;  // x scaled by 2pq
    char letter;
  };
  std::vector<Hit> hits;
  // Offset c = 1/(2q): horizontal line y = k is hit at x = (k - c) q / p.
  for (std::int64_t i = 1; i <= q; ++i) hits.push_back({2 * p * i, 'B'});
  for (std::int64_t k = 1; k <= p; ++k) hits.push_back({2 * q * k - 1, 'A'});
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.key < b.key; });
  std::string w;
  for (const auto& h : hits) w += h.letter;
  return w;
}

inline std::string least_rotation(const std::string& w) {
  std::string best = w;
  for (std::size_t i = 1; i < w.size(); ++i) best = std::min(best, w.substr(i) + w.substr(0, i));
  return best;
}

/// Every primitive cutting sequence of length <= n, as least rotations,
/// including the one-letter words of the axis directions.
inline std::set<std::string> all_cutting_sequences(std::int64_t n) {
  std::set<std::string> out{"A", "B"};
  for (std::int64_t len = 2; len <= n; ++len)
    for (std::int64_t p = 1; p < len; ++p)
      if (std::gcd(p, len - p) == 1) out.insert(least_rotation(lattice_word(p, len - p)));
  return out;
}

inline std::string primitive_root(const std::string& w) {
  for (std::size_t d = 1; d <= w.size(); ++d) {
    if (w.size() % d) continue;
    bool ok = true;
    for (std::size_t i = d; i < w.size() && ok; ++i) ok = w[i] == w[i - d];
    if (ok) return w.substr(0, d);
  }
  return w;
}

inline std::size_t distinct_factors(const std::string& w, std::size_t n) {
  std::set<std::string> f;
  std::string big = w;
  while (big.size() < w.size() + n) big += w;
  for (std::size_t i = 0; i < w.size(); ++i) f.insert(big.substr(i, n));
  return f.size();
}

}  // namespace oracle
