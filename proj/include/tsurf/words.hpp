#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "tsurf/cf.hpp"
#include "tsurf/error.hpp"
#include "tsurf/rational.hpp"
#include "tsurf/shear.hpp"

namespace tsurf {

/// A nonempty word read cyclically. The stored letters keep the rotation they
/// were built with (useful for display); equality ignores rotation.
class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(std::string letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw Error(ErrorKind::InvalidArgument, "cyclic word must be nonempty");
  }

  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  char operator[](std::size_t i) const { return letters_[i % letters_.size()]; }

  /// Lexicographically least rotation.
  std::string canonical() const { return rotation(least_rotation()); }

  /// Lexicographically greatest rotation; for torus words it starts with the
  /// longest run of the larger letter, which is how words are printed.
  std::string display() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < size(); ++i)
      if (rotation(i) > rotation(best)) best = i;
    return rotation(best);
  }

  std::string rotation(std::size_t k) const {
    k %= size();
    return letters_.substr(k) + letters_.substr(0, k);
  }

  std::size_t count(char c) const { return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), c)); }

  /// True when `factor` occurs somewhere in the cyclic word.
  bool contains(std::string_view factor) const {
    if (factor.size() > size()) {
      std::string big;
      while (big.size() < factor.size() + size()) big += letters_;
      return big.find(factor) != std::string::npos;
    }
    std::string doubled = letters_ + letters_;
    return doubled.find(factor) != std::string::npos;
  }

  /// Shortest u with this word a power of u.
  CyclicWord primitive_root() const {
    const std::size_t n = size();
    for (std::size_t p = 1; p <= n; ++p) {
      if (n % p != 0) continue;
      if (rotation(p) == letters_) return CyclicWord(letters_.substr(0, p));
    }
    return *this;
  }

  friend bool operator==(const CyclicWord& a, const CyclicWord& b) {
    return a.size() == b.size() && a.canonical() == b.canonical();
  }
  friend bool operator<(const CyclicWord& a, const CyclicWord& b) { return a.canonical() < b.canonical(); }

 private:
  std::size_t least_rotation() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < size(); ++i)
      if (rotation(i) < rotation(best)) best = i;
    return best;
  }

  std::string letters_;
};

inline std::ostream& operator<<(std::ostream& os, const CyclicWord& w) { return os << w.letters(); }

inline void check_binary(const CyclicWord& w) {
  for (char c : w.letters())
    if (c != 'A' && c != 'B') throw Error(ErrorKind::InvalidArgument, "expected a word over {A,B}: " + w.letters());
}

/// #A / #B.
inline Rational slope_of(const CyclicWord& w) {
  check_binary(w);
  auto b = static_cast<std::int64_t>(w.count('B'));
  if (b == 0) throw Error(ErrorKind::VerticalSlope, w.letters() + " has no B");
  return Rational(static_cast<std::int64_t>(w.count('A')), b);
}

inline Slope line_slope_of(const CyclicWord& w) {
  check_binary(w);
  if (w.count('B') == 0) return Slope::infinity();
  return Slope::of(slope_of(w));
}

inline CyclicWord swap(const CyclicWord& w) {
  std::string s = w.letters();
  for (char& c : s) c = (c == 'A') ? 'B' : (c == 'B' ? 'A' : c);
  return CyclicWord(std::move(s));
}

/// Every (possibly empty) run of A's between consecutive B's gains one A,
/// placed before each B.
inline CyclicWord lengthen_A(const CyclicWord& w) {
  std::string s;
  for (char c : w.letters()) {
    if (c == 'B') s += 'A';
    s += c;
  }
  return CyclicWord(std::move(s));
}

/// Every (possibly empty) run of B's between consecutive A's gains one B,
/// placed after each A.
inline CyclicWord lengthen_B(const CyclicWord& w) {
  std::string s;
  for (char c : w.letters()) {
    s += c;
    if (c == 'A') s += 'B';
  }
  return CyclicWord(std::move(s));
}

/// Drops one A from each maximal cyclic run of A's.
inline CyclicWord derive(const CyclicWord& w) {
  check_binary(w);
  if (w.count('B') == 0) throw Error(ErrorKind::PreconditionSlope, w.letters() + " has no B");
  if (w.contains("BB")) throw Error(ErrorKind::PreconditionSlope, w.letters() + " has a BB factor");
  const std::size_t n = w.size();
  std::string out;
  for (std::size_t i = 0; i < n; ++i)
    if (!(w[i] == 'A' && w[i + n - 1] == 'B')) out += w[i];
  return CyclicWord(std::move(out));
}

/// Letters whose cyclic predecessor equals their cyclic successor. Empty
/// result is reported as nullopt.
inline std::optional<CyclicWord> sandwiched(const CyclicWord& w) {
  if (w.size() < 3) throw Error(ErrorKind::WordTooShort, "sandwiched needs at least 3 letters");
  std::string out;
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i)
    if (w[i + n - 1] == w[i + 1]) out += w[i];
  if (out.empty()) return std::nullopt;
  return CyclicWord(std::move(out));
}

enum class RejectStep { BothDoubled, BoundaryWord };

constexpr std::string_view to_string(RejectStep s) {
  return s == RejectStep::BothDoubled ? "BothDoubled" : "BoundaryWord";
}

struct Valid {
  Slope slope;
};
struct Rejected {
  RejectStep step;
  std::size_t at_iteration;
};
using Verdict = std::variant<Valid, Rejected>;

inline bool is_valid(const Verdict& v) { return std::holds_alternative<Valid>(v); }

/// The four-step test: reject if both AA and BB occur, derive when B's are
/// isolated, swap letters otherwise, accept once only B's remain.
inline Verdict validate(const CyclicWord& input) {
  check_binary(input);
  CyclicWord w = input;
  for (std::size_t it = 0;; ++it) {
    if (w.count('A') == 0) return Valid{line_slope_of(input)};
    bool aa = w.contains("AA"), bb = w.count('B') > 0 && w.contains("BB");
    if (aa && bb) return Rejected{RejectStep::BothDoubled, it};
    if (w.count('B') == 0 || bb)
      w = swap(w);
    else
      w = derive(w);
  }
}

struct PrefixVerdict {
  bool rejected = false;
  RejectStep step = RejectStep::BothDoubled;
  std::size_t depth = 0;  // iterations completed (or the failing one)
};

/// The same test on a finite window of a bi-infinite sequence. Derivation
/// discards the partial A-runs at both ends since their length is unknown.
inline PrefixVerdict validate_prefix(std::string_view letters, std::size_t window = 0) {
  std::string w(letters.substr(0, window == 0 ? letters.size() : std::min(window, letters.size())));
  for (char c : w)
    if (c != 'A' && c != 'B') throw Error(ErrorKind::InvalidArgument, "expected letters A and B");
  PrefixVerdict v;
  auto has = [&](std::string_view f) { return w.find(f) != std::string::npos; };
  auto nb = [&] { return std::count(w.begin(), w.end(), 'B'); };
  if (nb() == 1 && w.front() == 'A' && w.back() == 'A') return {true, RejectStep::BoundaryWord, 0};
  for (std::size_t it = 0;; ++it) {
    v.depth = it;
    if (w.size() < 2 || nb() == 0 || nb() == static_cast<std::ptrdiff_t>(w.size())) return v;
    bool aa = has("AA"), bb = has("BB");
    if (aa && bb) return {true, RejectStep::BothDoubled, it};
    if (bb) {
      for (char& c : w) c = (c == 'A') ? 'B' : 'A';
      continue;
    }
    std::size_t first = w.find('B'), last = w.rfind('B');
    std::string inner = w.substr(first, last - first + 1), out;
    for (std::size_t i = 0; i < inner.size(); ++i)
      if (!(inner[i] == 'A' && inner[i - 1] == 'B')) out += inner[i];
    w = out;
  }
}

/// Number of distinct length-n factors, read cyclically.
inline std::size_t complexity(const CyclicWord& w, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "factor length must be positive");
  std::set<std::string> seen;
  std::string big;
  while (big.size() < w.size() + n) big += w.letters();
  for (std::size_t i = 0; i < w.size(); ++i) seen.insert(big.substr(i, n));
  return seen.size();
}

/// Number of distinct length-n factors of a finite word.
inline std::size_t complexity_linear(std::string_view w, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "factor length must be positive");
  std::set<std::string_view> seen;
  for (std::size_t i = 0; i + n <= w.size(); ++i) seen.insert(w.substr(i, n));
  return seen.size();
}

struct Stage {
  std::string operation;
  CyclicWord word;
  Slope slope;
};

struct WordFromCf {
  CyclicWord word;
  std::vector<Stage> stages;  // starting with the initial B
};

/// Start from B; insert a_k A's per B, swap, insert a_{k-1}, ..., insert a_1.
inline WordFromCf word_from_cf_staged(const ContinuedFraction& cf) {
  check_cf(cf);
  WordFromCf r;
  CyclicWord w("B");
  r.stages.push_back({"start", w, line_slope_of(w)});
  for (std::size_t i = cf.terms.size(); i-- > 0;) {
    for (std::int64_t j = 0; j < cf.terms[i]; ++j) w = lengthen_A(w);
    r.stages.push_back({"insert " + std::to_string(cf.terms[i]), w, line_slope_of(w)});
    if (i > 0) {
      w = swap(w);
      r.stages.push_back({"swap", w, line_slope_of(w)});
    }
  }
  r.word = w;
  return r;
}

inline CyclicWord word_from_cf(const ContinuedFraction& cf) { return word_from_cf_staged(cf).word; }

inline CyclicWord word_from_slope(std::int64_t p, std::int64_t q) {
  if (p < 0 || q < 1) throw Error(ErrorKind::InvalidArgument, "slope must be p/q with p >= 0, q >= 1");
  if (std::gcd(p, q) != 1) throw Error(ErrorKind::InvalidArgument, "slope must be in lowest terms");
  if (p == 0) return CyclicWord("B");
  return word_from_cf(cf_expand(p, q));
}

inline CyclicWord word_from_slope(const Rational& r) { return word_from_slope(r.num(), r.den()); }

struct CfFromWord {
  ContinuedFraction cf;
  std::vector<Stage> trace;  // each step after the input word
};

/// Replays the reduction, counting derivations between swaps.
inline CfFromWord cf_from_word(const CyclicWord& input) {
  check_binary(input);
  if (!is_valid(validate(input)))
    throw Error(ErrorKind::InvalidCuttingSequence, input.letters() + " is not a cutting sequence");
  if (input.count('B') == 0) throw Error(ErrorKind::VerticalSlope, input.letters() + " has no B");
  CfFromWord r;
  CyclicWord w = input;
  std::int64_t count = 0;
  while (w.count('A') > 0) {
    if (w.contains("BB")) {
      r.cf.terms.push_back(count);
      count = 0;
      w = swap(w);
      r.trace.push_back({"swap", w, line_slope_of(w)});
    } else {
      w = derive(w);
      ++count;
      r.trace.push_back({"derive", w, line_slope_of(w)});
    }
  }
  r.cf.terms.push_back(count);
  return r;
}

struct MatrixOnWord {
  ShearWord decomposition;
  CyclicWord word;
  std::vector<Stage> stages;
};

/// Applies the factors of decompose(m) right to left: S lengthens B-runs, T
/// lengthens A-runs.
inline MatrixOnWord apply_matrix_to_word(const ShearMatrix& m, const CyclicWord& w) {
  check_binary(w);
  if (!is_valid(validate(w)))
    throw Error(ErrorKind::InvalidCuttingSequence, w.letters() + " is not a cutting sequence");
  MatrixOnWord r{decompose(m), w, {}};
  for (auto it = r.decomposition.factors.rbegin(); it != r.decomposition.factors.rend(); ++it) {
    for (std::int64_t i = 0; i < it->exponent; ++i) {
      bool s = it->gen == Generator::S;
      r.word = s ? lengthen_B(r.word) : lengthen_A(r.word);
      r.stages.push_back({s ? "S" : "T", r.word, line_slope_of(r.word)});
    }
  }
  return r;
}

enum class WordOp { LengthenA, LengthenB, Derive, ConjugateDerive };

/// Word operator induced by a generator or its inverse.
inline WordOp word_operator_of(Generator g, bool inverse) {
  if (g == Generator::S) return inverse ? WordOp::ConjugateDerive : WordOp::LengthenB;
  return inverse ? WordOp::Derive : WordOp::LengthenA;
}

inline CyclicWord apply(WordOp op, const CyclicWord& w) {
  switch (op) {
    case WordOp::LengthenA: return lengthen_A(w);
    case WordOp::LengthenB: return lengthen_B(w);
    case WordOp::Derive: return derive(w);
    case WordOp::ConjugateDerive: return swap(derive(swap(w)));
  }
  return w;
}

struct Enumeration {
  std::vector<CyclicWord> words;                       // sorted by canonical form
  std::vector<std::vector<CyclicWord>> swap_classes;  // words identified by A<->B
};

/// Valid periodic words of primitive period n with both letters present.
inline Enumeration enumerate_valid_periodic(std::int64_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "period must be at least 2");
  Enumeration e;
  for (std::int64_t p = 1; p < n; ++p)
    if (std::gcd(p, n - p) == 1) e.words.push_back(word_from_slope(p, n - p));
  std::sort(e.words.begin(), e.words.end());
  std::map<std::string, std::size_t> cls;
  for (const auto& w : e.words) {
    std::string key = std::min(w.canonical(), swap(w).canonical());
    auto [it, fresh] = cls.emplace(key, e.swap_classes.size());
    if (fresh) e.swap_classes.emplace_back();
    e.swap_classes[it->second].push_back(w);
  }
  return e;
}

}  // namespace tsurf
