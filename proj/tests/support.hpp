#ifndef MORTALITY_TESTS_SUPPORT_HPP
#define MORTALITY_TESTS_SUPPORT_HPP

// Test-only oracles. Everything here is deliberately naive: repeated
// multiplication, full recurrence enumeration, undeduplicated search.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "mortality/exact.hpp"
#include "mortality/set_decider.hpp"

namespace mortality::testing {

inline Rat q(long p, long d = 1) { return Rat(p, d); }

inline Mat2 naive_pow(const Mat2& m, unsigned k) {
  Mat2 out = identity2<Rat>();
  for (unsigned i = 0; i < k; ++i) out = (out * m).eval();
  return out;
}

/// t_n = 2 cos(n theta) for n = 0..count-1 by plain iteration.
inline std::vector<Rat> cheb_t_sequence(const Rat& p, std::size_t count) {
  std::vector<Rat> t{Rat(2), 2 * p};
  while (t.size() < count) t.push_back(2 * p * t[t.size() - 1] - t[t.size() - 2]);
  t.resize(count);
  return t;
}

/// r_1..r_count by iterating c / (b - r); nullopt when a step is undefined.
inline std::optional<std::vector<Rat>> r_sequence(const Rat& b, const Rat& c, std::size_t count) {
  std::vector<Rat> r{Rat(0)};
  while (r.size() < count) {
    if (r.back() == b) return std::nullopt;
    r.push_back(c / (b - r.back()));
  }
  return r;
}

/// Smallest k <= max_k with left * v^k * right == 0, by direct multiplication.
inline std::optional<unsigned> scan_pair(const Mat2& left, const Mat2& v, const Mat2& right, unsigned max_k) {
  Mat2 mid = identity2<Rat>();
  for (unsigned k = 0; k <= max_k; ++k) {
    if (is_zero(Mat2(left * mid * right))) return k;
    mid = (mid * v).eval();
  }
  return std::nullopt;
}

/// Shortest, lexicographically first zero word by enumerating every word.
inline std::optional<Word> exhaustive_search(const Instance& inst, std::size_t max_len) {
  const std::size_t n = inst.size();
  for (std::size_t len = 1; len <= max_len; ++len) {
    Word word(len, 0);
    while (true) {
      Mat2 p = inst.matrices[word[0]];
      for (std::size_t i = 1; i < len; ++i) p = (p * inst.matrices[word[i]]).eval();
      if (is_zero(p)) return word;
      std::size_t pos = len;
      while (pos > 0 && word[pos - 1] + 1 == n) word[--pos] = 0;
      if (pos == 0) break;
      ++word[pos - 1];
    }
  }
  return std::nullopt;
}

/// A rank-one B = u v^T with B V^k B = 0 exactly for k = target and for no
/// smaller k (V non-periodic): v is chosen orthogonal to (V + r_target I) u. nullopt when r
/// is undefined before target or every trial u is an eigenvector.
inline std::optional<Mat2> planted_singular(const Mat2& v, unsigned target) {
  const CharPoly cp = char_poly(v);
  const auto r = r_sequence(cp.b, cp.c, target);
  if (!r) return std::nullopt;
  const Rat& rk = r->back();
  for (const Vec2& u : {Vec2(Rat(1), Rat(0)), Vec2(Rat(0), Rat(1)), Vec2(Rat(1), Rat(1)), Vec2(Rat(1), Rat(-2))}) {
    const Vec2 w = v * u + rk * u;
    const Vec2 perp(-w(1), w(0));
    if (perp.dot(u) == 0) continue;
    return Mat2(u * perp.transpose());
  }
  return std::nullopt;
}

inline Rat small_rat(std::mt19937_64& rng, long lo, long hi, long den_max) {
  std::uniform_int_distribution<long> nd(lo, hi), dd(1, den_max);
  const long a = nd(rng);
  return Rat(a, dd(rng));
}

inline Mat2 small_mat(std::mt19937_64& rng, long lo, long hi, long den_max) {
  return mat2<Rat>(small_rat(rng, lo, hi, den_max), small_rat(rng, lo, hi, den_max),
                   small_rat(rng, lo, hi, den_max), small_rat(rng, lo, hi, den_max));
}

inline Mat2 small_rank_one(std::mt19937_64& rng, long lo, long hi, long den_max) {
  auto vec = [&] {
    Vec2 x;
    do {
      x << small_rat(rng, lo, hi, den_max), small_rat(rng, lo, hi, den_max);
    } while (is_zero(x));
    return x;
  };
  const Vec2 u = vec();
  const Vec2 v = vec();
  return u * v.transpose();
}

inline Mat2 small_invertible(std::mt19937_64& rng, long lo, long hi, long den_max) {
  Mat2 v;
  do {
    v = small_mat(rng, lo, hi, den_max);
  } while (!is_invertible(v));
  return v;
}

}  // namespace mortality::testing

#endif  // MORTALITY_TESTS_SUPPORT_HPP
