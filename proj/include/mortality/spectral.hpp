#ifndef MORTALITY_SPECTRAL_HPP
#define MORTALITY_SPECTRAL_HPP

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "mortality/exact.hpp"

namespace mortality {

/// Exact element re + im * sqrt(d) of a quadratic extension of Q.
///
/// The radicand is kept raw (not square-free reduced) and may be negative.
/// When d is a perfect square the (re, im) pair is not unique, so equality
/// and sign compare values, not coordinates.
struct QuadNum {
  Rat re;
  Rat im;
  Rat d;

  static QuadNum rational(const Rat& x, const Rat& d) { return {x, Rat(0), d}; }

  QuadNum conj() const { return {re, -im, d}; }
  /// re^2 - d * im^2; multiplicative, equal to |z|^2 when d < 0.
  Rat norm() const { return re * re - d * im * im; }
  bool is_rational() const { return im == 0; }

  /// Sign of the real value; requires d >= 0.
  int sign() const;

  QuadNum operator-() const { return {-re, -im, d}; }
  friend QuadNum operator+(const QuadNum& a, const QuadNum& b);
  friend QuadNum operator-(const QuadNum& a, const QuadNum& b);
  friend QuadNum operator*(const QuadNum& a, const QuadNum& b);
  friend QuadNum operator/(const QuadNum& a, const QuadNum& b);
  friend QuadNum operator*(const Rat& s, const QuadNum& z) { return {s * z.re, s * z.im, z.d}; }
  friend bool operator==(const QuadNum& a, const QuadNum& b);
};

QuadNum quad_pow(const QuadNum& z, std::uint64_t k);

/// lambda_1 / lambda_2 for the roots of lambda^2 + b*lambda + c, with
/// lambda_1 = (-b - sqrt(d)) / 2 and lambda_2 = (-b + sqrt(d)) / 2, d = b^2 - 4c.
QuadNum eigen_ratio(const CharPoly& cp);

/// p in {0, +-1/2, +-1}: the rational cosines of rational multiples of pi.
bool is_niven_cosine(const Rat& p);

struct ChebyshevQuery {
  Rat p;
  Rat q;
};

namespace cheb {

/// n solves T_n(p) = q exactly when n mod period is one of residues.
struct Periodic {
  unsigned period;
  std::vector<unsigned> residues;
  friend bool operator==(const Periodic&, const Periodic&) = default;
};

struct Finite {
  std::vector<std::uint64_t> solutions;
  friend bool operator==(const Finite&, const Finite&) = default;
};

struct Empty {
  friend bool operator==(const Empty&, const Empty&) = default;
};

}  // namespace cheb

using ChebyshevAnswer = std::variant<cheb::Periodic, cheb::Finite, cheb::Empty>;

bool answer_contains(const ChebyshevAnswer& answer, std::uint64_t n);

/// All n >= 0 with T_n(p) = q, T_n the Chebyshev polynomial of the first kind.
///
/// Works on t_n = 2 cos(n theta), t_0 = 2, t_1 = 2p, t_{n+1} = 2p t_n - t_{n-1}.
/// If 2p is an integer the sequence has period dividing 12. Otherwise, with 2p
/// = a/m in lowest terms, t_n has lowest-terms denominator exactly m^n, so at
/// most one n can match and it is read off the denominator of 2q.
ChebyshevAnswer cheb_solve(const ChebyshevQuery& query);

/// Minimal m with A^m = scalar * I.
struct PeriodResult {
  unsigned order;
  Rat scalar;
};

/// Decides whether some positive power of an invertible A is a nonzero scalar
/// matrix, returning the least such power. The order, if any, lies in
/// {1, 2, 3, 4, 6}.
std::optional<PeriodResult> power_similar_identity(const Mat2& a);

}  // namespace mortality

#endif  // MORTALITY_SPECTRAL_HPP
