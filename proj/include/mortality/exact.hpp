#ifndef MORTALITY_EXACT_HPP
#define MORTALITY_EXACT_HPP

// Exact 2x2 rational linear algebra.
//
// Matrices and vectors are plain Eigen fixed-size types over an exact scalar.
// The structural predicates below are templated on the scalar so they work
// with any exact field type Eigen accepts; the decision procedures use Rat.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace mortality {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
/// Arbitrary-precision rational, always in lowest terms with positive denominator.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

template <typename Scalar>
using Mat2T = Eigen::Matrix<Scalar, 2, 2>;
template <typename Scalar>
using Vec2T = Eigen::Matrix<Scalar, 2, 1>;

using Mat2 = Mat2T<Rat>;
using Vec2 = Vec2T<Rat>;

/// Raised when an operation is called outside its mathematical domain
/// (rank-one factorization of a rank-2 matrix, zero determinant where an
/// invertible matrix is required, ...).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// lambda^2 + b*lambda + c, so b = -trace and c = det.
template <typename Scalar>
struct CharPolyT {
  Scalar b;
  Scalar c;

  Scalar discriminant() const { return b * b - 4 * c; }
  friend bool operator==(const CharPolyT&, const CharPolyT&) = default;
};
using CharPoly = CharPolyT<Rat>;

/// Row-major entries; the scalar is always named explicitly, mat2<Rat>(...).
template <typename Scalar>
Mat2T<Scalar> mat2(const std::type_identity_t<Scalar>& e00, const std::type_identity_t<Scalar>& e01,
                   const std::type_identity_t<Scalar>& e10, const std::type_identity_t<Scalar>& e11) {
  Mat2T<Scalar> m;
  m << e00, e01, e10, e11;
  return m;
}

inline Mat2 mat2(long e00, long e01, long e10, long e11) {
  return mat2<Rat>(Rat(e00), Rat(e01), Rat(e10), Rat(e11));
}

template <typename Scalar>
Mat2T<Scalar> identity2() {
  return mat2<Scalar>(Scalar(1), Scalar(0), Scalar(0), Scalar(1));
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != Scalar(0)) return false;
  return true;
}

template <typename Derived>
typename Derived::Scalar det(const Eigen::MatrixBase<Derived>& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

template <typename Derived>
int rank(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (is_zero(m)) return 0;
  return det(m) != Scalar(0) ? 2 : 1;
}

template <typename Derived>
bool is_invertible(const Eigen::MatrixBase<Derived>& m) {
  return det(m) != typename Derived::Scalar(0);
}

/// Returns s != 0 with m == s * n, if one exists. (0, 0) yields nullopt.
template <typename DerivedM, typename DerivedN>
std::optional<typename DerivedM::Scalar> is_scalar_multiple(
    const Eigen::MatrixBase<DerivedM>& m, const Eigen::MatrixBase<DerivedN>& n) {
  using Scalar = typename DerivedM::Scalar;
  // Pivot on the first nonzero entry of n; zero patterns must then agree.
  for (Eigen::Index i = 0; i < 2; ++i) {
    for (Eigen::Index j = 0; j < 2; ++j) {
      if (n(i, j) == Scalar(0)) continue;
      Scalar s = m(i, j) / n(i, j);
      if (s == Scalar(0)) return std::nullopt;
      for (Eigen::Index a = 0; a < 2; ++a)
        for (Eigen::Index b = 0; b < 2; ++b)
          if (m(a, b) != s * n(a, b)) return std::nullopt;
      return s;
    }
  }
  return std::nullopt;
}

/// m ~ I, i.e. m is a nonzero scalar matrix.
template <typename Derived>
bool is_scalar_matrix(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  return m(0, 1) == Scalar(0) && m(1, 0) == Scalar(0) && m(0, 0) == m(1, 1) &&
         m(0, 0) != Scalar(0);
}

/// Writes a rank-one matrix as u * v^T with the first nonzero coordinate of u
/// equal to one.
template <typename Derived>
std::pair<Vec2T<typename Derived::Scalar>, Vec2T<typename Derived::Scalar>>
factor_rank_one(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (rank(m) != 1) throw ContractError("factor_rank_one: matrix must have rank 1");
  const Eigen::Index col = is_zero(m.col(0)) ? 1 : 0;
  Vec2T<Scalar> u = m.col(col);
  const Eigen::Index lead = u(0) != Scalar(0) ? 0 : 1;
  u /= Scalar(u(lead));
  Vec2T<Scalar> v = m.row(lead).transpose();
  return {u, v};
}

template <typename Derived>
CharPolyT<typename Derived::Scalar> char_poly(const Eigen::MatrixBase<Derived>& m) {
  return {-(m(0, 0) + m(1, 1)), det(m)};
}

/// Exact k-th power by repeated squaring; k = 0 gives the identity.
template <typename Derived>
Mat2T<typename Derived::Scalar> mat_pow(const Eigen::MatrixBase<Derived>& m,
                                        std::uint64_t k) {
  using Scalar = typename Derived::Scalar;
  Mat2T<Scalar> result = identity2<Scalar>();
  Mat2T<Scalar> base = m;
  while (k > 0) {
    if (k & 1) result = (result * base).eval();
    k >>= 1;
    if (k > 0) base = (base * base).eval();
  }
  return result;
}

/// Canonical projective representative: m == scale * primitive, where
/// primitive has coprime integer entries and a positive first nonzero entry
/// in row-major order.
struct Normalized {
  Mat2 primitive;
  Rat scale;
};

Normalized primitive_normalize(const Mat2& m);

// Scalar helpers.

/// Parses "n", "-n" or "p/q". With require_lowest_terms, "2/4" and "1/-2"
/// are rejected rather than silently canonicalized.
Rat parse_rat(const std::string& text, bool require_lowest_terms = true);
std::string to_string(const Rat& r);
std::string to_string(const Mat2& m);

inline int sign(const Rat& r) { return r.sign(); }
inline BigInt num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rat& r) { return boost::multiprecision::denominator(r); }

}  // namespace mortality

#endif  // MORTALITY_EXACT_HPP
