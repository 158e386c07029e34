#include "mortality/pair_decider.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include "mortality/spectral.hpp"

namespace mortality {

std::vector<Rat> ScalarRecurrence::terms(std::size_t count) const {
  std::vector<Rat> out;
  out.reserve(count);
  if (count > 0) out.push_back(s0);
  if (count > 1) out.push_back(s1);
  while (out.size() < count) {
    const std::size_t n = out.size();
    out.push_back(-b * out[n - 1] - c * out[n - 2]);
  }
  return out;
}

std::optional<Rat> r_next(const Rat& b, const Rat& c, const Rat& r_prev) {
  if (b == r_prev) return std::nullopt;
  return c / (b - r_prev);
}

std::optional<double> closed_form_exponent(const CharPoly& cp, const Rat& x) {
  using Real = boost::multiprecision::mpfr_float_50;
  const Rat disc = cp.discriminant();
  if (disc <= 0 || cp.c == 0) return std::nullopt;
  const Real root = sqrt(Real(disc));
  const Real b(cp.b);
  const Real two_x(2 * x);
  const Real ratio = (two_x - b - root) / (two_x - b + root);
  const Real base = (b + root) / (b - root);
  if (ratio == 0 || base == 0 || abs(base) == 1) return std::nullopt;
  // Both logs take absolute values: for c < 0 the base is negative and the
  // orbit alternates sign in the conjugated coordinate.
  const Real k = log(abs(ratio)) / log(abs(base));
  if (!boost::multiprecision::isfinite(k)) return std::nullopt;
  return static_cast<double>(k);
}

namespace {

// Real distinct eigenvalues. In the coordinate g(r) = (2r - b - sqrt D) /
// (2r - b + sqrt D) the r map is multiplication by mu = (b + sqrt D) /
// (b - sqrt D), and g(r_k) = mu^k. |mu| > 1 iff b > 0. Comparing |g(r)| with
// |g(x)| reduces to the sign of (uw - D)(u - w) with u = 2r - b, w = 2x - b,
// which is rational.
std::optional<std::uint64_t> solve_real_distinct(const CharPoly& cp, const Rat& x) {
  const Rat& b = cp.b;
  const Rat& c = cp.c;
  const Rat disc = cp.discriminant();

  // r_1 = 0 is not a fixed point (c != 0) and the r map is a bijection of
  // the projective line, so a fixed point is never reached.
  if (x * x - b * x + c == 0) return std::nullopt;

  const bool growing = b > 0;
  const Rat w = 2 * x - b;
  Rat r(0);
  for (std::uint64_t k = 1;; ++k) {
    if (r == x) return k;
    const Rat u = 2 * r - b;
    const int cmp = ((u * w - disc) * (u - w)).sign();
    // cmp > 0: |g(r_k)| > |g(x)|. Past the crossing point every later r_k
    // stays strictly on the far side.
    if (growing ? cmp >= 0 : cmp <= 0) return std::nullopt;
    auto next = r_next(b, c, r);
    if (!next) throw std::logic_error("solve_r_eq_x: r undefined for a non-periodic matrix");
    r = std::move(*next);
  }
}

std::optional<std::uint64_t> solve_double_root(const CharPoly& cp, const Rat& x) {
  // r_k = (k - 1) b / (2k)  =>  k = b / (b - 2x).
  const Rat denom = cp.b - 2 * x;
  if (denom == 0) return std::nullopt;
  const Rat k = cp.b / denom;
  if (den(k) != 1 || k < 1) return std::nullopt;
  return static_cast<std::uint64_t>(num(k));
}

}  // namespace

std::optional<std::uint64_t> solve_r_eq_x(const CharPoly& cp, const Rat& x) {
  if (cp.c == 0) throw ContractError("solve_r_eq_x: c must be nonzero");
  const Rat disc = cp.discriminant();
  if (disc > 0) {
    if (cp.b == 0) throw ContractError("solve_r_eq_x: b = 0 gives a periodic matrix");
    return solve_real_distinct(cp, x);
  }
  if (disc == 0) return solve_double_root(cp, x);
  if (is_niven_cosine(eigen_ratio(cp).re))
    throw ContractError("solve_r_eq_x: eigenvalue ratio is a root of unity");
  return solve_ratio_power(cp, Rat(1), -x);
}

std::optional<std::uint64_t> solve_ratio_power(const CharPoly& cp, const Rat& s0, const Rat& s1) {
  const Rat disc = cp.discriminant();
  if (disc >= 0) throw ContractError("solve_ratio_power: eigenvalues must be non-real");
  if (s0 == 0) throw ContractError("solve_ratio_power: s0 must be nonzero");
  const QuadNum rho = eigen_ratio(cp);
  if (is_niven_cosine(rho.re))
    throw ContractError("solve_ratio_power: eigenvalue ratio is a root of unity");

  // s_k = alpha lambda1^k + conj(alpha) lambda2^k, lambda1 = (-b - sqrt d) / 2.
  const QuadNum lambda2{-cp.b / 2, Rat(1, 2), disc};
  const QuadNum gap{Rat(0), Rat(-1), disc};  // lambda1 - lambda2
  const QuadNum alpha = (QuadNum::rational(s1, disc) - s0 * lambda2) / gap;
  const QuadNum tau = -(alpha.conj() / alpha);

  const ChebyshevAnswer candidates = cheb_solve({rho.re, tau.re});
  if (const auto* fin = std::get_if<cheb::Finite>(&candidates)) {
    for (std::uint64_t k : fin->solutions)
      if (k >= 1 && quad_pow(rho, k) == tau) return k;
  }
  return std::nullopt;
}

std::string_view to_string(RefusalKind kind) {
  switch (kind) {
    case RefusalKind::ZeroNeverHitMonotone:
      return "zero-never-hit-monotone";
    case RefusalKind::SingleCandidateFailed:
      return "single-candidate-failed";
    case RefusalKind::PeriodicScanExhausted:
      return "periodic-scan-exhausted";
    case RefusalKind::RatioEquationUnsatisfiable:
      return "ratio-equation-unsatisfiable";
  }
  return "unknown";
}

ScalarRecurrence pair_recurrence(const Mat2& n_left, const Mat2& v, const Mat2& n_right) {
  const auto [u_l, v_l] = factor_rank_one(n_left);
  const auto [u_r, v_r] = factor_rank_one(n_right);
  const CharPoly cp = char_poly(v);
  const Vec2 vu = v * u_r;
  return {cp.b, cp.c, v_l.dot(u_r), v_l.dot(vu)};
}

PairVerdict decide_pair(const Mat2& n_left, const Mat2& v, const Mat2& n_right) {
  if (rank(n_left) != 1 || rank(n_right) != 1)
    throw ContractError("decide_pair: endpoints must have rank 1");
  if (!is_invertible(v)) throw ContractError("decide_pair: middle factor must be invertible");

  const ScalarRecurrence rec = pair_recurrence(n_left, v, n_right);
  if (rec.s0 == 0) return PairVerdict::witness(0);

  auto confirmed = [&](std::uint64_t k) {
    if (!is_zero(Mat2(n_left * mat_pow(v, k) * n_right)))
      throw std::logic_error("decide_pair: exponent " + std::to_string(k) + " failed the product check");
    return PairVerdict::witness(k);
  };

  if (const auto period = power_similar_identity(v)) {
    // v^m = sigma I with sigma != 0, so s_{k+m} = sigma s_k.
    const auto s = rec.terms(period->order);
    for (std::uint64_t k = 1; k < period->order; ++k)
      if (s[k] == 0) return confirmed(k);
    return PairVerdict::none(RefusalKind::PeriodicScanExhausted);
  }

  const CharPoly cp{rec.b, rec.c};
  const Rat disc = cp.discriminant();
  if (disc < 0) {
    if (auto k = solve_ratio_power(cp, rec.s0, rec.s1)) return confirmed(*k);
    return PairVerdict::none(RefusalKind::RatioEquationUnsatisfiable);
  }
  const Rat x = -rec.s1 / rec.s0;
  if (auto k = solve_r_eq_x(cp, x)) return confirmed(*k);
  return PairVerdict::none(disc == 0 ? RefusalKind::SingleCandidateFailed
                                     : RefusalKind::ZeroNeverHitMonotone);
}

}  // namespace mortality
