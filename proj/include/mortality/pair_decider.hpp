#ifndef MORTALITY_PAIR_DECIDER_HPP
#define MORTALITY_PAIR_DECIDER_HPP

// Decides N_left * V^k * N_right = 0 for rank-one N_left, N_right and
// invertible V.
//
// With N_left = u_l v_l^T and N_right = u_r v_r^T the product is
// s_k * u_l v_r^T where s_k = v_l^T V^k u_r, and Cayley-Hamilton gives the
// order-2 recurrence s_{k+2} = -b s_{k+1} - c s_k. For k >= 1,
// V^k is a nonzero multiple of V + r_k I with r_1 = 0, r_k = c / (b - r_{k-1}),
// so s_k = 0 iff r_k = -s_1 / s_0.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mortality/exact.hpp"

namespace mortality {

/// s_{k+2} = -b s_{k+1} - c s_k.
struct ScalarRecurrence {
  Rat b;
  Rat c;
  Rat s0;
  Rat s1;

  /// s_0 .. s_{count-1}.
  std::vector<Rat> terms(std::size_t count) const;
};

/// One r step: c / (b - r_prev), or nullopt when r_prev == b (then V^k ~ I).
std::optional<Rat> r_next(const Rat& b, const Rat& c, const Rat& r_prev);

/// Unique k >= 1 with r_k = x for a non-periodic V with characteristic
/// polynomial cp. Throws ContractError if c == 0 or cp forces periodicity.
///
/// Distinct real roots: r is iterated exactly until it hits x or until the
/// orbit has provably moved past x in the coordinate where the r map is a
/// pure scaling (see closed_form_exponent); no floating point is involved.
/// Double root: r_k = (k - 1) b / (2k) is inverted linearly.
/// Complex roots: delegates to solve_ratio_power with (s0, s1) = (1, -x).
std::optional<std::uint64_t> solve_r_eq_x(const CharPoly& cp, const Rat& x);

/// Real-valued k with r_k = x from the logarithmic closed form
///   k = ln|(2x - b - sqrt D) / (2x - b + sqrt D)| / ln|(b + sqrt D) / (b - sqrt D)|,
/// D = b^2 - 4c > 0, evaluated with 166-bit MPFR. Only a numeric estimate;
/// nullopt outside the distinct-real-root regime.
std::optional<double> closed_form_exponent(const CharPoly& cp, const Rat& x);

/// Smallest k >= 1 with s_k = 0 for complex-conjugate eigenvalues whose ratio
/// rho is not a root of unity. s_k = 0 iff rho^k = tau for an exact tau in
/// Q(sqrt(b^2 - 4c)); the single candidate comes from cheb_solve on the real
/// parts and is confirmed with quad_pow.
std::optional<std::uint64_t> solve_ratio_power(const CharPoly& cp, const Rat& s0, const Rat& s1);

enum class RefusalKind {
  ZeroNeverHitMonotone,
  SingleCandidateFailed,
  PeriodicScanExhausted,
  RatioEquationUnsatisfiable,
};

std::string_view to_string(RefusalKind kind);

struct PairVerdict {
  /// Witness exponent, or nullopt with `refusal` set.
  std::optional<std::uint64_t> exponent;
  RefusalKind refusal = RefusalKind::ZeroNeverHitMonotone;

  bool has_witness() const { return exponent.has_value(); }

  static PairVerdict witness(std::uint64_t k) { return {k, {}}; }
  static PairVerdict none(RefusalKind why) { return {std::nullopt, why}; }
};

/// Minimal k >= 0 with n_left * v^k * n_right == 0, or a refusal.
PairVerdict decide_pair(const Mat2& n_left, const Mat2& v, const Mat2& n_right);

/// The recurrence attached to a pair problem.
ScalarRecurrence pair_recurrence(const Mat2& n_left, const Mat2& v, const Mat2& n_right);

}  // namespace mortality

#endif  // MORTALITY_PAIR_DECIDER_HPP
