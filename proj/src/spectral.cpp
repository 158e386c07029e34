#include "mortality/spectral.hpp"

#include <algorithm>
#include <stdexcept>

namespace mortality {

namespace {

void require_same_radicand(const QuadNum& a, const QuadNum& b) {
  if (a.d != b.d) throw ContractError("QuadNum: mismatched radicands");
}

}  // namespace

int QuadNum::sign() const {
  if (d < 0) throw ContractError("QuadNum::sign: value is not real");
  const int sa = re.sign();
  const int sb = d == 0 ? 0 : im.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const Rat lhs = re * re;
  const Rat rhs = im * im * d;
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

QuadNum operator+(const QuadNum& a, const QuadNum& b) {
  require_same_radicand(a, b);
  return {a.re + b.re, a.im + b.im, a.d};
}

QuadNum operator-(const QuadNum& a, const QuadNum& b) {
  require_same_radicand(a, b);
  return {a.re - b.re, a.im - b.im, a.d};
}

QuadNum operator*(const QuadNum& a, const QuadNum& b) {
  require_same_radicand(a, b);
  return {a.re * b.re + a.im * b.im * a.d, a.re * b.im + a.im * b.re, a.d};
}

QuadNum operator/(const QuadNum& a, const QuadNum& b) {
  require_same_radicand(a, b);
  const Rat n = b.norm();
  if (n == 0) throw ContractError("QuadNum: division by a zero divisor");
  const QuadNum p = a * b.conj();
  return {p.re / n, p.im / n, a.d};
}

bool operator==(const QuadNum& a, const QuadNum& b) {
  require_same_radicand(a, b);
  if (a.d < 0) return a.re == b.re && a.im == b.im;
  return (a - b).sign() == 0;
}

QuadNum quad_pow(const QuadNum& z, std::uint64_t k) {
  QuadNum result = QuadNum::rational(Rat(1), z.d);
  QuadNum base = z;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

QuadNum eigen_ratio(const CharPoly& cp) {
  if (cp.c == 0) throw ContractError("eigen_ratio: c must be nonzero");
  const Rat two_c = 2 * cp.c;
  return {(cp.b * cp.b - two_c) / two_c, cp.b / two_c, cp.discriminant()};
}

bool is_niven_cosine(const Rat& p) {
  const Rat two_p = 2 * p;
  return den(two_p) == 1 && abs(two_p) <= 2;
}

bool answer_contains(const ChebyshevAnswer& answer, std::uint64_t n) {
  if (const auto* per = std::get_if<cheb::Periodic>(&answer)) {
    const auto r = static_cast<unsigned>(n % per->period);
    return std::find(per->residues.begin(), per->residues.end(), r) != per->residues.end();
  }
  if (const auto* fin = std::get_if<cheb::Finite>(&answer))
    return std::find(fin->solutions.begin(), fin->solutions.end(), n) != fin->solutions.end();
  return false;
}

ChebyshevAnswer cheb_solve(const ChebyshevQuery& query) {
  if (abs(query.p) > 1 || abs(query.q) > 1)
    throw ContractError("cheb_solve: p and q must lie in [-1, 1]");

  const Rat two_p = 2 * query.p;
  const Rat target = 2 * query.q;

  if (den(two_p) == 1) {
    // Integer 2p: the angle is a multiple of pi/6 or pi/4 and t_n has period
    // dividing 12. Generate two periods to find the minimal one.
    constexpr unsigned kSpan = 12;
    std::vector<Rat> t{Rat(2), two_p};
    while (t.size() < 2 * kSpan) t.push_back(two_p * t[t.size() - 1] - t[t.size() - 2]);

    unsigned period = kSpan;
    for (unsigned candidate : {1u, 2u, 3u, 4u, 6u}) {
      bool ok = true;
      for (unsigned n = 0; n < kSpan && ok; ++n) ok = t[n] == t[n + candidate];
      if (ok) {
        period = candidate;
        break;
      }
    }

    std::vector<unsigned> residues;
    for (unsigned n = 0; n < period; ++n)
      if (t[n] == target) residues.push_back(n);
    if (residues.empty()) return cheb::Empty{};
    return cheb::Periodic{period, std::move(residues)};
  }

  // den(t_n) == m^n, so the only candidate is n = log_m den(2q).
  const BigInt m = den(two_p);
  BigInt e = den(target);
  std::uint64_t n = 0;
  while (e > 1) {
    if (e % m != 0) return cheb::Empty{};
    e /= m;
    ++n;
  }

  Rat prev(2);
  Rat cur = two_p;
  if (n == 0) {
    cur = prev;
  } else {
    for (std::uint64_t i = 1; i < n; ++i) {
      Rat next = two_p * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
  }
  if (cur == target) return cheb::Finite{{n}};
  return cheb::Empty{};
}

std::optional<PeriodResult> power_similar_identity(const Mat2& a) {
  if (!is_invertible(a)) throw ContractError("power_similar_identity: matrix must be invertible");
  if (is_scalar_matrix(a)) return PeriodResult{1, a(0, 0)};

  const CharPoly cp = char_poly(a);
  const Rat disc = cp.discriminant();

  unsigned order = 0;
  if (disc == 0) {
    // Repeated eigenvalue and not scalar: a nontrivial Jordan block.
    return std::nullopt;
  } else if (disc > 0) {
    // The only real roots of unity are +-1; rho = -1 exactly when b = 0.
    if (cp.b != 0) return std::nullopt;
    order = 2;
  } else {
    // |rho| = 1 always here; rho is a root of unity iff Re rho is a Niven cosine.
    const Rat p = (cp.b * cp.b - 2 * cp.c) / (2 * cp.c);
    if (p == -1)
      order = 2;
    else if (p == 0)
      order = 4;
    else if (p == Rat(1, 2))
      order = 6;
    else if (p == Rat(-1, 2))
      order = 3;
    else
      return std::nullopt;
  }

  const Mat2 power = mat_pow(a, order);
  if (!is_scalar_matrix(power))
    throw std::logic_error("power_similar_identity: predicted order " + std::to_string(order) +
                           " does not give a scalar power");
  return PeriodResult{order, power(0, 0)};
}

}  // namespace mortality
