#include "mortality/exact.hpp"

#include <cctype>
#include <sstream>

namespace mortality {

Normalized primitive_normalize(const Mat2& m) {
  if (is_zero(m)) throw ContractError("primitive_normalize: zero matrix has no primitive form");

  BigInt common_den = 1;
  for (Eigen::Index i = 0; i < 2; ++i)
    for (Eigen::Index j = 0; j < 2; ++j)
      common_den = boost::multiprecision::lcm(common_den, den(m(i, j)));

  BigInt content = 0;
  int lead_sign = 0;
  for (Eigen::Index i = 0; i < 2; ++i) {
    for (Eigen::Index j = 0; j < 2; ++j) {
      const BigInt scaled = num(m(i, j)) * (common_den / den(m(i, j)));
      content = boost::multiprecision::gcd(content, scaled);
      if (lead_sign == 0) lead_sign = scaled.sign();
    }
  }

  const Rat scale = Rat(BigInt(content * lead_sign), common_den);
  Mat2 primitive = m / scale;
  return {primitive, scale};
}

namespace {

bool is_integer_literal(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

bool is_unsigned_literal(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Rat parse_rat(const std::string& text, bool require_lowest_terms) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_literal(text)) throw std::invalid_argument("not a rational literal: '" + text + "'");
    return Rat(BigInt(text[0] == '+' ? text.substr(1) : text));
  }
  const std::string p = text.substr(0, slash);
  const std::string q = text.substr(slash + 1);
  if (!is_integer_literal(p) || !is_integer_literal(q))
    throw std::invalid_argument("not a rational literal: '" + text + "'");
  const BigInt n(p[0] == '+' ? p.substr(1) : p);
  const BigInt d(q[0] == '+' ? q.substr(1) : q);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  if (require_lowest_terms) {
    if (!is_unsigned_literal(q)) throw std::invalid_argument("denominator must be positive: '" + text + "'");
    if (boost::multiprecision::gcd(n, d) != 1)
      throw std::invalid_argument("not in lowest terms: '" + text + "'");
  }
  return Rat(n, d);
}

std::string to_string(const Rat& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

std::string to_string(const Mat2& m) {
  std::ostringstream out;
  out << "[[" << to_string(m(0, 0)) << ", " << to_string(m(0, 1)) << "], [" << to_string(m(1, 0))
      << ", " << to_string(m(1, 1)) << "]]";
  return out.str();
}

}  // namespace mortality
