#include "mortality/set_decider.hpp"

#include <algorithm>
#include <stdexcept>

#include "mortality/oracle.hpp"
#include "mortality/pair_decider.hpp"

namespace mortality {

std::vector<std::size_t> Instance::singular_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < matrices.size(); ++i)
    if (!is_invertible(matrices[i])) out.push_back(i);
  return out;
}

std::vector<std::size_t> Instance::invertible_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < matrices.size(); ++i)
    if (is_invertible(matrices[i])) out.push_back(i);
  return out;
}

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Mortal:
      return "mortal";
    case VerdictKind::Immortal:
      return "immortal";
    case VerdictKind::Unknown:
      return "unknown";
  }
  return "unknown";
}

std::string_view to_string(Certificate cert) {
  switch (cert) {
    case Certificate::ZeroMember:
      return "zero-member";
    case Certificate::ZeroPairProduct:
      return "zero-pair-product";
    case Certificate::PairExponent:
      return "pair-exponent";
    case Certificate::OracleSearch:
      return "oracle-search";
    case Certificate::AllInvertible:
      return "all-invertible";
    case Certificate::NoZeroPairProduct:
      return "no-zero-pair-product";
    case Certificate::AllPairsRefused:
      return "all-pairs-refused";
    case Certificate::BoundedSearchExhausted:
      return "bounded-search-exhausted";
  }
  return "unknown";
}

Word expand_witness(const ExponentWitness& w, std::size_t invertible_index) {
  Word word;
  word.reserve(w.exponent + 2);
  word.push_back(w.left);
  word.insert(word.end(), w.exponent, invertible_index);
  word.push_back(w.right);
  return word;
}

bool verify_witness(const Instance& instance, const Word& word) {
  if (word.empty()) throw ContractError("verify_witness: empty word");
  for (std::size_t idx : word)
    if (idx >= instance.size())
      throw std::out_of_range("verify_witness: index " + std::to_string(idx) + " out of range");
  Mat2 product = instance.matrices[word.front()];
  for (std::size_t n = 1; n < word.size(); ++n) product = (product * instance.matrices[word[n]]).eval();
  return is_zero(product);
}

Verdict decide(const Instance& instance, const DecideOptions& options) {
  if (instance.matrices.empty()) throw ContractError("decide: empty instance");

  for (std::size_t i = 0; i < instance.size(); ++i)
    if (is_zero(instance.matrices[i])) return {VerdictKind::Mortal, Certificate::ZeroMember, {i}, {}};

  const auto singular = instance.singular_indices();
  if (singular.empty()) return {VerdictKind::Immortal, Certificate::AllInvertible, {}, {}};

  const auto invertible = instance.invertible_indices();
  if (invertible.size() >= 2) {
    if (auto word = search(instance, options.oracle_bound))
      return {VerdictKind::Mortal, Certificate::OracleSearch, std::move(*word), {}};
    return {VerdictKind::Unknown, Certificate::BoundedSearchExhausted, {}, {}, options.oracle_bound};
  }

  // Every mortal product has rank-one ends and invertible interior factors,
  // so with no invertible member it has length two.
  if (invertible.empty()) {
    for (std::size_t i : singular)
      for (std::size_t j : singular)
        if (is_zero(Mat2(instance.matrices[i] * instance.matrices[j])))
          return {VerdictKind::Mortal, Certificate::ZeroPairProduct, {i, j}, ExponentWitness{i, 0, j}};
    return {VerdictKind::Immortal, Certificate::NoZeroPairProduct, {}, {}};
  }

  const std::size_t vi = invertible.front();
  const Mat2& v = instance.matrices[vi];
  for (std::size_t i : singular) {
    for (std::size_t j : singular) {
      const PairVerdict pv = decide_pair(instance.matrices[i], v, instance.matrices[j]);
      if (pv.has_witness()) {
        const ExponentWitness ew{i, *pv.exponent, j};
        return {VerdictKind::Mortal, Certificate::PairExponent, expand_witness(ew, vi), ew};
      }
    }
  }
  return {VerdictKind::Immortal, Certificate::AllPairsRefused, {}, {}};
}

std::vector<Instance> to_two_singular(const Instance& instance) {
  const auto singular = instance.singular_indices();
  const auto invertible = instance.invertible_indices();

  auto with_invertibles = [&](const Mat2& first, const Mat2& second) {
    Instance sub;
    sub.matrices.reserve(2 + invertible.size());
    sub.matrices.push_back(first);
    sub.matrices.push_back(second);
    for (std::size_t k : invertible) sub.matrices.push_back(instance.matrices[k]);
    return sub;
  };

  std::vector<Instance> out;
  for (std::size_t i : singular) {
    const Mat2& b = instance.matrices[i];
    out.push_back(with_invertibles(b, Mat2(-b)));
  }
  for (std::size_t a = 0; a < singular.size(); ++a)
    for (std::size_t b = a + 1; b < singular.size(); ++b)
      out.push_back(with_invertibles(instance.matrices[singular[a]], instance.matrices[singular[b]]));
  return out;
}

Instance pad_singular(const Instance& instance, std::size_t count) {
  const auto singular = instance.singular_indices();
  if (count < singular.size())
    throw ContractError("pad_singular: target count is below the current singular count");
  const auto base = std::find_if(singular.begin(), singular.end(),
                                 [&](std::size_t i) { return !is_zero(instance.matrices[i]); });
  if (base == singular.end()) throw ContractError("pad_singular: no nonzero singular member to replicate");

  Instance out = instance;
  const Mat2& b = instance.matrices[*base];
  std::size_t have = singular.size();
  for (long t = 2; have < count; ++t) {
    const Mat2 candidate = Rat(t) * b;
    const bool present = std::any_of(out.matrices.begin(), out.matrices.end(),
                                     [&](const Mat2& m) { return m == candidate; });
    if (present) continue;
    out.matrices.push_back(candidate);
    ++have;
  }
  return out;
}

std::pair<Mat2, Mat2> cross_split(const Mat2& b1, const Mat2& b2) {
  if (rank(b1) != 1 || rank(b2) != 1) throw ContractError("cross_split: both matrices must have rank 1");
  const auto [a, b] = factor_rank_one(b1);
  const auto [c, d] = factor_rank_one(b2);
  return {Mat2(c * b.transpose()), Mat2(a * d.transpose())};
}

}  // namespace mortality
