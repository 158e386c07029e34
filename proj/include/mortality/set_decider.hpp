#ifndef MORTALITY_SET_DECIDER_HPP
#define MORTALITY_SET_DECIDER_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mortality/exact.hpp"

namespace mortality {

/// An ordered list of matrices; words refer to positions, duplicates allowed.
struct Instance {
  std::vector<Mat2> matrices;

  std::size_t size() const { return matrices.size(); }
  std::vector<std::size_t> singular_indices() const;
  std::vector<std::size_t> invertible_indices() const;
};

/// Positions into Instance::matrices; the product is taken left to right.
using Word = std::vector<std::size_t>;

/// An (i, k, j) triple: matrices[i] * V^k * matrices[j] = 0.
struct ExponentWitness {
  std::size_t left;
  std::uint64_t exponent;
  std::size_t right;
  friend bool operator==(const ExponentWitness&, const ExponentWitness&) = default;
};

enum class VerdictKind { Mortal, Immortal, Unknown };

enum class Certificate {
  // mortal
  ZeroMember,
  ZeroPairProduct,
  PairExponent,
  OracleSearch,
  // immortal
  AllInvertible,
  NoZeroPairProduct,
  AllPairsRefused,
  // unknown
  BoundedSearchExhausted,
};

std::string_view to_string(VerdictKind kind);
std::string_view to_string(Certificate cert);

struct Verdict {
  VerdictKind kind;
  Certificate certificate;
  Word witness;                                   // nonempty iff Mortal
  std::optional<ExponentWitness> exponent_witness;  // set for pair-decided verdicts
  std::size_t search_bound = 0;                   // set for Unknown

  bool mortal() const { return kind == VerdictKind::Mortal; }
};

struct DecideOptions {
  /// Word-length bound for the brute-force fallback used with two or more
  /// invertible matrices.
  std::size_t oracle_bound = 8;
};

/// Mortality of a set with at most one invertible member; sets with more
/// invertible members get a bounded search and Unknown when it comes up empty.
Verdict decide(const Instance& instance, const DecideOptions& options = {});

/// True iff the exact product of the named matrices is zero.
bool verify_witness(const Instance& instance, const Word& word);

/// Expands matrices[i] V^k matrices[j] into a word.
Word expand_witness(const ExponentWitness& w, std::size_t invertible_index);

// Reductions between instance sizes.

/// Sub-instances with exactly two singular members, each joined with all
/// invertible members: {B, -B} for every singular B, then {B1, B2} for every
/// pair of distinct singular positions. The input is mortal iff some
/// sub-instance is.
std::vector<Instance> to_two_singular(const Instance& instance);

/// Grows the singular part to exactly `count` members by appending distinct
/// nonzero multiples of the first nonzero singular member.
Instance pad_singular(const Instance& instance, std::size_t count);

/// For b1 = a b^T and b2 = c d^T returns (c b^T, a d^T). Mortality of
/// {c b^T} with the invertible set matches a zero product b1 ... b2, and
/// {a d^T} matches b2 ... b1.
std::pair<Mat2, Mat2> cross_split(const Mat2& b1, const Mat2& b2);

}  // namespace mortality

#endif  // MORTALITY_SET_DECIDER_HPP
