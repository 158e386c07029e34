#ifndef MORTALITY_ORACLE_HPP
#define MORTALITY_ORACLE_HPP

// Bounded brute-force search for zero products, independent of the decision
// procedures. Used for cross-validation and as the fallback for instances
// with two or more invertible matrices.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mortality/set_decider.hpp"

namespace mortality {

/// Shortest word of length <= max_len with zero product, ties broken
/// lexicographically; nullopt when none exists within the bound.
///
/// Breadth-first over prefix products, deduplicated by primitive projective
/// form: two prefixes that are nonzero multiples of each other have the same
/// zero-reaching extensions.
std::optional<Word> search(const Instance& instance, std::size_t max_len);

struct EntryRange {
  long num_min = -3;
  long num_max = 3;
  long den_max = 3;
};

struct InstanceShape {
  EntryRange range;
  std::size_t min_singular = 1;
  std::size_t max_singular = 4;
  std::size_t max_invertible = 1;
};

/// Random rational with numerator in [num_min, num_max], denominator in [1, den_max].
Rat random_rat(std::mt19937_64& rng, const EntryRange& range);
/// Random rank-one matrix u v^T.
Mat2 random_rank_one(std::mt19937_64& rng, const EntryRange& range);
/// Random invertible matrix with entries drawn from range.
Mat2 random_invertible(std::mt19937_64& rng, const EntryRange& range);
/// Singular members (occasionally the zero matrix or an entrywise-random
/// singular matrix) followed by up to max_invertible invertible members,
/// shuffled.
Instance random_instance(std::mt19937_64& rng, const InstanceShape& shape);

/// Engine for instance number `index` of a fuzz run; independent of how
/// instances are distributed over threads.
std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index);

struct FuzzConfig {
  std::size_t count = 1000;
  std::uint64_t seed = 42;
  std::size_t bound = 8;
  InstanceShape shape;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct FuzzDiscrepancy {
  std::uint64_t index;
  std::string kind;
  Instance instance;
};

struct FuzzReport {
  std::size_t count = 0;
  std::size_t mortal = 0;
  std::size_t immortal = 0;
  std::size_t unknown = 0;
  std::size_t agreements = 0;
  std::size_t witness_failures = 0;       // decider-mortal witness does not verify
  std::size_t immortal_contradicted = 0;  // decider-immortal but search finds a zero product
  std::size_t mortal_beyond_bound = 0;    // decider-mortal, search finds nothing (allowed)
  std::vector<FuzzDiscrepancy> discrepancies;
  std::vector<std::uint64_t> beyond_bound;  // indices counted in mortal_beyond_bound
  double total_ms = 0;
  double decide_ms = 0;
  double search_ms = 0;
  double max_decide_ms = 0;
  double max_search_ms = 0;

  std::size_t contradictions() const { return witness_failures + immortal_contradicted; }
};

FuzzReport fuzz_compare(const FuzzConfig& config);

/// Runs decide and search on the given instances and tallies the outcome.
FuzzReport compare_instances(const std::vector<Instance>& instances, std::size_t bound,
                             unsigned threads = 1);

}  // namespace mortality

#endif  // MORTALITY_ORACLE_HPP
