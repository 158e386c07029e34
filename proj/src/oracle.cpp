#include "mortality/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <map>
#include <thread>

namespace mortality {

namespace {

using StateKey = std::array<BigInt, 4>;

StateKey key_of(const Mat2& primitive) {
  return {num(primitive(0, 0)), num(primitive(0, 1)), num(primitive(1, 0)), num(primitive(1, 1))};
}

struct Node {
  Mat2 state;  // primitive projective representative
  std::ptrdiff_t parent;
  std::size_t last;
};

Word unwind(const std::vector<Node>& nodes, std::ptrdiff_t at) {
  Word word;
  for (; at >= 0; at = nodes[static_cast<std::size_t>(at)].parent)
    word.push_back(nodes[static_cast<std::size_t>(at)].last);
  std::reverse(word.begin(), word.end());
  return word;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

}  // namespace

std::optional<Word> search(const Instance& instance, std::size_t max_len) {
  if (max_len == 0) throw ContractError("search: max_len must be positive");
  const std::size_t n = instance.size();

  std::vector<Node> nodes;
  std::map<StateKey, std::size_t> seen;
  std::vector<std::size_t> frontier;

  for (std::size_t i = 0; i < n; ++i) {
    const Mat2& m = instance.matrices[i];
    if (is_zero(m)) return Word{i};
    Mat2 state = primitive_normalize(m).primitive;
    if (seen.emplace(key_of(state), nodes.size()).second) {
      frontier.push_back(nodes.size());
      nodes.push_back({std::move(state), -1, i});
    }
  }

  for (std::size_t len = 2; len <= max_len && !frontier.empty(); ++len) {
    std::vector<std::size_t> next;
    for (std::size_t at : frontier) {
      for (std::size_t i = 0; i < n; ++i) {
        const Mat2 product = nodes[at].state * instance.matrices[i];
        if (is_zero(product)) {
          Word word = unwind(nodes, static_cast<std::ptrdiff_t>(at));
          word.push_back(i);
          return word;
        }
        Mat2 state = primitive_normalize(product).primitive;
        if (seen.emplace(key_of(state), nodes.size()).second) {
          next.push_back(nodes.size());
          nodes.push_back({std::move(state), static_cast<std::ptrdiff_t>(at), i});
        }
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

Rat random_rat(std::mt19937_64& rng, const EntryRange& range) {
  std::uniform_int_distribution<long> num_dist(range.num_min, range.num_max);
  std::uniform_int_distribution<long> den_dist(1, std::max(1L, range.den_max));
  const long p = num_dist(rng);
  const long q = den_dist(rng);
  return Rat(p, q);
}

namespace {

Vec2 random_nonzero_vec(std::mt19937_64& rng, const EntryRange& range) {
  Vec2 v;
  do {
    v << random_rat(rng, range), random_rat(rng, range);
  } while (is_zero(v));
  return v;
}

}  // namespace

Mat2 random_rank_one(std::mt19937_64& rng, const EntryRange& range) {
  const Vec2 u = random_nonzero_vec(rng, range);
  const Vec2 v = random_nonzero_vec(rng, range);
  return u * v.transpose();
}

Mat2 random_invertible(std::mt19937_64& rng, const EntryRange& range) {
  Mat2 m;
  do {
    m << random_rat(rng, range), random_rat(rng, range), random_rat(rng, range), random_rat(rng, range);
  } while (!is_invertible(m));
  return m;
}

Instance random_instance(std::mt19937_64& rng, const InstanceShape& shape) {
  std::uniform_int_distribution<std::size_t> singular_count(shape.min_singular, shape.max_singular);
  std::uniform_int_distribution<std::size_t> invertible_count(0, shape.max_invertible);
  std::uniform_int_distribution<int> flavour(0, 19);

  Instance inst;
  const std::size_t s = singular_count(rng);
  for (std::size_t k = 0; k < s; ++k) {
    const int f = flavour(rng);
    if (f == 0) {
      inst.matrices.push_back(Mat2::Zero());
    } else if (f <= 2 && !inst.matrices.empty()) {
      // A scaled copy of an earlier member.
      const Rat scale = f == 1 ? Rat(-1) : Rat(2);
      Mat2 copy = scale * inst.matrices.back();
      inst.matrices.push_back(std::move(copy));
    } else if (f <= 4) {
      // Entrywise-random row and a multiple of it.
      Mat2 m;
      const Rat a = random_rat(rng, shape.range);
      const Rat b = random_rat(rng, shape.range);
      const Rat t = random_rat(rng, shape.range);
      m << a, b, t * a, t * b;
      if (is_zero(m)) m = random_rank_one(rng, shape.range);
      if (flavour(rng) < 10) m.transposeInPlace();
      inst.matrices.push_back(std::move(m));
    } else {
      inst.matrices.push_back(random_rank_one(rng, shape.range));
    }
  }
  const std::size_t v = invertible_count(rng);
  for (std::size_t k = 0; k < v; ++k) inst.matrices.push_back(random_invertible(rng, shape.range));
  std::shuffle(inst.matrices.begin(), inst.matrices.end(), rng);
  return inst;
}

std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

namespace {

struct Outcome {
  VerdictKind kind = VerdictKind::Unknown;
  bool witness_ok = true;
  bool found = false;
  double decide_ms = 0;
  double search_ms = 0;
};

Outcome run_one(const Instance& instance, std::size_t bound) {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  const Verdict verdict = decide(instance, {bound});
  out.decide_ms = elapsed_ms(t0);
  out.kind = verdict.kind;
  if (verdict.mortal()) out.witness_ok = verify_witness(instance, verdict.witness);

  t0 = std::chrono::steady_clock::now();
  const auto word = search(instance, bound);
  out.search_ms = elapsed_ms(t0);
  out.found = word.has_value();
  return out;
}

template <typename MakeInstance>
FuzzReport run_parallel(std::size_t count, std::size_t bound, unsigned threads, MakeInstance make) {
  const auto start = std::chrono::steady_clock::now();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));

  std::vector<Instance> instances(count);
  std::vector<Outcome> outcomes(count);
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor++; i < count; i = cursor++) {
      instances[i] = make(i);
      outcomes[i] = run_one(instances[i], bound);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  FuzzReport report;
  report.count = count;
  for (std::size_t i = 0; i < count; ++i) {
    const Outcome& o = outcomes[i];
    report.decide_ms += o.decide_ms;
    report.search_ms += o.search_ms;
    report.max_decide_ms = std::max(report.max_decide_ms, o.decide_ms);
    report.max_search_ms = std::max(report.max_search_ms, o.search_ms);
    switch (o.kind) {
      case VerdictKind::Mortal:
        ++report.mortal;
        if (!o.witness_ok) {
          ++report.witness_failures;
          report.discrepancies.push_back({i, "witness-failed", instances[i]});
        } else if (o.found) {
          ++report.agreements;
        } else {
          ++report.mortal_beyond_bound;
          report.beyond_bound.push_back(i);
        }
        break;
      case VerdictKind::Immortal:
        ++report.immortal;
        if (o.found) {
          ++report.immortal_contradicted;
          report.discrepancies.push_back({i, "immortal-contradicted", instances[i]});
        } else {
          ++report.agreements;
        }
        break;
      case VerdictKind::Unknown:
        ++report.unknown;
        break;
    }
  }
  report.total_ms = elapsed_ms(start);
  return report;
}

}  // namespace

FuzzReport fuzz_compare(const FuzzConfig& config) {
  return run_parallel(config.count, config.bound, config.threads, [&](std::size_t i) {
    auto rng = instance_rng(config.seed, i);
    return random_instance(rng, config.shape);
  });
}

FuzzReport compare_instances(const std::vector<Instance>& instances, std::size_t bound, unsigned threads) {
  return run_parallel(instances.size(), bound, threads, [&](std::size_t i) { return instances[i]; });
}

}  // namespace mortality
