// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "mortality/oracle.hpp"
#include "mortality/pair_decider.hpp"
#include "mortality/spectral.hpp"
#include "support.hpp"

using namespace mortality;
using mortality::testing::q;

namespace {

using Clock = std::chrono::steady_clock;

// Criterion limits.
constexpr std::size_t kFuzzCount = 10000;
constexpr std::uint64_t kFuzzSeed = 42;
constexpr std::size_t kFuzzBound = 8;
constexpr double kFuzzSeconds = 120.0;
constexpr unsigned kPlantedMax = 40;
constexpr double kPlantedSeconds = 10.0;
constexpr int kSimilarityCount = 500;
constexpr unsigned kSimilarityMaxK = 30;
constexpr int kOrderCount = 10000;
constexpr int kChebQueries = 1000;
constexpr std::size_t kChebMaxN = 50;
constexpr int kGrowthCount = 200;
constexpr std::size_t kGrowthMaxN = 20;
constexpr double kChebSeconds = 10.0;
constexpr int kClosedFormSamples = 100;
constexpr int kReductionCount = 2000;
constexpr int kCrossSplitCount = 1000;
constexpr std::size_t kCrossSplitBound = 10;

struct WitnessTally {
  std::size_t mortal = 0;
  std::size_t verified = 0;

  void record(const Instance& inst, const Verdict& v) {
    if (!v.mortal()) return;
    ++mortal;
    if (!v.witness.empty() && verify_witness(inst, v.witness)) ++verified;
  }
};

WitnessTally tally;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome oracle_agreement() {
  FuzzConfig config;
  config.count = kFuzzCount;
  config.seed = kFuzzSeed;
  config.bound = kFuzzBound;
  const auto t0 = Clock::now();
  const FuzzReport report = fuzz_compare(config);
  const double secs = seconds_since(t0);
  tally.mortal += report.mortal;
  tally.verified += report.mortal - report.witness_failures;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%zu instances, %zu mortal, %zu immortal, %zu contradictions, %zu beyond bound, %.1f s",
                report.count, report.mortal, report.immortal, report.contradictions(), report.mortal_beyond_bound, secs);
  return {report.contradictions() == 0 && report.unknown == 0 && secs < kFuzzSeconds, buf};
}

Outcome planted_recovery() {
  // D > 0, D = 0 (non-scalar), D < 0 with a non-periodic eigenvalue ratio.
  const Mat2 regimes[] = {mat2(2, 0, 1, 1), mat2(2, 1, 0, 2), mat2(1, -2, 1, 0)};
  const auto t0 = Clock::now();
  int total = 0;
  int recovered = 0;
  for (const Mat2& v : regimes) {
    for (unsigned k = 1; k <= kPlantedMax; ++k) {
      ++total;
      const auto b = testing::planted_singular(v, k);
      if (!b) continue;
      const Instance inst{{*b, v}};
      const Verdict verdict = decide(inst);
      tally.record(inst, verdict);
      if (verdict.mortal() && verdict.exponent_witness && verdict.exponent_witness->exponent == k) ++recovered;
    }
  }
  const double secs = seconds_since(t0);
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d/%d recovered, %.2f s", recovered, total, secs);
  return {recovered == total && secs < kPlantedSeconds, buf};
}

Outcome r_similarity() {
  std::mt19937_64 rng(1001);
  int matrices = 0;
  int failures = 0;
  while (matrices < kSimilarityCount) {
    const Mat2 v = testing::small_invertible(rng, -5, 5, 3);
    if (power_similar_identity(v)) continue;
    ++matrices;
    const CharPoly cp = char_poly(v);
    const auto r = testing::r_sequence(cp.b, cp.c, kSimilarityMaxK);
    if (!r) {
      ++failures;
      continue;
    }
    Mat2 power = identity2<Rat>();
    for (unsigned k = 1; k <= kSimilarityMaxK; ++k) {
      power = (power * v).eval();
      const Mat2 target = v + (*r)[k - 1] * identity2<Rat>();
      if (!is_scalar_multiple(power, target)) ++failures;
    }
  }
  return {failures == 0, std::to_string(matrices) + " matrices, k <= 30, " + std::to_string(failures) + " failures"};
}

Outcome order_law() {
  int failures = 0;
  int periodic = 0;
  auto check = [&](const Mat2& a) -> std::optional<unsigned> {
    const auto r = power_similar_identity(a);
    std::optional<unsigned> first;
    for (unsigned j = 1; j <= 12 && !first; ++j)
      if (is_scalar_matrix(mat_pow(a, j))) first = j;
    if (r.has_value() != first.has_value()) {
      ++failures;
      return std::nullopt;
    }
    if (!r) return std::nullopt;
    const unsigned m = r->order;
    if (m != *first || !(m == 1 || m == 2 || m == 3 || m == 4 || m == 6)) ++failures;
    if (mat_pow(a, m) != Mat2(r->scalar * identity2<Rat>())) ++failures;
    return m;
  };

  std::mt19937_64 rng(2002);
  for (int trial = 0; trial < kOrderCount; ++trial) {
    // Half integer entries, where finite orders are common.
    const Mat2 a = trial % 2 ? testing::small_invertible(rng, -5, 5, 1) : testing::small_invertible(rng, -5, 5, 3);
    if (check(a)) ++periodic;
  }

  const std::pair<Mat2, unsigned> curated[] = {{mat2(3, 0, 0, 3), 1},
                                               {mat2(0, -1, 1, 0), 2},
                                               {mat2(1, -1, 1, 0), 3},
                                               {mat2(1, -1, 1, 1), 4},
                                               {mat2(1, -1, 1, 2), 6}};
  for (const auto& [a, order] : curated)
    if (check(a) != order) ++failures;
  return {failures == 0, std::to_string(kOrderCount) + " matrices, " + std::to_string(periodic) +
                             " with finite order, curated orders 1 2 3 4 6, " + std::to_string(failures) +
                             " failures"};
}

Outcome chebyshev_solver() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(3003);
  int failures = 0;
  for (int trial = 0; trial < kChebQueries; ++trial) {
    Rat p = std::max(Rat(-1), std::min(Rat(1), testing::small_rat(rng, -8, 8, 8)));
    Rat target = std::max(Rat(-1), std::min(Rat(1), testing::small_rat(rng, -8, 8, 8)));
    if (trial % 3 == 0) {
      const Rat half = testing::cheb_t_sequence(p, 7)[static_cast<std::size_t>(trial % 7)] / 2;
      if (abs(half) <= 1) target = half;
    }
    const ChebyshevAnswer ans = cheb_solve({p, target});
    const auto t = testing::cheb_t_sequence(p, kChebMaxN + 1);
    for (std::uint64_t n = 0; n <= kChebMaxN; ++n)
      if (answer_contains(ans, n) != (t[n] == 2 * target)) ++failures;
  }
  int grown = 0;
  while (grown < kGrowthCount) {
    const Rat p = testing::small_rat(rng, -40, 40, 40);
    const BigInt m = den(Rat(2 * p));
    if (abs(p) > 1 || m == 1) continue;
    ++grown;
    const auto t = testing::cheb_t_sequence(p, kGrowthMaxN + 1);
    BigInt power = 1;
    for (std::size_t n = 1; n <= kGrowthMaxN; ++n) {
      power *= m;
      if (den(t[n]) != power) ++failures;
    }
  }
  const double secs = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d queries n <= 50, %d growth checks n <= 20, %d failures, %.2f s", kChebQueries,
                kGrowthCount, failures, secs);
  return {failures == 0 && secs < kChebSeconds, buf};
}

// Tabulated r_k in terms of alpha = b and beta = c.
using ClosedForm = std::function<std::optional<Rat>(const Rat&, const Rat&)>;

std::optional<Rat> ratio(const Rat& n, const Rat& d) {
  if (d == 0) return std::nullopt;
  return n / d;
}

Rat pw(const Rat& x, unsigned k) {
  Rat out = 1;
  for (unsigned i = 0; i < k; ++i) out *= x;
  return out;
}

std::vector<std::pair<unsigned, ClosedForm>> closed_forms() {
  std::vector<std::pair<unsigned, ClosedForm>> out;
  auto add = [&](unsigned k, ClosedForm f) { out.emplace_back(k, std::move(f)); };
  add(1, [](const Rat&, const Rat&) { return std::optional<Rat>(0); });
  add(2, [](const Rat& a, const Rat& b) { return ratio(b, a); });
  add(3, [](const Rat& a, const Rat& b) { return ratio(b * a, a * a - b); });
  add(4, [](const Rat& a, const Rat& b) { return ratio(b * (-a * a + b), -pw(a, 3) + 2 * a * b); });
  add(5, [](const Rat& a, const Rat& b) { return ratio(b * a * (a * a - 2 * b), pw(a, 4) - 3 * a * a * b + b * b); });
  add(6, [](const Rat& a, const Rat& b) {
    return ratio(b * (pw(a, 4) - 3 * a * a * b + b * b), pw(a, 5) - 4 * pw(a, 3) * b + 3 * a * b * b);
  });
  add(7, [](const Rat& a, const Rat& b) {
    return ratio(-3 * b * a * (-a * a + b) * (-a * a / 3 + b),
                 -pw(a, 6) + 5 * pw(a, 4) * b - 6 * a * a * b * b + pw(b, 3));
  });
  add(8, [](const Rat& a, const Rat& b) {
    return ratio(b * (-pw(a, 6) + 5 * pw(a, 4) * b - 6 * a * a * b * b + pw(b, 3)),
                 -pw(a, 7) + 6 * pw(a, 5) * b - 10 * pw(a, 3) * b * b + 4 * a * pw(b, 3));
  });
  add(9, [](const Rat& a, const Rat& b) {
    return ratio(b * a * (pw(a, 6) - 6 * pw(a, 4) * b + 10 * a * a * b * b - 4 * pw(b, 3)),
                 pw(a, 8) - 7 * pw(a, 6) * b + 15 * pw(a, 4) * b * b - 10 * a * a * pw(b, 3) + pw(b, 4));
  });
  add(10, [](const Rat& a, const Rat& b) {
    return ratio(b * (pw(a, 8) - 7 * pw(a, 6) * b + 15 * pw(a, 4) * b * b - 10 * a * a * pw(b, 3) + pw(b, 4)),
                 a * (pw(a, 8) - 8 * pw(a, 6) * b + 21 * pw(a, 4) * b * b - 20 * a * a * pw(b, 3) + 5 * pw(b, 4)));
  });
  add(11, [](const Rat& a, const Rat& b) {
    return ratio(b * a * (pw(a, 8) - 8 * pw(a, 6) * b + 21 * pw(a, 4) * b * b - 20 * a * a * pw(b, 3) + 5 * pw(b, 4)),
                 pw(a, 10) - 9 * pw(a, 8) * b + 28 * pw(a, 6) * b * b - 35 * pw(a, 4) * pw(b, 3) +
                     15 * a * a * pw(b, 4) - pw(b, 5));
  });
  add(11, [](const Rat& a, const Rat& b) {  // factored form
    return ratio(b * a * (pw(a, 4) - 3 * a * a * b + b * b) * (pw(a, 4) - 5 * a * a * b + 5 * b * b),
                 pw(a, 10) - 9 * pw(a, 8) * b + 28 * pw(a, 6) * b * b - 35 * pw(a, 4) * pw(b, 3) +
                     15 * a * a * pw(b, 4) - pw(b, 5));
  });
  add(12, [](const Rat& a, const Rat& b) {
    return ratio(b * (-pw(a, 10) + 9 * pw(a, 8) * b - 28 * pw(a, 6) * b * b + 35 * pw(a, 4) * pw(b, 3) -
                      15 * a * a * pw(b, 4) + pw(b, 5)),
                 -pw(a, 11) + 10 * pw(a, 9) * b - 36 * pw(a, 7) * b * b + 56 * pw(a, 5) * pw(b, 3) -
                     35 * pw(a, 3) * pw(b, 4) + 6 * a * pw(b, 5));
  });
  // Expanded odd and even terms.
  add(5, [](const Rat& a, const Rat& b) { return ratio(b * pw(a, 3) - 2 * b * b * a, pw(a, 4) - 3 * a * a * b + b * b); });
  add(7, [](const Rat& a, const Rat& b) {
    return ratio(b * pw(a, 5) - 4 * b * b * pw(a, 3) + 3 * pw(b, 3) * a,
                 pw(a, 6) - 5 * pw(a, 4) * b + 6 * b * b * a * a - pw(b, 3));
  });
  add(9, [](const Rat& a, const Rat& b) {
    return ratio(b * pw(a, 7) - 6 * b * b * pw(a, 5) + 10 * pw(b, 3) * pw(a, 3) - 4 * pw(b, 4) * a,
                 pw(a, 8) - 7 * pw(a, 6) * b + 15 * pw(a, 4) * b * b - 10 * a * a * pw(b, 3) + pw(b, 4));
  });
  add(11, [](const Rat& a, const Rat& b) {
    return ratio(b * pw(a, 9) - 8 * b * b * pw(a, 7) + 21 * pw(b, 3) * pw(a, 5) - 20 * pw(b, 4) * pw(a, 3) +
                     5 * pw(b, 5) * a,
                 pw(a, 10) - 9 * pw(a, 8) * b + 28 * pw(a, 6) * b * b - 35 * pw(a, 4) * pw(b, 3) +
                     15 * a * a * pw(b, 4) - pw(b, 5));
  });
  add(4, [](const Rat& a, const Rat& b) { return ratio(a * a * b - b * b, pw(a, 3) - 2 * b * a); });
  add(6, [](const Rat& a, const Rat& b) {
    return ratio(pw(a, 4) * b - 3 * b * b * a * a + pw(b, 3), pw(a, 5) - 4 * b * pw(a, 3) + 3 * b * b * a);
  });
  add(8, [](const Rat& a, const Rat& b) {
    return ratio(pw(a, 6) * b - 5 * pw(a, 4) * b * b + 6 * a * a * pw(b, 3) - pw(b, 4),
                 pw(a, 7) - 6 * b * pw(a, 5) + 10 * b * b * pw(a, 3) - 4 * pw(b, 3) * a);
  });
  add(10, [](const Rat& a, const Rat& b) {
    return ratio(pw(a, 8) * b - 7 * pw(a, 6) * b * b + 15 * pw(a, 4) * pw(b, 3) - 10 * a * a * pw(b, 4) + pw(b, 5),
                 pw(a, 9) - 8 * b * pw(a, 7) + 21 * b * b * pw(a, 5) - 20 * pw(b, 3) * pw(a, 3) + 5 * pw(b, 4) * a);
  });
  add(12, [](const Rat& a, const Rat& b) {
    return ratio(pw(a, 10) * b - 9 * pw(a, 8) * b * b + 28 * pw(a, 6) * pw(b, 3) - 35 * pw(a, 4) * pw(b, 4) +
                     15 * a * a * pw(b, 5) - pw(b, 6),
                 pw(a, 11) - 10 * b * pw(a, 9) + 36 * b * b * pw(a, 7) - 56 * pw(b, 3) * pw(a, 5) +
                     35 * pw(b, 4) * pw(a, 3) - 6 * pw(b, 5) * a);
  });
  return out;
}

Outcome closed_forms_match() {
  const auto forms = closed_forms();
  std::mt19937_64 rng(4004);
  int samples = 0;
  int mismatches = 0;
  while (samples < kClosedFormSamples) {
    const Rat b = testing::small_rat(rng, -9, 9, 5);
    const Rat c = testing::small_rat(rng, -9, 9, 5);
    if (c == 0) continue;
    std::vector<Rat> r{Rat(0)};
    bool defined = true;
    while (defined && r.size() < 12) {
      const auto next = r_next(b, c, r.back());
      if (!next) defined = false;
      else r.push_back(*next);
    }
    if (!defined) continue;
    bool tabulated = true;
    for (const auto& [k, f] : forms) tabulated = tabulated && f(b, c).has_value();
    if (!tabulated) continue;
    ++samples;
    for (const auto& [k, f] : forms)
      if (*f(b, c) != r[k - 1]) ++mismatches;
  }
  return {mismatches == 0, std::to_string(samples) + " (b, c) samples, " + std::to_string(forms.size()) +
                               " tabulated forms k <= 12, " + std::to_string(mismatches) + " mismatches"};
}

Outcome reductions() {
  int failures = 0;
  int mortal = 0;
  for (int i = 0; i < kReductionCount; ++i) {
    auto rng = instance_rng(5005, static_cast<std::uint64_t>(i));
    const Instance inst = random_instance(rng, {});
    const Verdict verdict = decide(inst);
    tally.record(inst, verdict);
    if (verdict.mortal()) ++mortal;
    bool any = false;
    for (const Instance& sub : to_two_singular(inst)) {
      const Verdict sv = decide(sub);
      tally.record(sub, sv);
      any = any || sv.mortal();
    }
    if (any != verdict.mortal()) ++failures;
  }

  std::mt19937_64 rng(5006);
  const EntryRange range;
  int split_failures = 0;
  for (int i = 0; i < kCrossSplitCount; ++i) {
    const Mat2 b1 = random_rank_one(rng, range);
    const Mat2 b2 = random_rank_one(rng, range);
    const Mat2 v = random_invertible(rng, range);
    const auto [forward, backward] = cross_split(b1, b2);
    // b1 V^k b2 = 0 within the bound iff the split member alone is mortal within it.
    const unsigned max_k = kCrossSplitBound - 2;
    const Instance fwd{{forward, v}};
    const Instance bwd{{backward, v}};
    if (testing::scan_pair(b1, v, b2, max_k).has_value() != search(fwd, kCrossSplitBound).has_value()) ++split_failures;
    if (testing::scan_pair(b2, v, b1, max_k).has_value() != search(bwd, kCrossSplitBound).has_value()) ++split_failures;
    const Verdict fv = decide(fwd);
    tally.record(fwd, fv);
    if (fv.mortal() != decide_pair(b1, v, b2).has_witness()) ++split_failures;
  }
  return {failures == 0 && split_failures == 0,
          std::to_string(kReductionCount) + " instances (" + std::to_string(mortal) + " mortal), " +
              std::to_string(failures) + " reduction failures; " + std::to_string(kCrossSplitCount) +
              " cross splits at bound 10, " + std::to_string(split_failures) + " failures"};
}

Outcome witness_integrity() {
  return {tally.mortal > 0 && tally.verified == tally.mortal,
          std::to_string(tally.verified) + "/" + std::to_string(tally.mortal) + " mortal verdicts verified"};
}

}  // namespace

int main() {
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"oracle agreement", oracle_agreement},
      {"planted-witness recovery", planted_recovery},
      {"r-similarity identity", r_similarity},
      {"finite order law", order_law},
      {"Chebyshev solver", chebyshev_solver},
      {"tabulated r_k closed forms", closed_forms_match},
      {"two-singular reductions", reductions},
      {"witness integrity", witness_integrity},
  };
  int failed = 0;
  int n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    Outcome outcome{false, "exception"};
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %d %s: %s\n", outcome.pass ? "PASS" : "FAIL", n, name, outcome.detail.c_str());
    std::fflush(stdout);
    if (!outcome.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
