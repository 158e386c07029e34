// mortality: decide, verify and cross-check mortality of 2x2 rational matrix sets.
//
// Exit codes: decide 0 mortal / 1 immortal / 2 unknown; verify 0 zero product /
// 1 nonzero; oracle 0 found / 1 none within bound; fuzz 0 no contradictions /
// 1 otherwise; 64 for malformed input or flags.

#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "mortality/io.hpp"

namespace {

constexpr int kInputError = 64;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

int cmd_decide(const std::string& path, bool json, std::size_t bound) {
  auto t0 = Clock::now();
  const mortality::Instance inst = mortality::load_instance(path);
  const double parse_ms = ms_since(t0);
  t0 = Clock::now();
  const mortality::Verdict verdict = mortality::decide(inst, {bound});
  const double decide_ms = ms_since(t0);

  if (json)
    std::cout << mortality::report_to_json(verdict, {{"parse_ms", parse_ms}, {"decide_ms", decide_ms}}).dump(2)
              << '\n';
  else
    std::cout << mortality::human_summary(inst, verdict);

  switch (verdict.kind) {
    case mortality::VerdictKind::Mortal:
      return 0;
    case mortality::VerdictKind::Immortal:
      return 1;
    case mortality::VerdictKind::Unknown:
      return 2;
  }
  return 2;
}

int cmd_verify(const std::string& path, const std::vector<std::size_t>& word) {
  const mortality::Instance inst = mortality::load_instance(path);
  for (std::size_t i : word) {
    if (i >= inst.size()) {
      std::cerr << "verify: index " << i << " out of range for " << inst.size() << " matrices\n";
      return kInputError;
    }
  }
  const bool zero = mortality::verify_witness(inst, word);
  std::cout << (zero ? "zero product\n" : "nonzero product\n");
  return zero ? 0 : 1;
}

int cmd_oracle(const std::string& path, std::size_t max_len, bool json) {
  const mortality::Instance inst = mortality::load_instance(path);
  const auto t0 = Clock::now();
  const auto word = mortality::search(inst, max_len);
  const double search_ms = ms_since(t0);
  if (json) {
    nlohmann::json out;
    out["max_len"] = max_len;
    out["found"] = word.has_value();
    if (word) out["witness"] = *word;
    out["timings"] = {{"search_ms", search_ms}};
    std::cout << out.dump(2) << '\n';
  } else if (word) {
    std::cout << "zero product:";
    for (std::size_t i : *word) std::cout << ' ' << i;
    std::cout << '\n';
  } else {
    std::cout << "no zero product up to length " << max_len << '\n';
  }
  return word ? 0 : 1;
}

int cmd_fuzz(const mortality::FuzzConfig& config, const std::string& out_path) {
  const mortality::FuzzReport report = mortality::fuzz_compare(config);
  nlohmann::json doc = mortality::to_json(report);
  doc["seed"] = config.seed;
  doc["bound"] = config.bound;
  const std::string text = doc.dump(2);
  if (out_path.empty()) {
    std::cout << text << '\n';
  } else {
    std::ofstream(out_path) << text << '\n';
    std::cout << report.count << " instances, " << report.contradictions() << " contradictions, "
              << report.mortal_beyond_bound << " mortal beyond bound\n";
  }
  return report.contradictions() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact mortality decisions for finite sets of 2x2 rational matrices"};
  app.require_subcommand(1);

  std::string path;
  bool json = false;
  std::size_t oracle_bound = 8;
  std::size_t max_len = 8;
  std::vector<std::size_t> word;
  mortality::FuzzConfig fuzz;
  std::string out_path;

  auto* decide = app.add_subcommand("decide", "Decide mortality of an instance file");
  decide->add_option("file", path, "Instance JSON file")->required();
  decide->add_flag("--json", json, "Print a JSON report");
  decide->add_option("--oracle-bound", oracle_bound, "Search bound for two or more invertible matrices")
      ->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Check that a word's product is the zero matrix");
  verify->add_option("file", path, "Instance JSON file")->required();
  verify->add_option("indices", word, "Matrix positions, left to right")->required();

  auto* oracle = app.add_subcommand("oracle", "Breadth-first search for a zero product");
  oracle->add_option("file", path, "Instance JSON file")->required();
  oracle->add_option("--max-len", max_len, "Maximum word length")->check(CLI::PositiveNumber);
  oracle->add_flag("--json", json, "Print a JSON report");

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Compare decide against the oracle on random instances");
  fuzz_cmd->add_option("--count", fuzz.count, "Number of instances");
  fuzz_cmd->add_option("--seed", fuzz.seed, "Random seed");
  fuzz_cmd->add_option("--oracle-bound", fuzz.bound, "Search bound")->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--num-min", fuzz.shape.range.num_min, "Smallest entry numerator");
  fuzz_cmd->add_option("--num-max", fuzz.shape.range.num_max, "Largest entry numerator");
  fuzz_cmd->add_option("--den-max", fuzz.shape.range.den_max, "Largest entry denominator")
      ->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--max-singular", fuzz.shape.max_singular, "Most singular members per instance")
      ->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--threads", fuzz.threads, "Worker threads (0: all cores)");
  fuzz_cmd->add_option("--out", out_path, "Write the JSON report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*decide) return cmd_decide(path, json, oracle_bound);
    if (*verify) return cmd_verify(path, word);
    if (*oracle) return cmd_oracle(path, max_len, json);
    if (*fuzz_cmd) {
      if (fuzz.shape.range.num_min > fuzz.shape.range.num_max) {
        std::cerr << "fuzz: --num-min exceeds --num-max\n";
        return kInputError;
      }
      return cmd_fuzz(fuzz, out_path);
    }
  } catch (const mortality::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
