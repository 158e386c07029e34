#ifndef MORTALITY_IO_HPP
#define MORTALITY_IO_HPP

// JSON instance and report files. Rationals are written as strings ("-6/7")
// and read from either JSON integers or such strings.

#include <map>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "mortality/oracle.hpp"
#include "mortality/set_decider.hpp"

namespace mortality {

/// Malformed input; the message names the offending entry.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses {"matrices": [[[a, b], [c, d]], ...]}.
Instance parse_instance(const nlohmann::json& doc);
Instance load_instance(const std::string& path);
nlohmann::json instance_to_json(const Instance& instance);

/// Per-phase wall-clock milliseconds.
using Timings = std::map<std::string, double>;

nlohmann::json report_to_json(const Verdict& verdict, const Timings& timings);
nlohmann::json to_json(const FuzzReport& report);

std::string human_summary(const Instance& instance, const Verdict& verdict);

}  // namespace mortality

#endif  // MORTALITY_IO_HPP
