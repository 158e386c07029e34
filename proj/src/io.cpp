#include "mortality/io.hpp"

#include <fstream>
#include <sstream>

namespace mortality {

namespace {

Rat parse_entry(const nlohmann::json& value, const std::string& where) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Rat(BigInt(value.get<std::uint64_t>()));
    return Rat(BigInt(value.get<std::int64_t>()));
  }
  if (value.is_string()) {
    try {
      return parse_rat(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  throw InputError(where + ": expected an integer or a \"p/q\" string, got " + value.dump());
}

}  // namespace

Instance parse_instance(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("matrices"))
    throw InputError("instance: expected an object with key \"matrices\"");
  const auto& list = doc.at("matrices");
  if (!list.is_array() || list.empty()) throw InputError("matrices: expected a nonempty array");

  Instance inst;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string at = "matrices[" + std::to_string(k) + "]";
    const auto& m = list[k];
    if (!m.is_array() || m.size() != 2) throw InputError(at + ": expected a 2x2 array");
    Mat2 mat;
    for (std::size_t r = 0; r < 2; ++r) {
      const std::string row_at = at + "[" + std::to_string(r) + "]";
      if (!m[r].is_array() || m[r].size() != 2) throw InputError(row_at + ": expected a row of 2 entries");
      for (std::size_t c = 0; c < 2; ++c)
        mat(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            parse_entry(m[r][c], row_at + "[" + std::to_string(c) + "]");
    }
    inst.matrices.push_back(std::move(mat));
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  return parse_instance(doc);
}

nlohmann::json instance_to_json(const Instance& instance) {
  nlohmann::json list = nlohmann::json::array();
  for (const Mat2& m : instance.matrices)
    list.push_back(nlohmann::json::array({nlohmann::json::array({to_string(m(0, 0)), to_string(m(0, 1))}),
                                          nlohmann::json::array({to_string(m(1, 0)), to_string(m(1, 1))})}));
  return {{"matrices", list}};
}

nlohmann::json report_to_json(const Verdict& verdict, const Timings& timings) {
  nlohmann::json out;
  out["verdict"] = to_string(verdict.kind);
  out["certificate"] = to_string(verdict.certificate);
  if (verdict.mortal()) out["witness"] = verdict.witness;
  if (verdict.exponent_witness) {
    const auto& ew = *verdict.exponent_witness;
    out["exponent_witnesses"] = nlohmann::json::array({{ew.left, ew.exponent, ew.right}});
  }
  if (verdict.kind == VerdictKind::Unknown) out["search_bound"] = verdict.search_bound;
  out["timings"] = timings;
  return out;
}

nlohmann::json to_json(const FuzzReport& report) {
  nlohmann::json out;
  out["count"] = report.count;
  out["mortal"] = report.mortal;
  out["immortal"] = report.immortal;
  out["unknown"] = report.unknown;
  out["agreements"] = report.agreements;
  out["witness_failures"] = report.witness_failures;
  out["immortal_contradicted"] = report.immortal_contradicted;
  out["contradictions"] = report.contradictions();
  out["mortal_beyond_bound"] = report.mortal_beyond_bound;
  out["beyond_bound_instances"] = report.beyond_bound;
  nlohmann::json bad = nlohmann::json::array();
  for (const auto& d : report.discrepancies)
    bad.push_back({{"index", d.index}, {"kind", d.kind}, {"instance", instance_to_json(d.instance)}});
  out["discrepancies"] = bad;
  out["timings"] = {{"total_ms", report.total_ms},
                    {"decide_ms", report.decide_ms},
                    {"search_ms", report.search_ms},
                    {"max_decide_ms", report.max_decide_ms},
                    {"max_search_ms", report.max_search_ms}};
  return out;
}

std::string human_summary(const Instance& instance, const Verdict& verdict) {
  std::ostringstream out;
  out << to_string(verdict.kind) << " (" << to_string(verdict.certificate) << ")\n";
  if (verdict.mortal()) {
    out << "witness:";
    for (std::size_t i : verdict.witness) out << ' ' << i;
    out << '\n';
    if (verdict.exponent_witness) {
      const auto& ew = *verdict.exponent_witness;
      out << "  M" << ew.left << " * V^" << ew.exponent << " * M" << ew.right << " = 0\n";
    }
  } else if (verdict.kind == VerdictKind::Unknown) {
    out << "no zero product up to length " << verdict.search_bound << "; " << instance.invertible_indices().size()
        << " invertible members is outside the decidable case\n";
  }
  return out.str();
}

}  // namespace mortality
