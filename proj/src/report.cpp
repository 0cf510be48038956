#include "loopcomm/report.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "loopcomm/error.hpp"

namespace loopcomm {

bool HierarchyReport::consistent() const {
  if (nilpotency_class.is_finite() && !congruence_solvability_class.is_finite()) return false;
  if (congruence_solvability_class.is_finite() && !classical_solvability_class.is_finite())
    return false;
  if (supernilpotent && !nilpotency_class.is_finite()) return false;
  return true;
}

namespace {

const char* flag(bool b) { return b ? "true" : "false"; }

bool parse_flag(const std::string& key, const std::string& v) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw Error(ErrorKind::Malformed, "bad boolean for " + key + ": " + v);
}

std::uint64_t parse_number(const std::string& key, const std::string& v) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw Error(ErrorKind::Malformed, "bad number for " + key + ": " + v);
  return out;
}

SeriesClass parse_class(const std::string& key, const std::string& v) {
  if (v == "inf") return SeriesClass::infinite();
  return SeriesClass::finite(static_cast<unsigned>(parse_number(key, v)));
}

}  // namespace

std::vector<std::pair<std::string, std::string>> report_fields(const HierarchyReport& r) {
  std::vector<std::pair<std::string, std::string>> f{
      {"associative", flag(r.associative)},
      {"center_size", std::to_string(r.center_size)},
      {"classical_solvability_class", r.classical_solvability_class.to_string()},
      {"commutative", flag(r.commutative)},
      {"congruence_solvability_class", r.congruence_solvability_class.to_string()},
      {"inn_order", std::to_string(r.inn_order)},
      {"inn_solvable_class", r.inn_solvable_class.to_string()},
      {"mlt_nilpotency_class", r.mlt_nilpotency_class.to_string()},
      {"mlt_order", std::to_string(r.mlt_order)},
      {"mlt_solvable_class", r.mlt_solvable_class.to_string()},
      {"nilpotency_class", r.nilpotency_class.to_string()},
      {"order", std::to_string(r.order)},
      {"supernilpotent", flag(r.supernilpotent)},
  };
  std::sort(f.begin(), f.end());
  return f;
}

std::string format_report(const HierarchyReport& r) {
  std::string out;
  for (const auto& [k, v] : report_fields(r)) out += k + ": " + v + "\n";
  return out;
}

HierarchyReport report_from_fields(
    const std::vector<std::pair<std::string, std::string>>& fields) {
  std::map<std::string, std::string> m(fields.begin(), fields.end());
  auto get = [&](const std::string& k) -> const std::string& {
    auto it = m.find(k);
    if (it == m.end()) throw Error(ErrorKind::Malformed, "report is missing " + k);
    return it->second;
  };
  HierarchyReport r;
  r.associative = parse_flag("associative", get("associative"));
  r.center_size = parse_number("center_size", get("center_size"));
  r.classical_solvability_class =
      parse_class("classical_solvability_class", get("classical_solvability_class"));
  r.commutative = parse_flag("commutative", get("commutative"));
  r.congruence_solvability_class =
      parse_class("congruence_solvability_class", get("congruence_solvability_class"));
  r.inn_order = parse_number("inn_order", get("inn_order"));
  r.inn_solvable_class = parse_class("inn_solvable_class", get("inn_solvable_class"));
  r.mlt_nilpotency_class = parse_class("mlt_nilpotency_class", get("mlt_nilpotency_class"));
  r.mlt_order = parse_number("mlt_order", get("mlt_order"));
  r.mlt_solvable_class = parse_class("mlt_solvable_class", get("mlt_solvable_class"));
  r.nilpotency_class = parse_class("nilpotency_class", get("nilpotency_class"));
  r.order = parse_number("order", get("order"));
  r.supernilpotent = parse_flag("supernilpotent", get("supernilpotent"));
  if (m.size() != report_fields(r).size())
    throw Error(ErrorKind::Malformed, "report has unknown keys");
  return r;
}

}  // namespace loopcomm
