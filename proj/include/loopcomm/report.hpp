#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "loopcomm/series_class.hpp"

namespace loopcomm {

// Where a loop sits among abelian / supernilpotent / centrally nilpotent /
// congruence solvable / classically solvable, plus the matching facts about
// Mlt(Q) and Inn(Q).
struct HierarchyReport {
  std::size_t order = 0;
  bool commutative = false;
  bool associative = false;
  std::size_t center_size = 0;
  SeriesClass nilpotency_class = SeriesClass::infinite();
  SeriesClass congruence_solvability_class = SeriesClass::infinite();
  SeriesClass classical_solvability_class = SeriesClass::infinite();
  bool supernilpotent = false;
  std::uint64_t mlt_order = 0;
  SeriesClass mlt_solvable_class = SeriesClass::infinite();
  SeriesClass mlt_nilpotency_class = SeriesClass::infinite();
  std::uint64_t inn_order = 0;
  SeriesClass inn_solvable_class = SeriesClass::infinite();

  // nilpotent => congruence solvable => classically solvable, and
  // supernilpotent => nilpotent.
  bool consistent() const;

  friend bool operator==(const HierarchyReport&, const HierarchyReport&) = default;
};

// (key, value) pairs sorted by key; SeriesClass INFINITE prints as "inf".
std::vector<std::pair<std::string, std::string>> report_fields(const HierarchyReport& r);

// One "key: value" line per field, sorted by key.
std::string format_report(const HierarchyReport& r);

// Inverse of report_fields; throws Error(Malformed) on unknown or missing keys.
HierarchyReport report_from_fields(const std::vector<std::pair<std::string, std::string>>& fields);

}  // namespace loopcomm
