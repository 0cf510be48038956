#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "loopcomm/loop.hpp"
#include "loopcomm/report.hpp"

namespace loopcomm {

// One catalog line, tab separated:
//   <fingerprint, 16 hex digits> \t <order> \t <source> \t <key=value;key=value;...>
// with the report fields sorted by key.
struct CatalogRecord {
  std::uint64_t fingerprint = 0;
  std::size_t order = 0;
  std::string source;
  HierarchyReport report;

  friend bool operator==(const CatalogRecord&, const CatalogRecord&) = default;
};

CatalogRecord make_record(const LoopTable& q, std::string source);

std::string format_record(const CatalogRecord& r);
// Throws Error(Malformed).
CatalogRecord parse_record(std::string_view line);

// Records in file order; a missing file is an empty catalog.
// Throws Error(Io) if the file exists but cannot be read.
std::vector<CatalogRecord> catalog_load(const std::filesystem::path& path);

// Appends r unless a record with the same fingerprint is present; returns
// whether it was appended. The check and the append happen under an
// exclusive advisory lock (flock) on the catalog file.
// Throws Error(Io).
bool catalog_add(const std::filesystem::path& path, const CatalogRecord& r);

struct Filter {
  enum class Op { Eq, Ne, Lt, Le, Gt, Ge };
  std::string key;
  Op op = Op::Eq;
  std::string value;
};

// "key=value", "key!=value", "key<value", "key<=value", "key>value",
// "key>=value". Keys are report fields or "source"; "inf" compares above every
// number. Throws Error(Malformed).
Filter parse_filter(std::string_view text);

bool matches(const CatalogRecord& r, const Filter& f);

// Records satisfying every filter, sorted by fingerprint.
std::vector<CatalogRecord> catalog_query(const std::filesystem::path& path,
                                         const std::vector<Filter>& filters);

}  // namespace loopcomm
