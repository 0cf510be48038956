#include "loopcomm/catalog.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cstring>
#include <fstream>
#include <optional>

#include "loopcomm/commutator.hpp"
#include "loopcomm/error.hpp"
#include "loopcomm/isomorphism.hpp"

namespace loopcomm {

CatalogRecord make_record(const LoopTable& q, std::string source) {
  return CatalogRecord{fingerprint(q), q.order(), std::move(source), hierarchy_report(q)};
}

std::string format_record(const CatalogRecord& r) {
  if (r.source.find_first_of("\t\n\r") != std::string::npos)
    throw Error(ErrorKind::Malformed, "source tag may not contain tabs or newlines");
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(r.fingerprint));
  std::string line = std::string(hex) + '\t' + std::to_string(r.order) + '\t' + r.source + '\t';
  bool first = true;
  for (const auto& [k, v] : report_fields(r.report)) {
    if (!first) line += ';';
    first = false;
    line += k + '=' + v;
  }
  return line;
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    auto p = s.find(sep);
    out.push_back(s.substr(0, p));
    if (p == std::string_view::npos) return out;
    s.remove_prefix(p + 1);
  }
}

template <class T>
T parse_uint(std::string_view s, int base, const char* what) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorKind::Malformed, std::string("bad ") + what + " in catalog record");
  return v;
}

[[noreturn]] void io_error(const std::filesystem::path& path, const char* action) {
  throw Error(ErrorKind::Io, std::string(action) + " " + path.string() + ": " + std::strerror(errno));
}

std::vector<CatalogRecord> read_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) io_error(path, "cannot read");
  std::vector<CatalogRecord> out;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(parse_record(line));
  if (in.bad()) io_error(path, "cannot read");
  return out;
}

// Holds an flock on an open descriptor for the lifetime of the object.
class LockedFile {
 public:
  LockedFile(const std::filesystem::path& path, int flags, int lock) : fd_(::open(path.c_str(), flags, 0644)) {
    if (fd_ < 0) io_error(path, "cannot open");
    if (::flock(fd_, lock) != 0) {
      ::close(fd_);
      io_error(path, "cannot lock");
    }
  }
  ~LockedFile() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  LockedFile(const LockedFile&) = delete;
  LockedFile& operator=(const LockedFile&) = delete;
  int fd() const { return fd_; }

 private:
  int fd_;
};

}  // namespace

CatalogRecord parse_record(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  auto cols = split(line, '\t');
  if (cols.size() != 4) throw Error(ErrorKind::Malformed, "catalog record needs 4 fields");
  if (cols[0].size() != 16) throw Error(ErrorKind::Malformed, "bad fingerprint in catalog record");
  CatalogRecord r;
  r.fingerprint = parse_uint<std::uint64_t>(cols[0], 16, "fingerprint");
  r.order = parse_uint<std::size_t>(cols[1], 10, "order");
  r.source = std::string(cols[2]);
  std::vector<std::pair<std::string, std::string>> fields;
  for (std::string_view kv : split(cols[3], ';')) {
    auto eq = kv.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorKind::Malformed, "bad report field");
    fields.emplace_back(std::string(kv.substr(0, eq)), std::string(kv.substr(eq + 1)));
  }
  r.report = report_from_fields(fields);
  if (r.report.order != r.order) throw Error(ErrorKind::Malformed, "order column disagrees with report");
  return r;
}

std::vector<CatalogRecord> catalog_load(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) {
    if (ec) io_error(path, "cannot stat");
    return {};
  }
  LockedFile lock(path, O_RDONLY, LOCK_SH);
  return read_records(path);
}

bool catalog_add(const std::filesystem::path& path, const CatalogRecord& r) {
  const std::string line = format_record(r) + '\n';
  LockedFile lock(path, O_WRONLY | O_APPEND | O_CREAT, LOCK_EX);
  for (const CatalogRecord& existing : read_records(path))
    if (existing.fingerprint == r.fingerprint) return false;
  std::size_t done = 0;
  while (done < line.size()) {
    ssize_t n = ::write(lock.fd(), line.data() + done, line.size() - done);
    if (n < 0) {
      if (errno == EINTR) continue;
      io_error(path, "cannot append to");
    }
    done += static_cast<std::size_t>(n);
  }
  if (::fsync(lock.fd()) != 0) io_error(path, "cannot sync");
  return true;
}

Filter parse_filter(std::string_view text) {
  static constexpr std::pair<std::string_view, Filter::Op> kOps[] = {
      {"!=", Filter::Op::Ne}, {"<=", Filter::Op::Le}, {">=", Filter::Op::Ge},
      {"=", Filter::Op::Eq},  {"<", Filter::Op::Lt},  {">", Filter::Op::Gt}};
  auto pos = text.find_first_of("!=<>");
  if (pos == 0 || pos == std::string_view::npos)
    throw Error(ErrorKind::Malformed, "filter must look like key<op>value: " + std::string(text));
  for (auto [sym, op] : kOps) {
    if (text.substr(pos, sym.size()) != sym) continue;
    Filter f{std::string(text.substr(0, pos)), op, std::string(text.substr(pos + sym.size()))};
    if (f.value.empty()) throw Error(ErrorKind::Malformed, "filter has no value: " + std::string(text));
    if (f.key != "source") {
      bool known = false;
      for (const auto& [k, v] : report_fields(HierarchyReport{})) known |= k == f.key;
      if (!known) throw Error(ErrorKind::Malformed, "unknown filter key: " + f.key);
    }
    return f;
  }
  throw Error(ErrorKind::Malformed, "bad filter operator: " + std::string(text));
}

namespace {

// Numbers and "inf" as one ordered scale; nullopt for anything else.
std::optional<std::pair<bool, std::uint64_t>> ordinal(const std::string& v) {
  if (v == "inf") return std::pair{true, std::uint64_t{0}};
  std::uint64_t x = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || ptr != v.data() + v.size()) return std::nullopt;
  return std::pair{false, x};
}

}  // namespace

bool matches(const CatalogRecord& r, const Filter& f) {
  std::string actual;
  if (f.key == "source") {
    actual = r.source;
  } else {
    for (const auto& [k, v] : report_fields(r.report))
      if (k == f.key) actual = v;
  }
  auto a = ordinal(actual), b = ordinal(f.value);
  int cmp;
  if (a && b) {
    cmp = *a < *b ? -1 : (*b < *a ? 1 : 0);
  } else {
    if (f.op != Filter::Op::Eq && f.op != Filter::Op::Ne)
      throw Error(ErrorKind::Malformed, "ordering filter on non-numeric value: " + f.key);
    cmp = actual == f.value ? 0 : 1;
  }
  switch (f.op) {
    case Filter::Op::Eq: return cmp == 0;
    case Filter::Op::Ne: return cmp != 0;
    case Filter::Op::Lt: return cmp < 0;
    case Filter::Op::Le: return cmp <= 0;
    case Filter::Op::Gt: return cmp > 0;
    case Filter::Op::Ge: return cmp >= 0;
  }
  return false;
}

std::vector<CatalogRecord> catalog_query(const std::filesystem::path& path,
                                         const std::vector<Filter>& filters) {
  std::vector<CatalogRecord> out;
  for (CatalogRecord& r : catalog_load(path))
    if (std::all_of(filters.begin(), filters.end(), [&](const Filter& f) { return matches(r, f); }))
      out.push_back(std::move(r));
  std::stable_sort(out.begin(), out.end(), [](const CatalogRecord& a, const CatalogRecord& b) {
    return a.fingerprint < b.fingerprint;
  });
  return out;
}

}  // namespace loopcomm
