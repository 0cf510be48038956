#include <filesystem>
#include <fstream>
#include <thread>

#include "doctest.h"
#include "loopcomm/catalog.hpp"
#include "loopcomm/commutator.hpp"
#include "loopcomm/error.hpp"
#include "loopcomm/isomorphism.hpp"
#include "oracles.hpp"

using namespace loopcomm;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("loopcomm-test-" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) +
            "-" + std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

LoopTable s3() {
  return oracle::group_table(oracle::closure(
      3, {Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{0, 1, 2}})}));
}

bool expect_malformed(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == ErrorKind::Malformed;
  }
  return false;
}

}  // namespace

TEST_CASE("report formatting") {
  HierarchyReport r = hierarchy_report(s3());
  const std::string text = format_report(r);
  CHECK(text.find("nilpotency_class: inf\n") != std::string::npos);
  CHECK(text.find("classical_solvability_class: 2\n") != std::string::npos);
  auto fields = report_fields(r);
  CHECK(std::is_sorted(fields.begin(), fields.end()));
  CHECK(fields.size() == 13);
  CHECK(report_from_fields(fields) == r);

  auto missing = fields;
  missing.pop_back();
  CHECK(expect_malformed([&] { report_from_fields(missing); }));
  auto unknown = fields;
  unknown.emplace_back("zzz", "1");
  CHECK(expect_malformed([&] { report_from_fields(unknown); }));
  auto bad = fields;
  for (auto& [k, v] : bad)
    if (k == "commutative") v = "maybe";
  CHECK(expect_malformed([&] { report_from_fields(bad); }));
}

TEST_CASE("catalog record round trip") {
  for (const LoopTable& q : {cyclic_group(4), s3(), trivial_loop()}) {
    CatalogRecord r = make_record(q, "unit");
    CHECK(r.fingerprint == fingerprint(q));
    const std::string line = format_record(r);
    CHECK(std::count(line.begin(), line.end(), '\t') == 3);
    CHECK(parse_record(line) == r);
  }
  CatalogRecord r = make_record(cyclic_group(3), "x");
  std::string line = format_record(r);
  CHECK(line.substr(0, 17).find('\t') == 16);
  CHECK(expect_malformed([&] { parse_record("abc\t3\tx"); }));
  std::string wrong_order = line;
  wrong_order.replace(17, 1, "4");
  CHECK(expect_malformed([&] { parse_record(wrong_order); }));
  r.source = "has\ttab";
  CHECK(expect_malformed([&] { format_record(r); }));
}

TEST_CASE("catalog add and query") {
  TempDir dir;
  const fs::path cat = dir.path / "catalog.tsv";
  CHECK(catalog_load(cat).empty());
  CHECK(catalog_query(cat, {}).empty());

  CHECK(catalog_add(cat, make_record(s3(), "s3")));
  CHECK_FALSE(catalog_add(cat, make_record(s3(), "again")));
  // An isomorphic relabeling has the same fingerprint.
  std::vector<Elem> labels{0, 2, 1, 4, 3, 5};
  CHECK_FALSE(catalog_add(cat, make_record(relabel(s3(), labels), "relabeled")));
  CHECK(catalog_load(cat).size() == 1);

  CHECK(catalog_add(cat, make_record(cyclic_group(4), "z4")));
  CHECK(catalog_add(cat, make_record(cyclic_group(6), "z6")));
  CHECK(catalog_add(cat, make_record(trivial_loop(), "one")));
  CHECK(catalog_load(cat).size() == 4);

  auto q = [&](std::vector<std::string> fs) {
    std::vector<Filter> filters;
    for (auto& f : fs) filters.push_back(parse_filter(f));
    std::vector<std::string> out;
    for (auto& r : catalog_query(cat, filters)) out.push_back(r.source);
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(q({"order=6"}) == std::vector<std::string>{"s3", "z6"});
  CHECK(q({"order>=4", "commutative=true"}) == std::vector<std::string>{"z4", "z6"});
  CHECK(q({"nilpotency_class>1"}) == std::vector<std::string>{"s3"});
  CHECK(q({"nilpotency_class<inf"}) == std::vector<std::string>{"one", "z4", "z6"});
  CHECK(q({"nilpotency_class=inf"}) == std::vector<std::string>{"s3"});
  CHECK(q({"source!=z4", "order<6"}) == std::vector<std::string>{"one"});
  CHECK(q({"order<=1"}) == std::vector<std::string>{"one"});

  auto all = catalog_query(cat, {});
  CHECK(std::is_sorted(all.begin(), all.end(),
                       [](const auto& a, const auto& b) { return a.fingerprint < b.fingerprint; }));
}

TEST_CASE("catalog concurrent adds keep one record per fingerprint") {
  TempDir dir;
  const fs::path cat = dir.path / "catalog.tsv";
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] {
      for (std::size_t n = 1; n <= 8; ++n) catalog_add(cat, make_record(cyclic_group(n), "t" + std::to_string(t)));
    });
  for (auto& t : threads) t.join();
  CHECK(catalog_load(cat).size() == 8);
}

TEST_CASE("filter parsing errors") {
  CHECK(expect_malformed([] { parse_filter("order"); }));
  CHECK(expect_malformed([] { parse_filter("bogus=1"); }));
  CHECK(expect_malformed([] { parse_filter("=3"); }));
  Filter f = parse_filter("mlt_order>=12");
  CHECK(f.key == "mlt_order");
  CHECK(f.op == Filter::Op::Ge);
  CHECK(f.value == "12");
  CatalogRecord r = make_record(cyclic_group(2), "x");
  CHECK(expect_malformed([&] { matches(r, parse_filter("commutative<true")); }));
}

TEST_CASE("catalog load reports corrupt lines") {
  TempDir dir;
  const fs::path cat = dir.path / "catalog.tsv";
  std::ofstream(cat) << "not a record\n";
  CHECK(expect_malformed([&] { catalog_load(cat); }));
  const fs::path d = dir.path / "adir";
  fs::create_directories(d);
  CHECK_THROWS_AS(catalog_load(d), Error);
}
