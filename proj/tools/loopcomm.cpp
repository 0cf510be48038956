// loopcomm: analyze, build, decompose and search finite loops from the shell.
//
// Exit codes: 0 success, 2 input error, 3 mathematical precondition failure,
// 4 I/O error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "loopcomm/catalog.hpp"
#include "loopcomm/commutator.hpp"
#include "loopcomm/error.hpp"
#include "loopcomm/extensions.hpp"
#include "loopcomm/loop.hpp"
#include "loopcomm/presets.hpp"
#include "loopcomm/structure.hpp"

namespace fs = std::filesystem;
using namespace loopcomm;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitIo = 4;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Io:
      return kExitIo;
    case ErrorKind::NotAbelianIn:
    case ErrorKind::NotNormal:
    case ErrorKind::NotNeutralAt:
      return kExitPrecondition;
    default:
      return kExitInput;
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::Io, "cannot read " + path.string());
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  out.flush();
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
}

int cmd_analyze(const std::string& path) {
  LoopTable q = parse_table(read_file(path));
  std::cout << format_report(hierarchy_report(q));
  return kExitOk;
}

int cmd_extend(const std::string& path) {
  Cocycle g = parse_cocycle(read_file(path));
  std::cout << format_table(build_extension(g));
  return kExitOk;
}

int cmd_decompose(const std::string& path, const std::vector<Elem>& elements) {
  LoopTable q = parse_table(read_file(path));
  Subloop fiber(q.order(), elements);
  if (!is_closed(q, fiber.elements()) || !fiber.contains(q.neutral()))
    throw Error(ErrorKind::NotNormal, "listed elements do not form a subloop");
  std::cout << format_cocycle(decompose_extension(q, fiber).cocycle);
  return kExitOk;
}

int cmd_search(const std::string& preset, std::uint64_t seed, std::uint64_t budget,
               const std::string& out_dir, bool list) {
  if (list) {
    for (const PresetInfo& p : preset_catalog())
      std::cout << p.name << '\t' << (p.random ? "random" : "exhaustive") << '\t' << p.summary
                << '\n';
    return kExitOk;
  }
  if (preset.empty()) throw Error(ErrorKind::Malformed, "--preset is required (see --list)");
  PresetRun run = run_preset(preset, seed, budget);

  std::string log;
  for (const Witness& w : run.witnesses) log += w.verdict + '\n';
  if (!out_dir.empty()) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw Error(ErrorKind::Io, "cannot create " + out_dir + ": " + ec.message());
    for (const Witness& w : run.witnesses) {
      const std::string stem = run.preset + "-" + std::to_string(w.candidate);
      write_file(fs::path(out_dir) / (stem + ".table"), format_table(w.table));
      if (w.cocycle) write_file(fs::path(out_dir) / (stem + ".cocycle"), format_cocycle(*w.cocycle));
    }
    write_file(fs::path(out_dir) / (run.preset + ".log"), log);
  }
  std::cout << "preset=" << run.preset << " seed=" << seed << " candidates=" << run.candidates
            << " witnesses=" << run.witnesses.size() << '\n'
            << log;
  return kExitOk;
}

int cmd_catalog_add(const std::string& catalog, const std::string& path, const std::string& source) {
  LoopTable q = parse_table(read_file(path));
  CatalogRecord r = make_record(q, source.empty() ? fs::path(path).filename().string() : source);
  const bool added = catalog_add(catalog, r);
  std::cout << (added ? "added " : "duplicate ") << format_record(r).substr(0, 16) << '\n';
  return kExitOk;
}

int cmd_catalog_query(const std::string& catalog, const std::vector<std::string>& filters) {
  std::vector<Filter> parsed;
  for (const std::string& f : filters) parsed.push_back(parse_filter(f));
  for (const CatalogRecord& r : catalog_query(catalog, parsed)) std::cout << format_record(r) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commutator theory toolkit for finite loops"};
  app.require_subcommand(1);

  std::string path, catalog_path, preset, out_dir, source;
  std::vector<Elem> fiber;
  std::vector<std::string> filters;
  std::uint64_t seed = 0, budget = 0;
  bool list = false;

  auto* analyze = app.add_subcommand("analyze", "Print the hierarchy report of a Cayley table");
  analyze->add_option("table", path, "Cayley table file")->required();

  auto* extend = app.add_subcommand("extend", "Build the extension defined by a cocycle file");
  extend->add_option("cocycle", path, "Cocycle file")->required();

  auto* decompose = app.add_subcommand("decompose", "Extract a cocycle from a loop and an abelian normal subloop");
  decompose->add_option("table", path, "Cayley table file")->required();
  decompose->add_option("elements", fiber, "Elements of the normal subloop")->required();

  auto* search = app.add_subcommand("search", "Run a named witness search");
  search->add_option("--preset", preset, "Preset name");
  search->add_option("--seed", seed, "Seed for random presets");
  search->add_option("--budget", budget, "Candidate budget (0 = preset default)");
  search->add_option("--out", out_dir, "Directory for witness tables, cocycles and the verdict log");
  search->add_flag("--list", list, "List presets");

  auto* catalog = app.add_subcommand("catalog", "Invariant catalog");
  catalog->require_subcommand(1);
  auto* add = catalog->add_subcommand("add", "Append a loop's record unless already present");
  add->add_option("--catalog", catalog_path, "Catalog file")->required();
  add->add_option("--source", source, "Source tag (default: file name)");
  add->add_option("table", path, "Cayley table file")->required();
  auto* query = catalog->add_subcommand("query", "List records matching all filters");
  query->add_option("--catalog", catalog_path, "Catalog file")->required();
  query->add_option("filters", filters, "key=value, key!=value, key<value, key<=value, key>value, key>=value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*analyze) return cmd_analyze(path);
    if (*extend) return cmd_extend(path);
    if (*decompose) return cmd_decompose(path, fiber);
    if (*search) return cmd_search(preset, seed, budget, out_dir, list);
    if (*add) return cmd_catalog_add(catalog_path, path, source);
    if (*query) return cmd_catalog_query(catalog_path, filters);
  } catch (const Error& e) {
    std::cerr << "loopcomm: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "loopcomm: internal error: " << e.what() << '\n';
    return 1;
  }
  return kExitInput;
}
