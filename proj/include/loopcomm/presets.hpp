#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loopcomm/extensions.hpp"
#include "loopcomm/loop.hpp"
#include "loopcomm/structure.hpp"

namespace loopcomm {

struct PresetInfo {
  std::string name;
  std::string summary;
  bool random = false;
  std::uint64_t default_budget = 0;  // random presets only
};

// Known presets in a fixed order.
const std::vector<PresetInfo>& preset_catalog();

struct Witness {
  std::uint64_t candidate = 0;
  LoopTable table;
  std::optional<Cocycle> cocycle;  // absent for presets that do not search cocycles
  Subloop fiber;
  std::string verdict;  // one line, no trailing newline
};

struct PresetRun {
  std::string preset;
  std::uint64_t candidates = 0;  // size of the scanned range
  std::vector<Witness> witnesses;
};

// Runs a named search. Random presets draw `budget` candidates (0 selects the
// default); exhaustive presets scan their whole space, or only its first
// `budget` candidates when budget is nonzero. Deterministic in (name, seed,
// budget) regardless of `workers`.
// Throws Error(Malformed) for unknown names and Error(CapExceeded) for
// oversized spaces.
PresetRun run_preset(std::string_view name, std::uint64_t seed, std::uint64_t budget,
                     unsigned workers = 0);

}  // namespace loopcomm
