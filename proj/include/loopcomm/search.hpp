#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "loopcomm/extensions.hpp"
#include "loopcomm/loop.hpp"

namespace loopcomm {

// SplitMix64 (Steele, Lea, Flood). State advances by the golden-ratio
// increment 0x9E3779B97F4A7C15 and outputs are finalized with
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   z =  z ^ (z >> 31)
class SplitMix64 {
 public:
  static constexpr std::uint64_t kIncrement = 0x9E3779B97F4A7C15ull;
  static constexpr std::uint64_t kMul1 = 0xBF58476D1CE4E5B9ull;
  static constexpr std::uint64_t kMul2 = 0x94D049BB133111EBull;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * kMul1;
    z = (z ^ (z >> 27)) * kMul2;
    return z ^ (z >> 31);
  }

  std::uint64_t next() noexcept { return mix(state_ += kIncrement); }

 private:
  std::uint64_t state_;
};

// Candidate k of a random search draws from SplitMix64(mix(seed ^ mix(k))),
// so the sequence depends only on (seed, k) and never on the worker layout.
constexpr std::uint64_t candidate_seed(std::uint64_t seed, std::uint64_t k) noexcept {
  return SplitMix64::mix(seed ^ SplitMix64::mix(k));
}

enum class CocycleFamily {
  Loop,     // free phi_{x,y} (y != 1), psi_{x,y} (x != 1), theta_{x,y} (x, y != 1)
  Central,  // phi = psi = id, free theta_{x,y} (x, y != 1)
};

struct SearchSpace {
  AbelianGroupTable a;
  LoopTable f;
  CocycleFamily family = CocycleFamily::Loop;
};

inline constexpr std::uint64_t kExhaustiveCap = 100'000'000;

// The free cells of the family, in enumeration order: phi cells, then psi
// cells, then theta cells, each row-major in (x, y).
struct FreeCells {
  std::vector<std::size_t> phi, psi, theta;
};
FreeCells free_cells(const SearchSpace& space);

// |Aut(A)|^(phi + psi cells) * |A|^(theta cells).
// Throws Error(CapExceeded) above kExhaustiveCap.
std::uint64_t exhaustive_space_size(const SearchSpace& space);

// Mixed-radix decoding with the first free cell most significant, so
// increasing indices enumerate cell assignments lexicographically.
Cocycle cocycle_from_index(const SearchSpace& space, std::span<const Permutation> auts,
                           std::uint64_t index);

// Each free cell takes next() % radix from the candidate's own stream.
Cocycle random_cocycle(const SearchSpace& space, std::span<const Permutation> auts,
                       std::uint64_t seed, std::uint64_t k);

struct SearchOptions {
  enum class Mode { Exhaustive, Random } mode = Mode::Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;  // random mode: number of candidates
  unsigned workers = 0;      // 0: hardware concurrency
  std::size_t max_hits = SIZE_MAX;
};

struct SearchHit {
  std::uint64_t candidate;
  Cocycle cocycle;
  LoopTable table;
};

using CocyclePredicate = std::function<bool(const LoopTable&, const Cocycle&)>;

// Hits in increasing candidate order. With max_hits, exactly the first
// max_hits hits of the full sequence are returned.
std::vector<SearchHit> search_cocycles(const SearchSpace& space, const CocyclePredicate& pred,
                                       const SearchOptions& opts);

// Parallel scan of candidate indices [0, total); returns the sorted indices
// accepted by `test`, truncated to the first max_hits. `test` must be pure.
// Exceptions thrown by `test` are rethrown on the calling thread.
std::vector<std::uint64_t> scan_candidates(std::uint64_t total,
                                           const std::function<bool(std::uint64_t)>& test,
                                           unsigned workers = 0,
                                           std::size_t max_hits = SIZE_MAX);

// Every Latin square on {0..n-1}, row-major, in lexicographic order.
std::vector<std::vector<Elem>> all_latin_squares(std::size_t n);

}  // namespace loopcomm
