#pragma once

// The shared test pool: small groups from permutation generators, every loop
// of order <= 5, exhaustive small cocycle extensions, and seeded random
// extensions of orders 8..16.

#include <optional>
#include <string>
#include <vector>

#include "loopcomm/extensions.hpp"
#include "loopcomm/loop.hpp"

namespace pool {

struct Entry {
  std::string name;
  loopcomm::LoopTable table;
  std::optional<loopcomm::Cocycle> cocycle;  // set for extensions built from a loop cocycle
  bool group = false;
};

// Groups of order <= 16 built from permutation generators via brute-force
// closure.
std::vector<Entry> groups();

// Reduced Latin squares of order <= 5.
std::vector<Entry> small_loops();

// Every loop cocycle for (A, F) in {(Z2,Z2), (Z2,Z3), (Z3,Z2)}.
std::vector<Entry> exhaustive_extensions();

// `count` loop-cocycle extensions of order 8..16 over assorted (A, F), drawn
// from a fixed seed.
std::vector<Entry> random_extensions(std::size_t count = 200, std::uint64_t seed = 0x5eed);

// `count` central extensions with |F| <= 8.
std::vector<Entry> random_central_extensions(std::size_t count = 100, std::uint64_t seed = 0xce47);

// All of the above.
std::vector<Entry> everything();

// A nonassociative loop of order 5 and a nonassociative extension of order 6,
// used as bases for further extensions.
loopcomm::LoopTable nonassociative5();
loopcomm::LoopTable nonassociative6();

}  // namespace pool
