#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "loopcomm/permutation.hpp"
#include "loopcomm/series_class.hpp"

namespace loopcomm {

class StabilizerChain;

inline constexpr std::uint64_t kGroupOrderCap = 1'000'000'000'000ULL;

// A finitely generated permutation group together with its stabilizer chain.
//
// The chain is deterministic: the base is the set of points moved by the
// generators in increasing order, and Schreier generators are sifted in a
// fixed order. It is built eagerly in the constructor, so a PermGroup is
// immutable afterwards and safe to share between threads.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators);
  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const noexcept { return degree_; }
  // Non-identity generators, duplicates removed, in input order.
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  // Base points of the levels with a nontrivial basic orbit.
  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_lengths() const;

  // Exact order; throws Error(CapExceeded) above kGroupOrderCap.
  std::uint64_t order() const;
  bool is_trivial() const noexcept { return generators_.empty(); }
  bool contains(const Permutation& p) const;
  bool contains_all(std::span<const Permutation> ps) const;

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<const StabilizerChain> chain_;
};

std::uint64_t group_order(const PermGroup& g);
bool contains(const PermGroup& g, const Permutation& p);

// Same group (both are subgroups of a common symmetric group).
bool same_group(const PermGroup& a, const PermGroup& b);

// Least subgroup containing `seed` and normalized by `ambient`.
PermGroup normal_closure(const PermGroup& ambient, std::span<const Permutation> seed);

// [G, G]: normal closure of the generator commutators.
PermGroup derived_subgroup(const PermGroup& g);

// [G, N] for N normal in G: normal closure of [g, n] over generators.
PermGroup commutator_with(const PermGroup& g, const PermGroup& n);

// Derived length; INFINITE if the derived series stops at a nontrivial group.
SeriesClass solvable_class(const PermGroup& g);

// Lower central series length; INFINITE if it stops at a nontrivial group.
SeriesClass nilpotency_class_group(const PermGroup& g);

}  // namespace loopcomm
