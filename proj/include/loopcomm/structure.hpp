#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "loopcomm/loop.hpp"

namespace loopcomm {

// A set of element indices of some owning loop, kept sorted. Whether it is
// actually closed (a subloop) or normal is a property checked by the
// functions below; the constructors of those results guarantee it.
class Subloop {
 public:
  Subloop(std::size_t owner_order, std::vector<Elem> elements);

  std::size_t owner_order() const noexcept { return member_.size(); }
  std::span<const Elem> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(Elem e) const noexcept { return e < member_.size() && member_[e] != 0; }
  // 0/1 flags indexed by owner element, for the kernel layer.
  std::span<const std::uint32_t> membership() const noexcept { return member_; }
  bool is_subset_of(const Subloop& other) const;
  bool is_trivial() const noexcept { return elements_.size() <= 1; }

  // Sorted index list, space separated.
  std::string to_string() const;

  friend bool operator==(const Subloop& a, const Subloop& b) noexcept {
    return a.elements_ == b.elements_ && a.member_.size() == b.member_.size();
  }
  // Size first, then lexicographic.
  friend bool operator<(const Subloop& a, const Subloop& b) noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements_ < b.elements_;
  }

 private:
  std::vector<Elem> elements_;
  std::vector<std::uint32_t> member_;
};

Subloop trivial_subloop(const LoopTable& q);
Subloop whole_loop(const LoopTable& q);
Subloop intersection(const Subloop& a, const Subloop& b);

bool is_closed(const LoopTable& q, std::span<const Elem> elements);

// Least subloop containing seed and the neutral element.
Subloop subloop_generated(const LoopTable& q, std::span<const Elem> seed);

// Every inner-mapping generator (T_x, L_{x,y}, R_{x,y}) maps A onto A.
bool is_normal(const LoopTable& q, const Subloop& a);
// The same test quantified over the tot-inner generators.
bool is_normal_tot(const LoopTable& q, const Subloop& a);

Subloop normal_closure(const LoopTable& q, std::span<const Elem> seed);

// Elements that commute and associate with everything. Computed by the
// commutator/associator scan and as the common fixed set of the inner
// generators; throws std::logic_error if the two disagree.
Subloop center_subloop(const LoopTable& q);

// Every normal subloop, sorted by size then lexicographically.
// Throws Error(CapExceeded) above order 64.
std::vector<Subloop> all_normal_subloops(const LoopTable& q);

struct Quotient {
  LoopTable table;
  std::vector<Elem> projection;       // element -> coset index
  std::vector<Elem> representatives;  // coset index -> least member
};

// Cosets are numbered by their least member. Throws Error(NotNormal).
Quotient quotient(const LoopTable& q, const Subloop& a);

// Preimage under the projection of a set of cosets.
Subloop preimage(const Quotient& quot, const Subloop& s);

struct SubloopTable {
  LoopTable table;
  std::vector<Elem> embedding;  // local index -> owner index (sorted)
};

// The subloop as a loop in its own right, relabeled by sorted position.
SubloopTable as_loop(const LoopTable& q, const Subloop& a);

// Unordered pairs {A, B} of nontrivial normal subloops such that
// (a, b) -> ab is an isomorphism A x B -> Q. Throws CapExceeded above order 64.
std::vector<std::pair<Subloop, Subloop>> direct_decomposition(const LoopTable& q);

inline constexpr std::size_t kEnumerationOrderCap = 64;

}  // namespace loopcomm
