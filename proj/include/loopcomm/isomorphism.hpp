#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "loopcomm/loop.hpp"

namespace loopcomm {

// An isomorphism f: q1 -> q2 as an image list, or nullopt.
//
// Backtracking assigns f(0), f(1), ... in index order, trying images in
// increasing order, so the returned bijection has the lexicographically
// least image sequence. Candidates are pruned by element invariants (cycle
// types of L_x and R_x) and every assignment is propagated through products
// of already-assigned elements.
std::optional<std::vector<Elem>> is_isomorphic(const LoopTable& q1, const LoopTable& q2);

struct CanonicalForm {
  LoopTable table;            // neutral relabeled to 0
  std::vector<Elem> labels;   // old index -> canonical index
};

// Canonical relabeling.
//
// Candidate labelings are generated by choosing generators one at a time:
// the neutral element gets label 0, and the labeled set is closed under
// multiplication, labeling each new product in discovery order (pairs with
// larger maximum label later, (i,k) before (k,i)). When the closure is a
// proper subloop, every unlabeled element whose invariant is minimal is
// tried as the next generator. The result is the least table, comparing
// entries in shell order (shell s is row s columns 0..s, then column s rows
// 0..s-1), which lets partial labelings be pruned. The set of explored
// labelings is isomorphism invariant, so isomorphic loops get equal tables.
//
// Throws Error(CapExceeded) if the search visits more than `node_budget`
// labeling nodes.
CanonicalForm canonical_form(const LoopTable& q, std::uint64_t node_budget = 4'000'000);

// 64-bit fingerprint of the canonical table: FNV-1a (offset 0xcbf29ce484222325,
// prime 0x100000001b3) over the order followed by the row-major entries, each
// folded in as a 32-bit little-endian word, then the SplitMix64 finalizer
// (xor-shift 30, * 0xbf58476d1ce4e5b9, xor-shift 27, * 0x94d049bb133111eb,
// xor-shift 31).
std::uint64_t fingerprint(const LoopTable& q);
std::uint64_t table_hash(const LoopTable& canonical);

}  // namespace loopcomm
