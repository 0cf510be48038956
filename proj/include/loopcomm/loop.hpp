#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "loopcomm/permutation.hpp"

namespace loopcomm {

using Elem = Point;

inline constexpr std::size_t kMaxLoopOrder = 512;

// A finite loop given by its Cayley table.
//
// Elements are 0-based indices. The neutral element is detected from the
// table and need not be index 0. Both division tables are precomputed, so
// mul/ldiv/rdiv are single lookups. Immutable once constructed.
class LoopTable {
 public:
  // Validates the Latin property and finds the neutral element.
  // Throws Error with kind Malformed, NotLatin, NoNeutral or CapExceeded.
  static LoopTable from_table(std::size_t order, std::vector<Elem> table);

  std::size_t order() const noexcept { return n_; }
  Elem neutral() const noexcept { return neutral_; }

  Elem mul(Elem x, Elem y) const noexcept { return mul_[x * n_ + y]; }
  // x\y: the unique z with x*z = y
  Elem ldiv(Elem x, Elem y) const noexcept { return ldiv_[x * n_ + y]; }
  // x/y: the unique z with z*y = x
  Elem rdiv(Elem x, Elem y) const noexcept { return rdiv_[x * n_ + y]; }

  std::span<const Elem> table() const noexcept { return mul_; }
  std::span<const Elem> row(Elem x) const noexcept { return {mul_.data() + x * n_, n_}; }

  friend bool operator==(const LoopTable& a, const LoopTable& b) noexcept {
    return a.n_ == b.n_ && a.mul_ == b.mul_;
  }

 private:
  LoopTable() = default;

  std::size_t n_ = 0;
  Elem neutral_ = 0;
  std::vector<Elem> mul_;
  std::vector<Elem> ldiv_;
  std::vector<Elem> rdiv_;
};

// Cayley-table text format: first line is the order n, then n lines of n
// space-separated indices. Lines starting with '#' are comments.
LoopTable parse_table(std::string_view text);
std::string format_table(const LoopTable& q);

enum class Op { Mul, LDiv, RDiv };
Elem ops(const LoopTable& q, Op kind, Elem x, Elem y);

enum class TranslationKind { L, R, M };
// L_x(y) = xy, R_x(y) = yx, M_x(y) = y\x
Permutation translation(const LoopTable& q, TranslationKind kind, Elem x);

// [y,x] = ((yx)/y)/x
Elem commutator_elt(const LoopTable& q, Elem y, Elem x);
// [x,y,z] = (((xy)z)/(yz))/x
Elem associator_elt(const LoopTable& q, Elem x, Elem y, Elem z);

bool is_commutative(const LoopTable& q);
bool is_associative(const LoopTable& q);
bool is_abelian_group(const LoopTable& q);

// Pairs (a, b) are encoded as a + |q1| * b.
LoopTable direct_product(const LoopTable& q1, const LoopTable& q2);

// G[+] on G x Z_2, with (x, a) encoded as x + |G| * a:
//   (x,a)(y,b) = (x+y, a+b) if a = 0 or b = 0, else (x (+) y, 0).
// `oplus` is a Latin square on G's index set, row-major.
// Throws NotAbelianGroup or NotLatin.
LoopTable g_oplus(const LoopTable& g, std::span<const Elem> oplus);

LoopTable cyclic_group(std::size_t n);
LoopTable trivial_loop();

// Relabels q by the bijection `labels` (old index -> new index).
LoopTable relabel(const LoopTable& q, std::span<const Elem> labels);

// f(xy) = f(x)f(y) for all x, y (f maps indices of `from` to indices of `to`).
bool is_homomorphism(const LoopTable& from, const LoopTable& to, std::span<const Elem> f);

}  // namespace loopcomm
