#pragma once

#include <span>
#include <vector>

#include "loopcomm/loop.hpp"
#include "loopcomm/perm_group.hpp"

namespace loopcomm {

// The standard (tot-)inner generator families:
//   T_x = R_x^-1 L_x           U_x = R_x^-1 M_x
//   L_{x,y} = L_{xy}^-1 L_x L_y
//   R_{x,y} = R_{yx}^-1 R_x R_y
//   M_{x,y} = M_{y\x}^-1 M_x M_y
enum class InnerMap { T, U, Lcomm, Rcomm, Mcomm };

constexpr std::size_t arity(InnerMap m) noexcept {
  return (m == InnerMap::T || m == InnerMap::U) ? 1 : 2;
}

// Built by composing translations. Throws Error(ArityMismatch).
Permutation inner_generator(const LoopTable& q, InnerMap name, std::span<const Elem> args);

// Closed-form pointwise value of the same map at z (y is ignored for unary maps):
//   T_x(z) = (xz)/x                 U_x(z) = (z\x)/x
//   L_{x,y}(z) = (xy)\(x(yz))       R_{x,y}(z) = ((zy)x)/(yx)
//   M_{x,y}(z) = (y\x)/((z\y)\x)
inline Elem apply_inner(const LoopTable& q, InnerMap name, Elem x, Elem y, Elem z) noexcept {
  switch (name) {
    case InnerMap::T: return q.rdiv(q.mul(x, z), x);
    case InnerMap::U: return q.rdiv(q.ldiv(z, x), x);
    case InnerMap::Lcomm: return q.ldiv(q.mul(x, y), q.mul(x, q.mul(y, z)));
    case InnerMap::Rcomm: return q.rdiv(q.mul(q.mul(z, y), x), q.mul(y, x));
    case InnerMap::Mcomm: return q.rdiv(q.ldiv(y, x), q.ldiv(q.ldiv(z, y), x));
  }
  return z;
}

inline constexpr InnerMap kInnerFamily[] = {InnerMap::T, InnerMap::Lcomm, InnerMap::Rcomm};
inline constexpr InnerMap kTotInnerFamily[] = {InnerMap::T, InnerMap::U, InnerMap::Lcomm,
                                               InnerMap::Rcomm, InnerMap::Mcomm};

enum class AssocGroup { Mlt, Inn, TMlt, TInn };

// Generators of the associated group over all argument tuples, identities
// and duplicates dropped, in a fixed order.
std::vector<Permutation> assoc_generators(const LoopTable& q, AssocGroup which);

PermGroup assoc_group(const LoopTable& q, AssocGroup which);

}  // namespace loopcomm
