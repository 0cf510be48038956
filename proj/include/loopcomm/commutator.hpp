#pragma once

#include <optional>
#include <vector>

#include "loopcomm/extensions.hpp"
#include "loopcomm/loop.hpp"
#include "loopcomm/report.hpp"
#include "loopcomm/series_class.hpp"
#include "loopcomm/structure.hpp"

namespace loopcomm {

enum class WordSet {
  TotInner,  // T_x, U_x, L_{x,y}, R_{x,y}, M_{x,y}
  Inner,     // T_x, L_{x,y}, R_{x,y}; diagnostic only
};

// [A,B]_Q: the normal closure of W_u(a) / W_v(a) over the word set, a in A,
// and argument tuples with u_i / v_i in B. Throws Error(NotNormal).
Subloop commutator_subloop(const LoopTable& q, const Subloop& a, const Subloop& b,
                           WordSet words = WordSet::TotInner);

// [A,A]_Q = 1
bool is_abelian_in_A1(const LoopTable& q, const Subloop& a);

// The six conditions of the syntactic abelianness test, each quantified
// over a, b in A and x, u, v in Q with u/v in A.
struct A3Conditions {
  bool inner_automorphic = false;  // (i)   every inner generator restricts to Aut(A)
  bool commute = false;            // (ii)  [a,b] = 1
  bool assoc_abx = false;          // (iii) [a,b,x] = 1
  bool assoc_axb = false;          // (iv)  [a,x,b] = 1
  bool assoc_xab = false;          // (v)   [x,a,b] = 1
  bool assoc_shift = false;        // (vi)  [a,x,u] = [a,x,v]

  bool all() const {
    return inner_automorphic && commute && assoc_abx && assoc_axb && assoc_xab && assoc_shift;
  }
};

A3Conditions abelian_in_conditions(const LoopTable& q, const Subloop& a);
bool is_abelian_in_A3(const LoopTable& q, const Subloop& a);

// The extracted cocycle if Q is an abelian extension of A by Q/A.
std::optional<Cocycle> is_abelian_in_A4(const LoopTable& q, const Subloop& a);

enum class CentralMode { C1, C3, C3prime, C4 };
bool is_central_in(const LoopTable& q, const Subloop& a, CentralMode mode);

struct Series {
  std::vector<Subloop> terms;
  SeriesClass length;
};

// D_0 = Q, D_{i+1} = [D_i, D_i]_Q.
Series congruence_derived_series(const LoopTable& q);

// D_0 = Q, D_{i+1} = least normal subloop N of D_i with D_i / N a
// commutative group (computed inside D_i). Throws CapExceeded above order 64.
Series classical_derived_series(const LoopTable& q);

// Z_0 = 1, Z_{i+1} = preimage of Z(Q / Z_i).
Series upper_central_series(const LoopTable& q);
SeriesClass nilpotency_class_loop(const LoopTable& q);

// Mlt(Q) nilpotent.
bool is_supernilpotent(const LoopTable& q);

// Q is (recursively) a direct product of centrally nilpotent loops of
// prime-power order. Throws CapExceeded above order 64.
bool supernilpotent_crosscheck(const LoopTable& q);

HierarchyReport hierarchy_report(const LoopTable& q);

}  // namespace loopcomm
