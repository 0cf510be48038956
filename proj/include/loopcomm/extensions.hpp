#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loopcomm/loop.hpp"
#include "loopcomm/permutation.hpp"
#include "loopcomm/structure.hpp"

namespace loopcomm {

// A commutative group (A, +, -, 0) given by its table; 0 is the table's
// neutral element, which need not be index 0.
class AbelianGroupTable {
 public:
  // Throws Error(NotAbelianGroup).
  explicit AbelianGroupTable(LoopTable table);

  const LoopTable& table() const noexcept { return table_; }
  std::size_t size() const noexcept { return table_.order(); }
  Elem zero() const noexcept { return table_.neutral(); }
  Elem add(Elem a, Elem b) const noexcept { return table_.mul(a, b); }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return table_.mul(a, neg_[b]); }

  friend bool operator==(const AbelianGroupTable& a, const AbelianGroupTable& b) noexcept {
    return a.table_ == b.table_;
  }

 private:
  LoopTable table_;
  std::vector<Elem> neg_;
};

// Z_{n1} x Z_{n2} x ... with the first factor varying fastest.
AbelianGroupTable abelian_group(std::initializer_list<std::size_t> cyclic_factors);

inline constexpr std::size_t kAutomorphismOrderCap = 10;

// Additive permutations of A fixing 0, in lexicographic image order.
// Throws Error(CapExceeded) when |A| > 10.
std::vector<Permutation> automorphisms(const AbelianGroupTable& a);

bool is_automorphism(const AbelianGroupTable& a, const Permutation& p);

// Gamma = (phi, psi, theta) over A and F. Cells are indexed x * |F| + y.
struct Cocycle {
  AbelianGroupTable a;
  LoopTable f;
  std::vector<Permutation> phi;
  std::vector<Permutation> psi;
  std::vector<Elem> theta;

  std::size_t cell(Elem x, Elem y) const noexcept { return x * f.order() + y; }
  const Permutation& phi_at(Elem x, Elem y) const { return phi[cell(x, y)]; }
  const Permutation& psi_at(Elem x, Elem y) const { return psi[cell(x, y)]; }
  Elem theta_at(Elem x, Elem y) const { return theta[cell(x, y)]; }

  // (a, x) is encoded as a + |A| * x.
  Elem pair_index(Elem a_elem, Elem x) const noexcept {
    return static_cast<Elem>(a_elem + a.size() * x);
  }
  Elem fiber_part(Elem index) const noexcept { return static_cast<Elem>(index % a.size()); }
  Elem base_part(Elem index) const noexcept { return static_cast<Elem>(index / a.size()); }

  friend bool operator==(const Cocycle&, const Cocycle&) = default;
};

// phi = psi = id, theta = 0.
Cocycle trivial_cocycle(const AbelianGroupTable& a, const LoopTable& f);

struct Diagnostic {
  std::string condition;  // "phi border", "psi border", "theta border", "phi automorphism", ...
  Elem x;
  Elem y;

  std::string to_string() const;
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

// Violations of the loop-cocycle conditions (and of the automorphism
// requirement on phi, psi); empty iff Gamma is a loop cocycle.
std::vector<Diagnostic> validate_cocycle(const Cocycle& g);

// Row-major table of (a,x)(b,y) = (phi_{x,y}(a) + psi_{x,y}(b) + theta_{x,y}, xy)
// for any cocycle; the result is a quasigroup, not necessarily a loop.
std::vector<Elem> extension_product_table(const Cocycle& g);

// The abelian extension of A by F over a loop cocycle.
// Throws Error(CocycleInvalid) listing the diagnostics.
LoopTable build_extension(const Cocycle& g);

// The fiber A x {1} of a built extension.
Subloop extension_fiber(const Cocycle& g);

// The neutral element (a, 1) of the extension if the border conditions
//   phi_{y,1} = id = psi_{1,y},  phi_{1,y}(a) + theta_{1,y} = 0 = psi_{y,1}(a) + theta_{y,1}
// hold for all y; nullopt otherwise. The answer is cross-checked against a
// scan of the product table (std::logic_error on disagreement).
std::optional<std::pair<Elem, Elem>> analyze_neutral(const Cocycle& g);

// Shifts the neutral element (a, 1) to (0, 1):
//   theta'_{x,y} = theta_{x,y} + phi_{x,y}(a) + psi_{x,y}(a) - a.
// Throws Error(NotNeutralAt) unless (a, 1) is the neutral element.
Cocycle normalize_cocycle(const Cocycle& g, Elem a);

struct Decomposition {
  Cocycle cocycle;
  std::vector<Elem> transversal;  // F index -> representative in Q
  std::vector<Elem> fiber;        // A index -> element of Q
  // (a, x) -> a * x, indexed by pair_index
  std::vector<Elem> pair_map;
};

// Extracts Gamma from Q and a normal subloop A with the transversal made of
// the neutral element (for A itself) and the least member of every other
// right coset:
//   phi_{x,y} = R_{y,x}|A,  psi_{x,y} = (R_{xy}^-1 L_x R_y)|A,  theta_{x,y} = (xy)/(x o y).
// Returns nullopt if A is not a commutative group, a restriction is not an
// automorphism of A, or (a, x) -> ax fails to be an isomorphism from the
// rebuilt extension onto Q.
std::optional<Decomposition> extract_extension(const LoopTable& q, const Subloop& a);

// Same extraction with the abelian-in hypothesis checked first.
// Throws Error(NotNormal) or Error(NotAbelianIn).
Decomposition decompose_extension(const LoopTable& q, const Subloop& a);

struct MltForm {
  std::vector<Elem> c;                   // c_x
  std::vector<Permutation> gamma_hat;    // gamma_x in Aut(A)
  Permutation base_map;                  // C on F
  bool gamma_hat_identity = false;       // every gamma_x = id
  bool fixes_neutral = false;            // gamma(0, 1) = (0, 1)
  bool predicts_inner = false;           // c_1 = 0 and C(1) = 1
};

// Decomposes gamma(a, x) = (c_x + gamma_x(a), C(x)) on a built extension;
// nullopt if gamma does not permute the fibers or some gamma_x is not an
// automorphism of A.
std::optional<MltForm> mlt_element_form(const Cocycle& g, const Permutation& gamma);

// Cocycle text format (see README): sections A, F, PHI, PSI, THETA.
// PHI/PSI cells are indices into automorphisms(A).
std::string format_cocycle(const Cocycle& g);
Cocycle parse_cocycle(std::string_view text);

}  // namespace loopcomm
