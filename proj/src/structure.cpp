#include "loopcomm/structure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "loopcomm/error.hpp"
#include "loopcomm/kernels.hpp"
#include "loopcomm/mult_groups.hpp"

namespace loopcomm {

Subloop::Subloop(std::size_t owner_order, std::vector<Elem> elements)
    : elements_(std::move(elements)), member_(owner_order, 0) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (Elem e : elements_) {
    if (e >= owner_order) throw Error(ErrorKind::Malformed, "subloop element out of range");
    member_[e] = 1;
  }
}

bool Subloop::is_subset_of(const Subloop& other) const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](Elem e) { return other.contains(e); });
}

std::string Subloop::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(elements_[i]);
  }
  return s;
}

Subloop trivial_subloop(const LoopTable& q) { return Subloop(q.order(), {q.neutral()}); }

Subloop whole_loop(const LoopTable& q) {
  std::vector<Elem> all(q.order());
  for (Elem i = 0; i < q.order(); ++i) all[i] = i;
  return Subloop(q.order(), std::move(all));
}

Subloop intersection(const Subloop& a, const Subloop& b) {
  std::vector<Elem> out;
  for (Elem e : a.elements())
    if (b.contains(e)) out.push_back(e);
  return Subloop(a.owner_order(), std::move(out));
}

bool is_closed(const LoopTable& q, std::span<const Elem> elements) {
  std::vector<bool> in(q.order(), false);
  for (Elem e : elements) in[e] = true;
  for (Elem x : elements)
    for (Elem y : elements)
      if (!in[q.mul(x, y)] || !in[q.ldiv(x, y)] || !in[q.rdiv(x, y)]) return false;
  return true;
}

namespace {

// Closes `in` (membership flags) under the three operations.
std::vector<Elem> close_subloop(const LoopTable& q, std::vector<bool>& in) {
  std::vector<Elem> elems;
  for (Elem e = 0; e < q.order(); ++e)
    if (in[e]) elems.push_back(e);
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (std::size_t i = 0; i <= k; ++i) {
      Elem a = elems[i], b = elems[k];
      for (Elem c : {q.mul(a, b), q.mul(b, a), q.ldiv(a, b), q.ldiv(b, a), q.rdiv(a, b),
                     q.rdiv(b, a)}) {
        if (!in[c]) {
          in[c] = true;
          elems.push_back(c);
        }
      }
    }
  }
  return elems;
}

bool invariant_under(std::span<const Permutation> gens, const Subloop& a) {
  for (const Permutation& g : gens)
    if (!kernels::maps_into(g.images(), a.membership(), a.elements())) return false;
  return true;
}

Subloop normal_closure_with(const LoopTable& q, std::span<const Permutation> inner,
                            std::span<const Elem> seed) {
  std::vector<bool> in(q.order(), false);
  in[q.neutral()] = true;
  for (Elem e : seed) {
    if (e >= q.order()) throw Error(ErrorKind::Malformed, "seed element out of range");
    in[e] = true;
  }
  for (;;) {
    std::vector<Elem> elems = close_subloop(q, in);
    bool grew = false;
    for (const Permutation& g : inner)
      for (Elem e : elems)
        if (!in[g(e)]) {
          in[g(e)] = true;
          grew = true;
        }
    if (!grew) return Subloop(q.order(), std::move(elems));
  }
}

}  // namespace

Subloop subloop_generated(const LoopTable& q, std::span<const Elem> seed) {
  std::vector<bool> in(q.order(), false);
  in[q.neutral()] = true;
  for (Elem e : seed) {
    if (e >= q.order()) throw Error(ErrorKind::Malformed, "seed element out of range");
    in[e] = true;
  }
  return Subloop(q.order(), close_subloop(q, in));
}

bool is_normal(const LoopTable& q, const Subloop& a) {
  if (a.owner_order() != q.order()) throw Error(ErrorKind::Malformed, "subloop of another loop");
  return invariant_under(assoc_generators(q, AssocGroup::Inn), a);
}

bool is_normal_tot(const LoopTable& q, const Subloop& a) {
  if (a.owner_order() != q.order()) throw Error(ErrorKind::Malformed, "subloop of another loop");
  return invariant_under(assoc_generators(q, AssocGroup::TInn), a);
}

Subloop normal_closure(const LoopTable& q, std::span<const Elem> seed) {
  return normal_closure_with(q, assoc_generators(q, AssocGroup::Inn), seed);
}

Subloop center_subloop(const LoopTable& q) {
  const std::size_t n = q.order();
  const Elem one = q.neutral();
  std::vector<Elem> by_identities;
  for (Elem a = 0; a < n; ++a) {
    bool central = true;
    for (Elem x = 0; x < n && central; ++x) {
      central = commutator_elt(q, a, x) == one;
      for (Elem y = 0; y < n && central; ++y)
        central = associator_elt(q, a, x, y) == one && associator_elt(q, x, a, y) == one &&
                  associator_elt(q, x, y, a) == one;
    }
    if (central) by_identities.push_back(a);
  }

  std::vector<bool> fixed(n, true);
  for (const Permutation& g : assoc_generators(q, AssocGroup::Inn))
    for (Elem a = 0; a < n; ++a)
      if (g(a) != a) fixed[a] = false;
  std::vector<Elem> by_fixed_points;
  for (Elem a = 0; a < n; ++a)
    if (fixed[a]) by_fixed_points.push_back(a);

  if (by_identities != by_fixed_points)
    throw std::logic_error("center: identity scan and inner fixed points disagree");
  return Subloop(n, std::move(by_identities));
}

std::vector<Subloop> all_normal_subloops(const LoopTable& q) {
  if (q.order() > kEnumerationOrderCap)
    throw Error(ErrorKind::CapExceeded, "normal subloop enumeration is limited to order 64");
  const auto inner = assoc_generators(q, AssocGroup::Inn);
  std::set<Subloop> found{trivial_subloop(q)};
  for (Elem x = 0; x < q.order(); ++x) {
    Elem seed[] = {x};
    found.insert(normal_closure_with(q, inner, seed));
  }
  // Join closure: the join of two normal subloops is the normal closure of
  // their union.
  std::vector<Subloop> items(found.begin(), found.end());
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<Elem> uni(items[i].elements().begin(), items[i].elements().end());
      uni.insert(uni.end(), items[j].elements().begin(), items[j].elements().end());
      Subloop join = normal_closure_with(q, inner, uni);
      if (found.insert(join).second) items.push_back(std::move(join));
    }
  }
  return {found.begin(), found.end()};
}

Quotient quotient(const LoopTable& q, const Subloop& a) {
  if (!is_normal(q, a)) throw Error(ErrorKind::NotNormal, "quotient by a non-normal subloop");
  const std::size_t n = q.order();
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> proj(n, kUnset), reps;
  for (Elem x = 0; x < n; ++x) {
    if (proj[x] != kUnset) continue;
    Elem id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem e : a.elements()) proj[q.mul(e, x)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<Elem> t(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) t[i * m + j] = proj[q.mul(reps[i], reps[j])];
  return {LoopTable::from_table(m, std::move(t)), std::move(proj), std::move(reps)};
}

Subloop preimage(const Quotient& quot, const Subloop& s) {
  std::vector<Elem> out;
  for (Elem x = 0; x < quot.projection.size(); ++x)
    if (s.contains(quot.projection[x])) out.push_back(x);
  return Subloop(quot.projection.size(), std::move(out));
}

SubloopTable as_loop(const LoopTable& q, const Subloop& a) {
  const std::size_t m = a.size();
  std::vector<Elem> local(q.order(), 0);
  for (std::size_t i = 0; i < m; ++i) local[a.elements()[i]] = static_cast<Elem>(i);
  std::vector<Elem> t(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Elem p = q.mul(a.elements()[i], a.elements()[j]);
      if (!a.contains(p)) throw Error(ErrorKind::Malformed, "set is not closed under multiplication");
      t[i * m + j] = local[p];
    }
  return {LoopTable::from_table(m, std::move(t)),
          std::vector<Elem>(a.elements().begin(), a.elements().end())};
}

std::vector<std::pair<Subloop, Subloop>> direct_decomposition(const LoopTable& q) {
  const auto normals = all_normal_subloops(q);
  std::vector<std::pair<Subloop, Subloop>> out;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    const Subloop& a = normals[i];
    if (a.is_trivial()) continue;
    for (std::size_t j = i + 1; j < normals.size(); ++j) {
      const Subloop& b = normals[j];
      if (b.is_trivial() || a.size() * b.size() != q.order()) continue;
      if (intersection(a, b).size() != 1) continue;
      auto ta = as_loop(q, a), tb = as_loop(q, b);
      LoopTable prod = direct_product(ta.table, tb.table);
      std::vector<Elem> f(prod.order());
      std::vector<bool> hit(q.order(), false);
      bool bijective = true;
      for (std::size_t u = 0; u < prod.order(); ++u) {
        f[u] = q.mul(ta.embedding[u % a.size()], tb.embedding[u / a.size()]);
        if (hit[f[u]]) bijective = false;
        hit[f[u]] = true;
      }
      if (bijective && is_homomorphism(prod, q, f)) out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace loopcomm
