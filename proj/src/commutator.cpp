#include "loopcomm/commutator.hpp"

#include <algorithm>
#include <stdexcept>

#include "loopcomm/error.hpp"
#include "loopcomm/mult_groups.hpp"
#include "loopcomm/perm_group.hpp"

namespace loopcomm {

namespace {

void require_normal(const LoopTable& q, const Subloop& a) {
  if (a.owner_order() != q.order() || !is_normal(q, a))
    throw Error(ErrorKind::NotNormal, "subloop is not normal");
}

// For every v, the elements u != v with u/v in B (the coset B·v minus v).
std::vector<std::vector<Elem>> congruent_classes(const LoopTable& q, const Subloop& b) {
  std::vector<std::vector<Elem>> out(q.order());
  for (Elem v = 0; v < q.order(); ++v)
    for (Elem c : b.elements()) {
      Elem u = q.mul(c, v);
      if (u != v) out[v].push_back(u);
    }
  return out;
}

}  // namespace

// Since the result is normal, u ≡ v (mod it) iff u/v lies in it, so for the
// binary words it is enough to vary one argument at a time:
//   W_{u1,u2}(a) ≡ W_{v1,u2}(a) ≡ W_{v1,v2}(a).
Subloop commutator_subloop(const LoopTable& q, const Subloop& a, const Subloop& b,
                           WordSet words) {
  require_normal(q, a);
  require_normal(q, b);
  const std::size_t n = q.order();
  const auto cls = congruent_classes(q, b);
  std::vector<bool> hit(n, false);
  hit[q.neutral()] = true;
  auto note = [&](Elem x, Elem y) { hit[q.rdiv(x, y)] = true; };

  std::span<const InnerMap> family =
      words == WordSet::TotInner ? std::span<const InnerMap>(kTotInnerFamily)
                                 : std::span<const InnerMap>(kInnerFamily);
  for (InnerMap w : family) {
    for (Elem v = 0; v < n; ++v)
      for (Elem u : cls[v])
        for (Elem e : a.elements()) {
          if (arity(w) == 1) {
            note(apply_inner(q, w, u, 0, e), apply_inner(q, w, v, 0, e));
            continue;
          }
          for (Elem o = 0; o < n; ++o) {
            note(apply_inner(q, w, u, o, e), apply_inner(q, w, v, o, e));
            note(apply_inner(q, w, o, u, e), apply_inner(q, w, o, v, e));
          }
        }
  }
  std::vector<Elem> seed;
  for (Elem e = 0; e < n; ++e)
    if (hit[e]) seed.push_back(e);
  return normal_closure(q, seed);
}

bool is_abelian_in_A1(const LoopTable& q, const Subloop& a) {
  return commutator_subloop(q, a, a).is_trivial();
}

A3Conditions abelian_in_conditions(const LoopTable& q, const Subloop& a) {
  require_normal(q, a);
  const std::size_t n = q.order();
  const Elem one = q.neutral();
  const auto elems = a.elements();
  A3Conditions c;

  c.inner_automorphic = true;
  for (InnerMap w : kInnerFamily) {
    const std::size_t ys = arity(w) == 1 ? 1 : n;
    for (Elem x = 0; x < n && c.inner_automorphic; ++x)
      for (Elem y = 0; y < ys && c.inner_automorphic; ++y)
        for (Elem p : elems) {
          for (Elem r : elems)
            if (apply_inner(q, w, x, y, q.mul(p, r)) !=
                q.mul(apply_inner(q, w, x, y, p), apply_inner(q, w, x, y, r))) {
              c.inner_automorphic = false;
              break;
            }
          if (!c.inner_automorphic) break;
        }
  }

  c.commute = c.assoc_abx = c.assoc_axb = c.assoc_xab = true;
  for (Elem p : elems)
    for (Elem r : elems) {
      if (commutator_elt(q, p, r) != one) c.commute = false;
      for (Elem x = 0; x < n; ++x) {
        if (associator_elt(q, p, r, x) != one) c.assoc_abx = false;
        if (associator_elt(q, p, x, r) != one) c.assoc_axb = false;
        if (associator_elt(q, x, p, r) != one) c.assoc_xab = false;
      }
    }

  c.assoc_shift = true;
  const auto cls = congruent_classes(q, a);
  for (Elem p : elems)
    for (Elem x = 0; x < n && c.assoc_shift; ++x)
      for (Elem v = 0; v < n && c.assoc_shift; ++v) {
        const Elem base = associator_elt(q, p, x, v);
        for (Elem u : cls[v])
          if (associator_elt(q, p, x, u) != base) {
            c.assoc_shift = false;
            break;
          }
      }
  return c;
}

bool is_abelian_in_A3(const LoopTable& q, const Subloop& a) {
  return abelian_in_conditions(q, a).all();
}

std::optional<Cocycle> is_abelian_in_A4(const LoopTable& q, const Subloop& a) {
  require_normal(q, a);
  auto d = extract_extension(q, a);
  if (!d) return std::nullopt;
  return std::move(d->cocycle);
}

bool is_central_in(const LoopTable& q, const Subloop& a, CentralMode mode) {
  require_normal(q, a);
  const std::size_t n = q.order();
  const Elem one = q.neutral();
  switch (mode) {
    case CentralMode::C1:
      return commutator_subloop(q, a, whole_loop(q)).is_trivial();
    case CentralMode::C3:
      for (InnerMap w : kInnerFamily) {
        const std::size_t ys = arity(w) == 1 ? 1 : n;
        for (Elem x = 0; x < n; ++x)
          for (Elem y = 0; y < ys; ++y)
            for (Elem p : a.elements())
              if (apply_inner(q, w, x, y, p) != p) return false;
      }
      return true;
    case CentralMode::C3prime:
      for (Elem p : a.elements())
        for (Elem x = 0; x < n; ++x) {
          if (commutator_elt(q, p, x) != one) return false;
          for (Elem y = 0; y < n; ++y)
            if (associator_elt(q, p, x, y) != one || associator_elt(q, x, p, y) != one ||
                associator_elt(q, x, y, p) != one)
              return false;
        }
      return true;
    case CentralMode::C4: {
      auto d = extract_extension(q, a);
      if (!d) return false;
      auto is_id = [](const Permutation& p) { return p.is_identity(); };
      return std::all_of(d->cocycle.phi.begin(), d->cocycle.phi.end(), is_id) &&
             std::all_of(d->cocycle.psi.begin(), d->cocycle.psi.end(), is_id);
    }
  }
  return false;
}

Series congruence_derived_series(const LoopTable& q) {
  Series s{{whole_loop(q)}, SeriesClass::infinite()};
  for (unsigned i = 0;; ++i) {
    if (s.terms.back().is_trivial()) {
      s.length = SeriesClass::finite(i);
      return s;
    }
    if (i == kSeriesIterationCap) {
      s.length = SeriesClass::infinite(true);
      return s;
    }
    Subloop next = commutator_subloop(q, s.terms.back(), s.terms.back());
    if (next == s.terms.back()) return s;
    s.terms.push_back(std::move(next));
  }
}

namespace {

// Least normal N of q with q/N a commutative group, by two routes: the
// intersection over all_normal_subloops, and the normal closure of all
// commutators and associators.
Subloop derived_subloop(const LoopTable& q) {
  Subloop least = whole_loop(q);
  for (const Subloop& n : all_normal_subloops(q))
    if (is_abelian_group(quotient(q, n).table)) least = intersection(least, n);

  std::vector<Elem> seed;
  for (Elem x = 0; x < q.order(); ++x)
    for (Elem y = 0; y < q.order(); ++y) {
      seed.push_back(commutator_elt(q, x, y));
      for (Elem z = 0; z < q.order(); ++z) seed.push_back(associator_elt(q, x, y, z));
    }
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  if (normal_closure(q, seed) != least)
    throw std::logic_error("derived subloop routes disagree");
  return least;
}

}  // namespace

Series classical_derived_series(const LoopTable& q) {
  if (q.order() > kEnumerationOrderCap)
    throw Error(ErrorKind::CapExceeded, "classical derived series is limited to order 64");
  Series s{{whole_loop(q)}, SeriesClass::infinite()};
  for (unsigned i = 0;; ++i) {
    const Subloop& cur = s.terms.back();
    if (cur.is_trivial()) {
      s.length = SeriesClass::finite(i);
      return s;
    }
    if (i == kSeriesIterationCap) {
      s.length = SeriesClass::infinite(true);
      return s;
    }
    SubloopTable local = as_loop(q, cur);
    Subloop d = derived_subloop(local.table);
    std::vector<Elem> lifted;
    for (Elem e : d.elements()) lifted.push_back(local.embedding[e]);
    Subloop next(q.order(), std::move(lifted));
    if (next == cur) return s;
    s.terms.push_back(std::move(next));
  }
}

Series upper_central_series(const LoopTable& q) {
  Series s{{trivial_subloop(q)}, SeriesClass::infinite()};
  for (unsigned i = 0;; ++i) {
    if (s.terms.back().size() == q.order()) {
      s.length = SeriesClass::finite(i);
      return s;
    }
    if (i == kSeriesIterationCap) {
      s.length = SeriesClass::infinite(true);
      return s;
    }
    Quotient quot = quotient(q, s.terms.back());
    Subloop next = preimage(quot, center_subloop(quot.table));
    if (next == s.terms.back()) return s;
    s.terms.push_back(std::move(next));
  }
}

SeriesClass nilpotency_class_loop(const LoopTable& q) { return upper_central_series(q).length; }

bool is_supernilpotent(const LoopTable& q) {
  return nilpotency_class_group(assoc_group(q, AssocGroup::Mlt)).is_finite();
}

namespace {

bool is_prime_power(std::size_t n) {
  if (n < 2) return false;
  std::size_t p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

bool supernilpotent_crosscheck(const LoopTable& q) {
  if (q.order() > kEnumerationOrderCap)
    throw Error(ErrorKind::CapExceeded, "supernilpotence cross-check is limited to order 64");
  if (q.order() == 1) return true;
  if (is_prime_power(q.order())) return nilpotency_class_loop(q).is_finite();
  for (const auto& [a, b] : direct_decomposition(q))
    if (supernilpotent_crosscheck(as_loop(q, a).table) &&
        supernilpotent_crosscheck(as_loop(q, b).table))
      return true;
  return false;
}

HierarchyReport hierarchy_report(const LoopTable& q) {
  HierarchyReport r;
  r.order = q.order();
  r.commutative = is_commutative(q);
  r.associative = is_associative(q);
  r.center_size = center_subloop(q).size();
  r.nilpotency_class = nilpotency_class_loop(q);
  r.congruence_solvability_class = congruence_derived_series(q).length;
  r.classical_solvability_class = classical_derived_series(q).length;
  const PermGroup mlt = assoc_group(q, AssocGroup::Mlt);
  r.mlt_order = mlt.order();
  r.mlt_solvable_class = solvable_class(mlt);
  r.mlt_nilpotency_class = nilpotency_class_group(mlt);
  r.supernilpotent = r.mlt_nilpotency_class.is_finite();
  const PermGroup inn = assoc_group(q, AssocGroup::Inn);
  r.inn_order = inn.order();
  r.inn_solvable_class = solvable_class(inn);
  return r;
}

}  // namespace loopcomm
