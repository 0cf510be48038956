#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// goes through the stabilizer chain or the library's closure routines.

#include <deque>
#include <set>
#include <vector>

#include "loopcomm/permutation.hpp"

namespace oracle {

using loopcomm::Permutation;

// Every element of <gens> by breadth-first closure.
inline std::set<Permutation> closure(std::size_t degree, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::deque<Permutation> queue{Permutation::identity(degree)};
  while (!queue.empty()) {
    Permutation p = queue.front();
    queue.pop_front();
    for (const Permutation& g : gens) {
      Permutation q = g * p;
      if (seen.insert(q).second) queue.push_back(q);
    }
  }
  return seen;
}

// Subgroup generated by every commutator of elements of the two sets.
inline std::set<Permutation> commutator_closure(std::size_t degree,
                                                const std::set<Permutation>& a,
                                                const std::set<Permutation>& b) {
  std::set<Permutation> comms;
  for (const auto& x : a)
    for (const auto& y : b) comms.insert(loopcomm::commutator(x, y));
  return closure(degree, {comms.begin(), comms.end()});
}

}  // namespace oracle

// ---- loop-level references ----

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>

#include "loopcomm/loop.hpp"

namespace oracle {

using loopcomm::Elem;
using loopcomm::LoopTable;

// Cayley table of a permutation group, elements numbered in sorted order (so
// the identity is 0).
inline LoopTable group_table(const std::set<Permutation>& elements) {
  std::vector<Permutation> list(elements.begin(), elements.end());
  std::map<Permutation, Elem> index;
  for (Elem i = 0; i < list.size(); ++i) index.emplace(list[i], i);
  const std::size_t n = list.size();
  std::vector<Elem> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = index.at(list[i] * list[j]);
  return LoopTable::from_table(n, std::move(t));
}

inline Elem mul(const LoopTable& q, Elem x, Elem y) { return q.table()[x * q.order() + y]; }

// x\y and y/x by scanning the table.
inline Elem ldiv(const LoopTable& q, Elem x, Elem y) {
  for (Elem z = 0; z < q.order(); ++z)
    if (mul(q, x, z) == y) return z;
  return ~Elem{0};
}
inline Elem rdiv(const LoopTable& q, Elem y, Elem x) {
  for (Elem z = 0; z < q.order(); ++z)
    if (mul(q, z, x) == y) return z;
  return ~Elem{0};
}

// Closed under the three operations and containing the neutral element.
inline bool is_subloop(const LoopTable& q, const std::vector<Elem>& s) {
  std::vector<bool> in(q.order(), false);
  for (Elem e : s) in[e] = true;
  if (!in[q.neutral()]) return false;
  for (Elem x : s)
    for (Elem y : s)
      if (!in[mul(q, x, y)] || !in[ldiv(q, x, y)] || !in[rdiv(q, x, y)]) return false;
  return true;
}

// Normality by the coset identities xS = Sx, (xS)y = x(Sy), x(yS) = (xy)S,
// (Sx)y = S(xy) as sets.
inline bool is_normal_by_cosets(const LoopTable& q, const std::vector<Elem>& s) {
  auto as_set = [](std::vector<Elem> v) { return std::set<Elem>(v.begin(), v.end()); };
  for (Elem x = 0; x < q.order(); ++x) {
    std::vector<Elem> xs, sx;
    for (Elem a : s) {
      xs.push_back(mul(q, x, a));
      sx.push_back(mul(q, a, x));
    }
    if (as_set(xs) != as_set(sx)) return false;
    for (Elem y = 0; y < q.order(); ++y) {
      std::vector<Elem> l1, l2, r1, r2, m1, m2;
      for (Elem a : s) {
        l1.push_back(mul(q, mul(q, x, a), y));
        l2.push_back(mul(q, x, mul(q, a, y)));
        r1.push_back(mul(q, x, mul(q, y, a)));
        r2.push_back(mul(q, mul(q, x, y), a));
        m1.push_back(mul(q, mul(q, a, x), y));
        m2.push_back(mul(q, a, mul(q, x, y)));
      }
      if (as_set(l1) != as_set(l2) || as_set(r1) != as_set(r2) || as_set(m1) != as_set(m2))
        return false;
    }
  }
  return true;
}

// Every normal subloop by subset enumeration (order <= 16).
inline std::vector<std::vector<Elem>> normal_subloops(const LoopTable& q) {
  std::vector<std::vector<Elem>> out;
  const std::size_t n = q.order();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> q.neutral() & 1)) continue;
    std::vector<Elem> s;
    for (Elem e = 0; e < n; ++e)
      if (mask >> e & 1) s.push_back(e);
    if (is_subloop(q, s) && is_normal_by_cosets(q, s)) out.push_back(s);
  }
  return out;
}

// Elements that commute and associate with everything.
inline std::vector<Elem> center(const LoopTable& q) {
  std::vector<Elem> out;
  const std::size_t n = q.order();
  for (Elem a = 0; a < n; ++a) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) {
      ok = mul(q, a, x) == mul(q, x, a);
      for (Elem y = 0; y < n && ok; ++y)
        ok = mul(q, mul(q, a, x), y) == mul(q, a, mul(q, x, y)) &&
             mul(q, mul(q, x, a), y) == mul(q, x, mul(q, a, y)) &&
             mul(q, mul(q, x, y), a) == mul(q, x, mul(q, y, a));
    }
    if (ok) out.push_back(a);
  }
  return out;
}

// For a group table: the subgroup generated by all x^-1 y^-1 x y.
inline std::vector<Elem> group_commutator(const LoopTable& g, const std::vector<Elem>& a,
                                          const std::vector<Elem>& b) {
  const Elem e = g.neutral();
  auto inv = [&](Elem x) { return ldiv(g, x, e); };
  std::set<Elem> s{e};
  for (Elem x : a)
    for (Elem y : b) s.insert(mul(g, mul(g, inv(x), inv(y)), mul(g, x, y)));
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Elem> cur(s.begin(), s.end());
    for (Elem x : cur)
      for (Elem y : cur) grew |= s.insert(mul(g, x, y)).second;
  }
  return {s.begin(), s.end()};
}

// Group derived length and nilpotency class from element sets (groups only).
inline std::optional<unsigned> group_derived_length(const LoopTable& g) {
  std::vector<Elem> cur(g.order());
  std::iota(cur.begin(), cur.end(), Elem{0});
  for (unsigned i = 0;; ++i) {
    if (cur.size() == 1) return i;
    auto next = group_commutator(g, cur, cur);
    if (next.size() == cur.size()) return std::nullopt;
    cur = next;
  }
}

inline std::optional<unsigned> group_nilpotency_class(const LoopTable& g) {
  std::vector<Elem> all(g.order()), cur(g.order());
  std::iota(all.begin(), all.end(), Elem{0});
  cur = all;
  for (unsigned i = 0;; ++i) {
    if (cur.size() == 1) return i;
    auto next = group_commutator(g, cur, all);
    if (next.size() == cur.size()) return std::nullopt;
    cur = next;
  }
}

// Brute-force isomorphism test for order <= 8.
inline bool isomorphic_brute(const LoopTable& a, const LoopTable& b) {
  if (a.order() != b.order()) return false;
  std::vector<Elem> f(a.order());
  std::iota(f.begin(), f.end(), Elem{0});
  do {
    bool ok = true;
    for (Elem x = 0; x < a.order() && ok; ++x)
      for (Elem y = 0; y < a.order() && ok; ++y) ok = f[mul(a, x, y)] == mul(b, f[x], f[y]);
    if (ok) return true;
  } while (std::next_permutation(f.begin(), f.end()));
  return false;
}

// Loops on {0..n-1} with neutral 0 (reduced Latin squares), lexicographic.
inline std::vector<LoopTable> reduced_latin_loops(std::size_t n) {
  std::vector<LoopTable> out;
  std::vector<Elem> t(n * n);
  for (Elem i = 0; i < n; ++i) t[i] = t[i * n] = i;
  // row[r][v]: value v already used in row r; col likewise.
  std::vector<std::vector<bool>> row(n, std::vector<bool>(n)), col(n, std::vector<bool>(n));
  for (Elem i = 0; i < n; ++i) row[i][i] = col[i][i] = true;
  std::function<void(std::size_t)> fill = [&](std::size_t cell) {
    if (cell == n * n) {
      out.push_back(LoopTable::from_table(n, t));
      return;
    }
    const std::size_t r = cell / n, c = cell % n;
    if (r == 0 || c == 0) return fill(cell + 1);
    for (Elem v = 0; v < n; ++v) {
      if (row[r][v] || col[c][v]) continue;
      row[r][v] = col[c][v] = true;
      t[cell] = v;
      fill(cell + 1);
      row[r][v] = col[c][v] = false;
    }
  };
  fill(0);
  return out;
}

}  // namespace oracle
