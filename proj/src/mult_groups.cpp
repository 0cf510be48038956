#include "loopcomm/mult_groups.hpp"

#include <set>

#include "loopcomm/error.hpp"

namespace loopcomm {

Permutation inner_generator(const LoopTable& q, InnerMap name, std::span<const Elem> args) {
  if (args.size() != arity(name))
    throw Error(ErrorKind::ArityMismatch, "inner map takes " + std::to_string(arity(name)) +
                                              " arguments, got " + std::to_string(args.size()));
  for (Elem a : args)
    if (a >= q.order()) throw Error(ErrorKind::Malformed, "argument out of range");
  using K = TranslationKind;
  auto L = [&](Elem x) { return translation(q, K::L, x); };
  auto R = [&](Elem x) { return translation(q, K::R, x); };
  auto M = [&](Elem x) { return translation(q, K::M, x); };
  const Elem x = args[0];
  switch (name) {
    case InnerMap::T: return R(x).inverse() * L(x);
    case InnerMap::U: return R(x).inverse() * M(x);
    case InnerMap::Lcomm: return L(q.mul(x, args[1])).inverse() * L(x) * L(args[1]);
    case InnerMap::Rcomm: return R(q.mul(args[1], x)).inverse() * R(x) * R(args[1]);
    case InnerMap::Mcomm: return M(q.ldiv(args[1], x)).inverse() * M(x) * M(args[1]);
  }
  return Permutation::identity(q.order());
}

std::vector<Permutation> assoc_generators(const LoopTable& q, AssocGroup which) {
  const std::size_t n = q.order();
  std::vector<Permutation> out;
  std::set<Permutation> seen;
  auto add = [&](Permutation p) {
    if (!p.is_identity() && seen.insert(p).second) out.push_back(std::move(p));
  };
  if (which == AssocGroup::Mlt || which == AssocGroup::TMlt) {
    for (Elem x = 0; x < n; ++x) {
      add(translation(q, TranslationKind::L, x));
      add(translation(q, TranslationKind::R, x));
      if (which == AssocGroup::TMlt) add(translation(q, TranslationKind::M, x));
    }
    return out;
  }
  std::span<const InnerMap> family =
      which == AssocGroup::Inn ? std::span<const InnerMap>(kInnerFamily)
                               : std::span<const InnerMap>(kTotInnerFamily);
  std::vector<Point> img(n);
  for (InnerMap m : family) {
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < (arity(m) == 1 ? 1u : n); ++y) {
        for (Elem z = 0; z < n; ++z) img[z] = apply_inner(q, m, x, y, z);
        add(Permutation::from_images_unchecked(img));
      }
    }
  }
  return out;
}

PermGroup assoc_group(const LoopTable& q, AssocGroup which) {
  return PermGroup(q.order(), assoc_generators(q, which));
}

}  // namespace loopcomm
