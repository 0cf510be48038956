#include "doctest.h"
#include "loopcomm/commutator.hpp"
#include "loopcomm/error.hpp"
#include "loopcomm/mult_groups.hpp"
#include "loopcomm/presets.hpp"
#include "oracles.hpp"
#include "pool.hpp"

using namespace loopcomm;

namespace {

LoopTable s3() {
  return oracle::group_table(oracle::closure(
      3, {Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{0, 1, 2}})}));
}

Subloop as_subloop(const LoopTable& q, const std::vector<Elem>& e) { return Subloop(q.order(), e); }

// Loops with a normal Z4 whose fiber is not abelian-in.
const PresetRun& general_witnesses() {
  static const PresetRun run = run_preset("z4-by-z2-general-nonabelian", 0, 4);
  return run;
}

const LoopTable& order6_witness() {
  static const LoopTable q = run_preset("order6-nilpotent", 0, 0).witnesses.at(0).table;
  return q;
}

bool restriction_is_automorphism(const LoopTable& q, const Subloop& a, const Permutation& p) {
  for (Elem x : a.elements()) {
    if (!a.contains(p(x))) return false;
    for (Elem y : a.elements())
      if (p(q.mul(x, y)) != q.mul(p(x), p(y))) return false;
  }
  return true;
}

std::vector<pool::Entry> small_pool() {
  std::vector<pool::Entry> v = pool::groups();
  auto add = [&](std::vector<pool::Entry> w) { v.insert(v.end(), w.begin(), w.end()); };
  add(pool::small_loops());
  add(pool::exhaustive_extensions());
  add(pool::random_extensions(40));
  add(pool::random_central_extensions(30));
  return v;
}

}  // namespace

TEST_CASE("commutator_subloop examples") {
  for (std::size_t n : {1u, 4u, 6u}) {
    LoopTable z = cyclic_group(n);
    for (const Subloop& a : all_normal_subloops(z))
      for (const Subloop& b : all_normal_subloops(z)) CHECK(commutator_subloop(z, a, b).is_trivial());
  }
  LoopTable q = s3();
  Subloop d = commutator_subloop(q, whole_loop(q), whole_loop(q));
  CHECK(d.size() == 3);
  CHECK(d == as_subloop(q, oracle::group_commutator(q, {0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5})));

  Elem t = 1;
  while (q.mul(t, t) != q.neutral()) ++t;
  Subloop not_normal = subloop_generated(q, std::vector<Elem>{t});
  try {
    commutator_subloop(q, not_normal, whole_loop(q));
    FAIL("expected NotNormal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotNormal);
  }
  CHECK_THROWS_AS(is_abelian_in_A1(q, not_normal), Error);
  CHECK_THROWS_AS(is_abelian_in_A3(q, not_normal), Error);
  CHECK_THROWS_AS(is_central_in(q, not_normal, CentralMode::C3), Error);
}

TEST_CASE("commutator_subloop matches the group commutator") {
  for (const auto& e : pool::groups()) {
    if (e.table.order() > 12) continue;
    const LoopTable& g = e.table;
    auto normals = all_normal_subloops(g);
    for (const Subloop& a : normals)
      for (const Subloop& b : normals) {
        std::vector<Elem> av(a.elements().begin(), a.elements().end());
        std::vector<Elem> bv(b.elements().begin(), b.elements().end());
        INFO(e.name);
        CHECK(commutator_subloop(g, a, b) == as_subloop(g, oracle::group_commutator(g, av, bv)));
      }
  }
}

TEST_CASE("abelian-in examples") {
  LoopTable q = s3();
  CHECK(is_abelian_in_A1(q, center_subloop(q)));
  CHECK(is_abelian_in_A3(q, center_subloop(q)));
  CHECK_FALSE(is_abelian_in_A1(q, whole_loop(q)));

  // A non-commutative group with A = Q fails only the commuting condition.
  A3Conditions c = abelian_in_conditions(q, whole_loop(q));
  CHECK(c.inner_automorphic);
  CHECK_FALSE(c.commute);
  CHECK(c.assoc_abx);
  CHECK(c.assoc_axb);
  CHECK(c.assoc_xab);
  CHECK(c.assoc_shift);
  CHECK_FALSE(is_abelian_in_A4(q, whole_loop(q)));

  LoopTable z8 = cyclic_group(8);
  for (const Subloop& a : all_normal_subloops(z8)) {
    CHECK(is_abelian_in_A1(z8, a));
    CHECK(is_abelian_in_A3(z8, a));
    CHECK(is_abelian_in_A4(z8, a).has_value());
  }

  LoopTable prod = direct_product(cyclic_group(3), cyclic_group(2));
  auto cocycle = is_abelian_in_A4(prod, Subloop(6, {0, 1, 2}));
  REQUIRE(cocycle);
  CHECK(*cocycle == trivial_cocycle(cocycle->a, cocycle->f));

  for (const Witness& w : general_witnesses().witnesses) {
    CHECK_FALSE(is_abelian_in_A1(w.table, w.fiber));
    CHECK_FALSE(is_abelian_in_A3(w.table, w.fiber));
    CHECK_FALSE(is_abelian_in_A4(w.table, w.fiber).has_value());
  }
}

TEST_CASE("abelian-in characterizations agree on a pool sample") {
  for (const auto& e : small_pool()) {
    for (const Subloop& a : all_normal_subloops(e.table)) {
      const bool a1 = is_abelian_in_A1(e.table, a);
      INFO(e.name, " fiber ", a.to_string());
      CHECK(a1 == is_abelian_in_A3(e.table, a));
      CHECK(a1 == is_abelian_in_A4(e.table, a).has_value());
      if (!a1) continue;
      // Abelian-in fibers are commutative groups.
      CHECK(is_abelian_group(as_loop(e.table, a).table));
      // Tot-inner generators restrict to automorphisms.
      for (Permutation p : assoc_generators(e.table, AssocGroup::TInn))
        CHECK(restriction_is_automorphism(e.table, a, p));
    }
  }
}

TEST_CASE("central-in examples and agreement") {
  constexpr CentralMode modes[] = {CentralMode::C1, CentralMode::C3, CentralMode::C3prime, CentralMode::C4};
  LoopTable q = s3();
  Subloop a3 = commutator_subloop(q, whole_loop(q), whole_loop(q));
  for (CentralMode m : modes) {
    CHECK_FALSE(is_central_in(q, a3, m));
    CHECK(is_central_in(q, trivial_subloop(q), m));
    CHECK(is_central_in(q, center_subloop(q), m));
  }
  for (const auto& e : small_pool()) {
    const Subloop z = center_subloop(e.table);
    for (const Subloop& a : all_normal_subloops(e.table)) {
      const bool c1 = is_central_in(e.table, a, CentralMode::C1);
      INFO(e.name, " fiber ", a.to_string());
      for (CentralMode m : modes) CHECK(is_central_in(e.table, a, m) == c1);
      CHECK(c1 == a.is_subset_of(z));
      if (c1) CHECK(is_abelian_in_A1(e.table, a));
    }
  }
}

TEST_CASE("series examples") {
  LoopTable q = s3();
  Series cong = congruence_derived_series(q);
  CHECK(cong.length == SeriesClass::finite(2));
  REQUIRE(cong.terms.size() == 3);
  CHECK(cong.terms[1].size() == 3);
  CHECK(cong.terms[2].is_trivial());
  CHECK(classical_derived_series(q).length == SeriesClass::finite(2));
  CHECK(nilpotency_class_loop(q).is_infinite());

  CHECK(congruence_derived_series(trivial_loop()).length == SeriesClass::finite(0));
  CHECK(classical_derived_series(trivial_loop()).length == SeriesClass::finite(0));
  CHECK(nilpotency_class_loop(trivial_loop()) == SeriesClass::finite(0));
  CHECK(nilpotency_class_loop(cyclic_group(6)) == SeriesClass::finite(1));
  CHECK(congruence_derived_series(cyclic_group(6)).length == SeriesClass::finite(1));

  CHECK(nilpotency_class_loop(order6_witness()) == SeriesClass::finite(2));

  for (const Witness& w : general_witnesses().witnesses) {
    CHECK(congruence_derived_series(w.table).length.is_infinite());
    CHECK(classical_derived_series(w.table).length.is_finite());
  }
}

TEST_CASE("series agree with group oracles") {
  for (const auto& e : pool::groups()) {
    INFO(e.name);
    auto len = oracle::group_derived_length(e.table);
    auto cls = oracle::group_nilpotency_class(e.table);
    auto as_class = [](std::optional<unsigned> v) {
      return v ? SeriesClass::finite(*v) : SeriesClass::infinite();
    };
    CHECK(congruence_derived_series(e.table).length == as_class(len));
    CHECK(classical_derived_series(e.table).length == as_class(len));
    CHECK(nilpotency_class_loop(e.table) == as_class(cls));
  }
}

TEST_CASE("series consistency on the pool sample") {
  for (const auto& e : small_pool()) {
    INFO(e.name);
    SeriesClass cong = congruence_derived_series(e.table).length;
    SeriesClass classical = classical_derived_series(e.table).length;
    CHECK(classical <= cong);
    if (nilpotency_class_loop(e.table).is_finite()) CHECK(cong.is_finite());
  }
}

TEST_CASE("supernilpotence examples") {
  for (std::size_t n : {6u, 8u}) {
    CHECK(is_supernilpotent(cyclic_group(n)));
    CHECK(supernilpotent_crosscheck(cyclic_group(n)));
  }
  CHECK_FALSE(is_supernilpotent(order6_witness()));
  CHECK_FALSE(supernilpotent_crosscheck(order6_witness()));
  CHECK_FALSE(is_supernilpotent(s3()));
  CHECK_FALSE(supernilpotent_crosscheck(s3()));
  for (const auto& e : small_pool()) {
    INFO(e.name);
    CHECK(is_supernilpotent(e.table) == supernilpotent_crosscheck(e.table));
  }
}

TEST_CASE("hierarchy_report examples") {
  HierarchyReport z2 = hierarchy_report(cyclic_group(2));
  CHECK(z2.order == 2);
  CHECK(z2.commutative);
  CHECK(z2.associative);
  CHECK(z2.center_size == 2);
  CHECK(z2.nilpotency_class == SeriesClass::finite(1));
  CHECK(z2.congruence_solvability_class == SeriesClass::finite(1));
  CHECK(z2.classical_solvability_class == SeriesClass::finite(1));
  CHECK(z2.supernilpotent);
  CHECK(z2.mlt_order == 2);
  CHECK(z2.inn_order == 1);
  CHECK(z2.inn_solvable_class == SeriesClass::finite(0));

  HierarchyReport r = hierarchy_report(s3());
  CHECK(r.nilpotency_class.is_infinite());
  CHECK(r.congruence_solvability_class == SeriesClass::finite(2));
  CHECK(r.classical_solvability_class == SeriesClass::finite(2));
  CHECK(r.inn_solvable_class == SeriesClass::finite(2));
  CHECK(r.inn_order == 6);
  CHECK(r.mlt_order == 36);
  CHECK_FALSE(r.supernilpotent);

  for (const auto& e : small_pool()) {
    HierarchyReport h = hierarchy_report(e.table);
    INFO(e.name);
    CHECK(h.consistent());
    CHECK(report_from_fields(report_fields(h)) == h);
  }
}
