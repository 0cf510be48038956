#include "loopcomm/presets.hpp"

#include <algorithm>

#include "loopcomm/commutator.hpp"
#include "loopcomm/error.hpp"
#include "loopcomm/mult_groups.hpp"
#include "loopcomm/perm_group.hpp"
#include "loopcomm/search.hpp"

namespace loopcomm {

const std::vector<PresetInfo>& preset_catalog() {
  static const std::vector<PresetInfo> list = {
      {"z4-by-z2-nonabelian",
       "loop cocycles Z4 by Z2: Mlt solvable, classically solvable, not congruence solvable",
       false, 0},
      {"order6-nilpotent", "central cocycles Z2 by Z3: nonassociative, nilpotent, not supernilpotent",
       false, 0},
      {"z2cubed-nonsolvable-inn",
       "random loop cocycles Z2^3 by Z2: congruence solvable with non-solvable Inn", true, 100000},
      {"g-oplus-z2sq-not-i", "G[+] over Z2^2: fiber passes (ii)-(vi) of the A3 test, fails (i)",
       false, 0},
      {"g-oplus-z4-not-vi", "G[+] over Z4: fiber passes (i)-(v) of the A3 test, fails (vi)", false,
       0},
      {"z4-order8-not-iii", "order 8 loops over a normal Z4: passes (ii),(iv),(v),(vi), fails (iii)",
       false, 0},
      {"z4-order8-not-v", "order 8 loops over a normal Z4: passes (ii),(iii),(iv),(vi), fails (v)",
       false, 0},
      {"z4-by-z2-general-nonabelian",
       "order 8 loops over a normal Z4 (not cocycle extensions): Z4 not abelian in Q, Mlt "
       "solvable, classically but not congruence solvable",
       false, 0},
      {"g-oplus-z2cubed-not-i",
       "G[+] over Z2^3 with random group isotopes as the quasigroup: passes (ii)-(vi), fails (i)",
       true, 10000},
      {"inn-solvable-mlt-nonsolvable",
       "random loop cocycles Z2^3 by Z2: Inn solvable but Mlt not (open problem hunt)", true,
       100000},
  };
  return list;
}

namespace {

constexpr std::size_t kRandomHitLimit = 4;
constexpr std::size_t kPartialA3HitLimit = 1;

Subloop prefix_fiber(std::size_t order, std::size_t size) {
  std::vector<Elem> e(size);
  for (Elem i = 0; i < size; ++i) e[i] = i;
  return Subloop(order, std::move(e));
}

std::string conditions_string(const A3Conditions& c) {
  const std::pair<const char*, bool> parts[] = {
      {"i", c.inner_automorphic}, {"ii", c.commute},   {"iii", c.assoc_abx},
      {"iv", c.assoc_axb},        {"v", c.assoc_xab},  {"vi", c.assoc_shift}};
  std::string pass, fail;
  for (auto [name, ok] : parts) {
    std::string& s = ok ? pass : fail;
    if (!s.empty()) s += ',';
    s += name;
  }
  return "pass=" + (pass.empty() ? std::string("-") : pass) +
         " fail=" + (fail.empty() ? std::string("-") : fail);
}

std::string head(std::uint64_t k, const LoopTable& q) {
  return "candidate=" + std::to_string(k) + " order=" + std::to_string(q.order());
}

PresetRun cocycle_preset(std::string_view name, SearchSpace space, SearchOptions opts,
                         const CocyclePredicate& pred,
                         const std::function<std::string(const LoopTable&)>& verdict) {
  PresetRun run{std::string(name), 0, {}};
  run.candidates = opts.mode == SearchOptions::Mode::Exhaustive ? exhaustive_space_size(space)
                                                                : opts.budget;
  if (opts.mode == SearchOptions::Mode::Exhaustive && opts.budget)
    run.candidates = std::min(run.candidates, opts.budget);
  for (SearchHit& h : search_cocycles(space, pred, opts)) {
    if (opts.mode == SearchOptions::Mode::Exhaustive && h.candidate >= run.candidates) break;
    Subloop fiber = extension_fiber(h.cocycle);
    std::string v = head(h.candidate, h.table) + " " + verdict(h.table);
    run.witnesses.push_back(
        Witness{h.candidate, std::move(h.table), std::move(h.cocycle), std::move(fiber), v});
  }
  return run;
}

PresetRun g_oplus_preset(std::string_view name, const LoopTable& g,
                         bool (*accept)(const A3Conditions&), std::uint64_t budget,
                         unsigned workers) {
  const auto squares = all_latin_squares(g.order());
  const std::uint64_t total = budget ? std::min<std::uint64_t>(budget, squares.size()) : squares.size();
  const std::size_t n = 2 * g.order();
  auto test = [&](std::uint64_t k) {
    LoopTable q = g_oplus(g, squares[k]);
    return accept(abelian_in_conditions(q, prefix_fiber(n, g.order())));
  };
  PresetRun run{std::string(name), total, {}};
  for (std::uint64_t k : scan_candidates(total, test, workers)) {
    LoopTable q = g_oplus(g, squares[k]);
    Subloop fiber = prefix_fiber(n, g.order());
    std::string v = head(k, q) + " " + conditions_string(abelian_in_conditions(q, fiber));
    run.witnesses.push_back(Witness{k, std::move(q), std::nullopt, std::move(fiber), v});
  }
  return run;
}

// Loops on Z4 x Z2, (x,a)(y,b) = (x *_{ab} y, a+b), with *_{00} the group
// addition, *_{01} having identity row 0 and *_{10} identity column 0. The
// projection onto Z2 is a homomorphism, so Z4 x 0 is normal.
class Z4Order8Space {
 public:
  Z4Order8Space() : squares_(all_latin_squares(4)) {
    for (std::size_t i = 0; i < squares_.size(); ++i) {
      const auto& s = squares_[i];
      if (s[0] == 0 && s[1] == 1 && s[2] == 2 && s[3] == 3) left_.push_back(i);
      if (s[0] == 0 && s[4] == 1 && s[8] == 2 && s[12] == 3) right_.push_back(i);
    }
  }

  std::uint64_t size() const { return left_.size() * right_.size() * squares_.size(); }

  LoopTable loop(std::uint64_t k) const {
    const auto& s11 = squares_[k % squares_.size()];
    k /= squares_.size();
    const auto& s10 = squares_[right_[k % right_.size()]];
    const auto& s01 = squares_[left_[k / right_.size()]];
    std::vector<Elem> t(64);
    for (Elem u = 0; u < 8; ++u)
      for (Elem v = 0; v < 8; ++v) {
        const Elem x = u % 4, a = u / 4, y = v % 4, b = v / 4;
        Elem z;
        if (!a && !b) z = (x + y) % 4;
        else if (!a) z = s01[x * 4 + y];
        else if (!b) z = s10[x * 4 + y];
        else z = s11[x * 4 + y];
        t[u * 8 + v] = z + 4 * (a ^ b);
      }
    return LoopTable::from_table(8, std::move(t));
  }

 private:
  std::vector<std::vector<Elem>> squares_;
  std::vector<std::size_t> left_, right_;
};

PresetRun z4_order8_preset(std::string_view name, bool (*accept)(const A3Conditions&),
                           std::uint64_t budget, unsigned workers) {
  const Z4Order8Space space;
  const std::uint64_t total = budget ? std::min(budget, space.size()) : space.size();
  const Subloop fiber = prefix_fiber(8, 4);
  auto test = [&](std::uint64_t k) { return accept(abelian_in_conditions(space.loop(k), fiber)); };
  PresetRun run{std::string(name), total, {}};
  for (std::uint64_t k : scan_candidates(total, test, workers, kPartialA3HitLimit)) {
    LoopTable q = space.loop(k);
    std::string v = head(k, q) + " " + conditions_string(abelian_in_conditions(q, fiber));
    run.witnesses.push_back(Witness{k, std::move(q), std::nullopt, fiber, v});
  }
  return run;
}

PresetRun z4_general_nonabelian(std::string_view name, std::uint64_t budget, unsigned workers) {
  const Z4Order8Space space;
  const std::uint64_t total = budget ? std::min(budget, space.size()) : space.size();
  const Subloop fiber = prefix_fiber(8, 4);
  auto test = [&](std::uint64_t k) {
    LoopTable q = space.loop(k);
    return !is_abelian_in_A1(q, fiber) && congruence_derived_series(q).length.is_infinite() &&
           classical_derived_series(q).length.is_finite() &&
           solvable_class(assoc_group(q, AssocGroup::Mlt)).is_finite();
  };
  PresetRun run{std::string(name), total, {}};
  for (std::uint64_t k : scan_candidates(total, test, workers, kRandomHitLimit)) {
    LoopTable q = space.loop(k);
    std::string v = head(k, q) + " abelian_in=false congruence=inf classical=" +
                    classical_derived_series(q).length.to_string() + " mlt_solvable=" +
                    solvable_class(assoc_group(q, AssocGroup::Mlt)).to_string();
    run.witnesses.push_back(Witness{k, std::move(q), std::nullopt, fiber, v});
  }
  return run;
}

// x (+) y = s(a(x) + b(y)) for permutations a, b, s drawn by Fisher-Yates
// from the candidate's stream.
std::vector<Elem> random_group_isotope(const LoopTable& g, std::uint64_t seed, std::uint64_t k) {
  SplitMix64 rng(candidate_seed(seed, k));
  const std::size_t n = g.order();
  auto shuffled = [&] {
    std::vector<Elem> p(n);
    for (Elem i = 0; i < n; ++i) p[i] = i;
    for (std::size_t i = n - 1; i > 0; --i) std::swap(p[i], p[rng.next() % (i + 1)]);
    return p;
  };
  const auto a = shuffled(), b = shuffled(), s = shuffled();
  std::vector<Elem> sq(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) sq[x * n + y] = s[g.mul(a[x], b[y])];
  return sq;
}

PresetRun g_oplus_random_preset(std::string_view name, const LoopTable& g,
                                bool (*accept)(const A3Conditions&), std::uint64_t seed,
                                std::uint64_t budget, unsigned workers) {
  const std::size_t n = 2 * g.order();
  const Subloop fiber = prefix_fiber(n, g.order());
  auto test = [&](std::uint64_t k) {
    return accept(abelian_in_conditions(g_oplus(g, random_group_isotope(g, seed, k)), fiber));
  };
  PresetRun run{std::string(name), budget, {}};
  for (std::uint64_t k : scan_candidates(budget, test, workers, kRandomHitLimit)) {
    LoopTable q = g_oplus(g, random_group_isotope(g, seed, k));
    std::string v = head(k, q) + " " + conditions_string(abelian_in_conditions(q, fiber));
    run.witnesses.push_back(Witness{k, std::move(q), std::nullopt, fiber, v});
  }
  return run;
}

}  // namespace

PresetRun run_preset(std::string_view name, std::uint64_t seed, std::uint64_t budget,
                     unsigned workers) {
  SearchOptions exhaustive;
  exhaustive.budget = budget;
  exhaustive.workers = workers;
  SearchOptions random;
  random.mode = SearchOptions::Mode::Random;
  random.seed = seed;
  random.budget = budget ? budget : 100000;
  random.workers = workers;
  random.max_hits = kRandomHitLimit;

  if (name == "z4-by-z2-nonabelian") {
    auto pred = [](const LoopTable& q, const Cocycle& g) {
      if (is_abelian_in_A1(q, extension_fiber(g))) return false;
      if (!congruence_derived_series(q).length.is_infinite()) return false;
      if (!classical_derived_series(q).length.is_finite()) return false;
      return solvable_class(assoc_group(q, AssocGroup::Mlt)).is_finite();
    };
    auto verdict = [](const LoopTable& q) {
      return "abelian_in=false congruence=" + congruence_derived_series(q).length.to_string() +
             " classical=" + classical_derived_series(q).length.to_string() +
             " mlt_solvable=" + solvable_class(assoc_group(q, AssocGroup::Mlt)).to_string();
    };
    return cocycle_preset(name, {abelian_group({4}), cyclic_group(2), CocycleFamily::Loop},
                          exhaustive, pred, verdict);
  }
  if (name == "order6-nilpotent") {
    auto pred = [](const LoopTable& q, const Cocycle&) {
      return !is_associative(q) && nilpotency_class_loop(q) == SeriesClass::finite(2) &&
             !is_supernilpotent(q) && !supernilpotent_crosscheck(q);
    };
    auto verdict = [](const LoopTable& q) {
      return "associative=false nilpotency_class=" + nilpotency_class_loop(q).to_string() +
             " supernilpotent=false crosscheck=false";
    };
    return cocycle_preset(name, {abelian_group({2}), cyclic_group(3), CocycleFamily::Central},
                          exhaustive, pred, verdict);
  }
  if (name == "z2cubed-nonsolvable-inn") {
    auto pred = [](const LoopTable& q, const Cocycle&) {
      if (solvable_class(assoc_group(q, AssocGroup::Inn)).is_finite()) return false;
      return congruence_derived_series(q).length <= SeriesClass::finite(2);
    };
    auto verdict = [](const LoopTable& q) {
      const PermGroup inn = assoc_group(q, AssocGroup::Inn);
      return "congruence=" + congruence_derived_series(q).length.to_string() +
             " inn_order=" + std::to_string(inn.order()) +
             " inn_solvable=" + solvable_class(inn).to_string();
    };
    return cocycle_preset(name, {abelian_group({2, 2, 2}), cyclic_group(2), CocycleFamily::Loop},
                          random, pred, verdict);
  }
  if (name == "inn-solvable-mlt-nonsolvable") {
    auto pred = [](const LoopTable& q, const Cocycle&) {
      return solvable_class(assoc_group(q, AssocGroup::Inn)).is_finite() &&
             solvable_class(assoc_group(q, AssocGroup::Mlt)).is_infinite();
    };
    auto verdict = [](const LoopTable& q) {
      return "inn_solvable=" + solvable_class(assoc_group(q, AssocGroup::Inn)).to_string() +
             " mlt_solvable=" + solvable_class(assoc_group(q, AssocGroup::Mlt)).to_string();
    };
    return cocycle_preset(name, {abelian_group({2, 2, 2}), cyclic_group(2), CocycleFamily::Loop},
                          random, pred, verdict);
  }
  if (name == "g-oplus-z2sq-not-i") {
    return g_oplus_preset(
        name, abelian_group({2, 2}).table(),
        [](const A3Conditions& c) {
          return !c.inner_automorphic && c.commute && c.assoc_abx && c.assoc_axb &&
                 c.assoc_xab && c.assoc_shift;
        },
        budget, workers);
  }
  if (name == "g-oplus-z2cubed-not-i") {
    return g_oplus_random_preset(
        name, abelian_group({2, 2, 2}).table(),
        [](const A3Conditions& c) {
          return !c.inner_automorphic && c.commute && c.assoc_abx && c.assoc_axb &&
                 c.assoc_xab && c.assoc_shift;
        },
        seed, budget ? budget : 10000, workers);
  }
  if (name == "z4-by-z2-general-nonabelian") return z4_general_nonabelian(name, budget, workers);
  if (name == "g-oplus-z4-not-vi") {
    return g_oplus_preset(
        name, cyclic_group(4),
        [](const A3Conditions& c) {
          return c.inner_automorphic && c.commute && c.assoc_abx && c.assoc_axb &&
                 c.assoc_xab && !c.assoc_shift;
        },
        budget, workers);
  }
  if (name == "z4-order8-not-iii") {
    return z4_order8_preset(
        name,
        [](const A3Conditions& c) {
          return c.commute && !c.assoc_abx && c.assoc_axb && c.assoc_xab && c.assoc_shift;
        },
        budget, workers);
  }
  if (name == "z4-order8-not-v") {
    return z4_order8_preset(
        name,
        [](const A3Conditions& c) {
          return c.commute && c.assoc_abx && c.assoc_axb && !c.assoc_xab && c.assoc_shift;
        },
        budget, workers);
  }
  throw Error(ErrorKind::Malformed, "unknown preset: " + std::string(name));
}

}  // namespace loopcomm
