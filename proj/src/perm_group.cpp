#include "loopcomm/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <stdexcept>

#include "loopcomm/error.hpp"

namespace loopcomm {

// Deterministic Schreier-Sims over a fixed base.
//
// Level i holds the generators of G^(i), the pointwise stabilizer of
// base[0..i-1], the basic orbit of base[i] and a transversal u_c with
// u_c(base[i]) = c. New generators are pushed down by sifting every Schreier
// generator u_c^-1 s u_b into the next level, so after every insert the
// levels form a complete stabilizer chain of the group generated so far.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, std::vector<Point> base) : degree_(degree) {
    levels_.reserve(base.size());
    for (Point b : base) {
      Level lvl;
      lvl.base = b;
      lvl.transversal.resize(degree);
      lvl.transversal_inv.resize(degree);
      lvl.transversal[b] = Permutation::identity(degree);
      lvl.transversal_inv[b] = Permutation::identity(degree);
      lvl.orbit.push_back(b);
      levels_.push_back(std::move(lvl));
    }
  }

  // Adds h to the group; returns whether the group grew.
  bool insert(const Permutation& h) { return insert_from(h, 0); }

  bool contains(const Permutation& p) const {
    auto [residue, depth] = sift(p, 0);
    return depth == levels_.size() && residue.is_identity();
  }

  unsigned __int128 order() const {
    unsigned __int128 n = 1;
    for (const Level& lvl : levels_) n *= lvl.orbit.size();
    return n;
  }

  std::vector<Point> nontrivial_base() const {
    std::vector<Point> out;
    for (const Level& lvl : levels_)
      if (lvl.orbit.size() > 1) out.push_back(lvl.base);
    return out;
  }

  std::vector<std::size_t> orbit_lengths() const {
    std::vector<std::size_t> out;
    for (const Level& lvl : levels_)
      if (lvl.orbit.size() > 1) out.push_back(lvl.orbit.size());
    return out;
  }

 private:
  struct Level {
    Point base = 0;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::vector<std::optional<Permutation>> transversal;
    std::vector<std::optional<Permutation>> transversal_inv;
  };

  std::pair<Permutation, std::size_t> sift(Permutation h, std::size_t from) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      const Level& lvl = levels_[i];
      Point b = h(lvl.base);
      if (!lvl.transversal[b]) return {std::move(h), i};
      h = *lvl.transversal_inv[b] * h;
    }
    return {std::move(h), levels_.size()};
  }

  bool insert_from(const Permutation& h, std::size_t from) {
    auto [residue, depth] = sift(h, from);
    if (depth == levels_.size()) {
      if (!residue.is_identity())
        throw std::logic_error("permutation moves a point outside the chain base");
      return false;
    }
    for (std::size_t i = depth + 1; i-- > from;) add_generator(i, residue);
    return true;
  }

  void add_generator(std::size_t i, const Permutation& g) {
    levels_[i].gens.push_back(g);
    const std::size_t old_orbit = levels_[i].orbit.size();
    for (std::size_t idx = 0; idx < levels_[i].orbit.size(); ++idx) {
      Point b = levels_[i].orbit[idx];
      if (idx < old_orbit) {
        extend(i, b, g);
      } else {
        // Generators at level i do not change while we iterate: recursion
        // only touches deeper levels.
        for (std::size_t s = 0; s < levels_[i].gens.size(); ++s)
          extend(i, b, levels_[i].gens[s]);
      }
    }
  }

  void extend(std::size_t i, Point b, const Permutation& s) {
    Level& lvl = levels_[i];
    Point c = s(b);
    Permutation t = s * *lvl.transversal[b];
    if (!lvl.transversal[c]) {
      lvl.transversal_inv[c] = t.inverse();
      lvl.transversal[c] = std::move(t);
      lvl.orbit.push_back(c);
      return;
    }
    Permutation schreier = *lvl.transversal_inv[c] * t;
    if (!schreier.is_identity() && i + 1 <= levels_.size()) insert_from(schreier, i + 1);
  }

  std::size_t degree_;
  std::vector<Level> levels_;
};

namespace {

std::vector<Point> moved_points_of(std::size_t degree, std::span<const Permutation> gens) {
  std::vector<bool> moved(degree, false);
  for (const Permutation& g : gens)
    for (Point x : g.moved_points()) moved[x] = true;
  std::vector<Point> out;
  for (std::size_t i = 0; i < degree; ++i)
    if (moved[i]) out.push_back(static_cast<Point>(i));
  return out;
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators) : degree_(degree) {
  std::set<Permutation> seen;
  for (Permutation& g : generators) {
    if (g.degree() != degree) throw Error(ErrorKind::Malformed, "generator degree mismatch");
    if (g.is_identity() || !seen.insert(g).second) continue;
    generators_.push_back(std::move(g));
  }
  auto chain = std::make_shared<StabilizerChain>(degree, moved_points_of(degree, generators_));
  for (const Permutation& g : generators_) chain->insert(g);
  chain_ = std::move(chain);
}

std::vector<Point> PermGroup::base() const { return chain_->nontrivial_base(); }

std::vector<std::size_t> PermGroup::orbit_lengths() const { return chain_->orbit_lengths(); }

std::uint64_t PermGroup::order() const {
  unsigned __int128 n = 1;
  for (std::size_t len : chain_->orbit_lengths()) {
    n *= len;
    if (n > kGroupOrderCap)
      throw Error(ErrorKind::CapExceeded, "group order exceeds 10^12");
  }
  return static_cast<std::uint64_t>(n);
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw Error(ErrorKind::Malformed, "degree mismatch");
  return chain_->contains(p);
}

bool PermGroup::contains_all(std::span<const Permutation> ps) const {
  return std::all_of(ps.begin(), ps.end(), [&](const Permutation& p) { return contains(p); });
}

std::uint64_t group_order(const PermGroup& g) { return g.order(); }

bool contains(const PermGroup& g, const Permutation& p) { return g.contains(p); }

bool same_group(const PermGroup& a, const PermGroup& b) {
  return a.contains_all(b.generators()) && b.contains_all(a.generators());
}

PermGroup normal_closure(const PermGroup& ambient, std::span<const Permutation> seed) {
  const std::size_t degree = ambient.degree();
  StabilizerChain chain(degree, moved_points_of(degree, ambient.generators()));
  std::vector<Permutation> gens;
  std::deque<Permutation> pending;
  auto offer = [&](const Permutation& p) {
    if (chain.insert(p)) {
      gens.push_back(p);
      pending.push_back(p);
    }
  };
  for (const Permutation& x : seed) {
    if (x.degree() != degree) throw Error(ErrorKind::Malformed, "degree mismatch");
    offer(x);
  }
  while (!pending.empty()) {
    Permutation n = std::move(pending.front());
    pending.pop_front();
    for (const Permutation& g : ambient.generators()) offer(g * n * g.inverse());
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup derived_subgroup(const PermGroup& g) {
  const auto& gens = g.generators();
  std::vector<Permutation> comms;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(commutator(gens[i], gens[j]));
  return normal_closure(g, comms);
}

PermGroup commutator_with(const PermGroup& g, const PermGroup& n) {
  std::vector<Permutation> comms;
  for (const Permutation& a : g.generators())
    for (const Permutation& b : n.generators()) comms.push_back(commutator(a, b));
  return normal_closure(g, comms);
}

namespace {

template <typename Step>
SeriesClass series_length(const PermGroup& g, Step step) {
  PermGroup current = g;
  for (unsigned k = 0; k <= kSeriesIterationCap; ++k) {
    if (current.is_trivial()) return SeriesClass::finite(k);
    PermGroup next = step(current);
    // next is a subgroup of current; equality means the series is stuck.
    if (next.contains_all(current.generators())) return SeriesClass::infinite();
    current = std::move(next);
  }
  return SeriesClass::infinite(true);
}

}  // namespace

SeriesClass solvable_class(const PermGroup& g) {
  return series_length(g, [](const PermGroup& d) { return derived_subgroup(d); });
}

SeriesClass nilpotency_class_group(const PermGroup& g) {
  return series_length(g, [&g](const PermGroup& n) { return commutator_with(g, n); });
}

}  // namespace loopcomm
