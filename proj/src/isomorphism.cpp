#include "loopcomm/isomorphism.hpp"

#include <algorithm>
#include <map>

#include "loopcomm/error.hpp"

namespace loopcomm {
namespace {

std::vector<std::size_t> cycle_type(std::span<const Elem> images) {
  std::vector<bool> seen(images.size(), false);
  std::vector<std::size_t> lengths;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

using Invariant = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;

std::vector<Invariant> element_invariants(const LoopTable& q) {
  std::vector<Invariant> inv;
  inv.reserve(q.order());
  for (Elem x = 0; x < q.order(); ++x)
    inv.emplace_back(cycle_type(translation(q, TranslationKind::L, x).images()),
                     cycle_type(translation(q, TranslationKind::R, x).images()));
  return inv;
}

// Dense ranks of the invariants, shared between two loops so that equal
// invariants get equal ranks.
std::pair<std::vector<int>, std::vector<int>> ranked(const std::vector<Invariant>& a,
                                                     const std::vector<Invariant>& b) {
  std::map<Invariant, int> rank;
  for (const auto& v : a) rank.emplace(v, 0);
  for (const auto& v : b) rank.emplace(v, 0);
  int r = 0;
  for (auto& [k, v] : rank) v = r++;
  std::vector<int> ra, rb;
  for (const auto& v : a) ra.push_back(rank[v]);
  for (const auto& v : b) rb.push_back(rank[v]);
  return {ra, rb};
}

class IsoSearch {
 public:
  IsoSearch(const LoopTable& a, const LoopTable& b, std::vector<int> ra, std::vector<int> rb)
      : a_(a), b_(b), ra_(std::move(ra)), rb_(std::move(rb)), n_(a.order()),
        f_(n_, kUnset), used_(n_, false) {}

  std::optional<std::vector<Elem>> run() {
    std::vector<Elem> trail;
    if (!assign(a_.neutral(), b_.neutral(), trail)) return std::nullopt;
    if (search(0)) return f_;
    return std::nullopt;
  }

 private:
  static constexpr Elem kUnset = ~Elem{0};

  // Assigns x -> y and everything it forces; records assignments on the
  // trail. Returns false on contradiction (trail still lists what to undo).
  bool assign(Elem x, Elem y, std::vector<Elem>& trail) {
    std::vector<Elem> work;
    auto set = [&](Elem u, Elem v) {
      if (f_[u] != kUnset) return f_[u] == v;
      if (used_[v] || ra_[u] != rb_[v]) return false;
      f_[u] = v;
      used_[v] = true;
      trail.push_back(u);
      assigned_.push_back(u);
      work.push_back(u);
      return true;
    };
    if (!set(x, y)) return false;
    while (!work.empty()) {
      Elem u = work.back();
      work.pop_back();
      for (std::size_t i = 0; i < assigned_.size(); ++i) {
        Elem v = assigned_[i];
        if (!set(a_.mul(u, v), b_.mul(f_[u], f_[v]))) return false;
        if (!set(a_.mul(v, u), b_.mul(f_[v], f_[u]))) return false;
      }
    }
    return true;
  }

  void undo(std::vector<Elem>& trail) {
    for (Elem u : trail) {
      used_[f_[u]] = false;
      f_[u] = kUnset;
    }
    assigned_.resize(assigned_.size() - trail.size());
    trail.clear();
  }

  bool search(Elem x) {
    while (x < n_ && f_[x] != kUnset) ++x;
    if (x == n_) return true;
    for (Elem y = 0; y < n_; ++y) {
      if (used_[y] || ra_[x] != rb_[y]) continue;
      std::vector<Elem> trail;
      if (assign(x, y, trail) && search(x + 1)) return true;
      undo(trail);
    }
    return false;
  }

  const LoopTable& a_;
  const LoopTable& b_;
  std::vector<int> ra_, rb_;
  std::size_t n_;
  std::vector<Elem> f_;
  std::vector<bool> used_;
  std::vector<Elem> assigned_;
};

}  // namespace

std::optional<std::vector<Elem>> is_isomorphic(const LoopTable& q1, const LoopTable& q2) {
  if (q1.order() != q2.order()) return std::nullopt;
  if (is_commutative(q1) != is_commutative(q2)) return std::nullopt;
  if (is_associative(q1) != is_associative(q2)) return std::nullopt;
  auto [r1, r2] = ranked(element_invariants(q1), element_invariants(q2));
  auto s1 = r1, s2 = r2;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2) return std::nullopt;
  return IsoSearch(q1, q2, std::move(r1), std::move(r2)).run();
}

namespace {

class Canonicalizer {
 public:
  Canonicalizer(const LoopTable& q, std::uint64_t budget) : q_(q), n_(q.order()), budget_(budget) {
    auto inv = element_invariants(q);
    rank_ = ranked(inv, {}).first;
  }

  CanonicalForm run() {
    State s;
    s.label.assign(n_, kUnset);
    push(s, q_.neutral());
    explore(std::move(s));
    std::vector<Elem> table(n_ * n_);
    for (Elem x = 0; x < n_; ++x)
      for (Elem y = 0; y < n_; ++y)
        table[best_labels_[x] * n_ + best_labels_[y]] = best_labels_[q_.mul(x, y)];
    return {LoopTable::from_table(n_, std::move(table)), best_labels_};
  }

 private:
  static constexpr Elem kUnset = ~Elem{0};

  struct State {
    std::vector<Elem> seq;    // label -> element
    std::vector<Elem> label;  // element -> label
    std::size_t processed = 0;
  };

  static void push(State& s, Elem e) {
    s.label[e] = static_cast<Elem>(s.seq.size());
    s.seq.push_back(e);
  }

  void close(State& s) const {
    for (; s.processed < s.seq.size(); ++s.processed) {
      std::size_t k = s.processed;
      for (std::size_t i = 0; i <= k; ++i) {
        Elem p = q_.mul(s.seq[i], s.seq[k]);
        if (s.label[p] == kUnset) push(s, p);
        p = q_.mul(s.seq[k], s.seq[i]);
        if (s.label[p] == kUnset) push(s, p);
      }
    }
  }

  Elem entry(const State& s, std::size_t i, std::size_t j) const {
    return s.label[q_.mul(s.seq[i], s.seq[j])];
  }

  // Compares the shell-order prefix covering labels [0, len) with the best.
  int compare_prefix(const State& s) const {
    if (best_seq_.empty()) return -1;
    const std::size_t len = s.seq.size();
    for (std::size_t sh = 0; sh < len; ++sh) {
      for (std::size_t j = 0; j <= sh; ++j) {
        Elem a = entry(s, sh, j), b = best_entry(sh, j);
        if (a != b) return a < b ? -1 : 1;
      }
      for (std::size_t i = 0; i < sh; ++i) {
        Elem a = entry(s, i, sh), b = best_entry(i, sh);
        if (a != b) return a < b ? -1 : 1;
      }
    }
    return 0;
  }

  Elem best_entry(std::size_t i, std::size_t j) const {
    return best_labels_[q_.mul(best_seq_[i], best_seq_[j])];
  }

  void explore(State s) {
    if (++nodes_ > budget_)
      throw Error(ErrorKind::CapExceeded, "canonical form search exceeded its node budget");
    close(s);
    int cmp = compare_prefix(s);
    if (cmp > 0) return;
    if (s.seq.size() == n_) {
      if (cmp < 0) {
        best_seq_ = s.seq;
        best_labels_ = s.label;
      }
      return;
    }
    int min_rank = -1;
    for (Elem e = 0; e < n_; ++e)
      if (s.label[e] == kUnset && (min_rank < 0 || rank_[e] < min_rank)) min_rank = rank_[e];
    for (Elem e = 0; e < n_; ++e) {
      if (s.label[e] != kUnset || rank_[e] != min_rank) continue;
      State next = s;
      push(next, e);
      explore(std::move(next));
    }
  }

  const LoopTable& q_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> rank_;
  std::vector<Elem> best_seq_;
  std::vector<Elem> best_labels_;
};

std::uint64_t splitmix_finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

CanonicalForm canonical_form(const LoopTable& q, std::uint64_t node_budget) {
  return Canonicalizer(q, node_budget).run();
}

std::uint64_t table_hash(const LoopTable& canonical) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto fold = [&h](std::uint32_t w) {
    for (int byte = 0; byte < 4; ++byte) {
      h ^= (w >> (8 * byte)) & 0xffu;
      h *= 0x100000001b3ULL;
    }
  };
  fold(static_cast<std::uint32_t>(canonical.order()));
  for (Elem e : canonical.table()) fold(e);
  return splitmix_finalize(h);
}

std::uint64_t fingerprint(const LoopTable& q) { return table_hash(canonical_form(q).table); }

}  // namespace loopcomm
