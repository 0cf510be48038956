#include "loopcomm/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "loopcomm/error.hpp"

namespace loopcomm {

FreeCells free_cells(const SearchSpace& space) {
  FreeCells fc;
  const std::size_t m = space.f.order();
  const Elem one = space.f.neutral();
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y) {
      const std::size_t c = x * m + y;
      if (space.family == CocycleFamily::Loop) {
        if (y != one) fc.phi.push_back(c);
        if (x != one) fc.psi.push_back(c);
      }
      if (x != one && y != one) fc.theta.push_back(c);
    }
  return fc;
}

namespace {

std::vector<std::uint64_t> radices(const SearchSpace& space, const FreeCells& fc,
                                   std::size_t aut_count) {
  std::vector<std::uint64_t> r;
  r.insert(r.end(), fc.phi.size() + fc.psi.size(), aut_count);
  r.insert(r.end(), fc.theta.size(), space.a.size());
  return r;
}

void assign(Cocycle& g, const FreeCells& fc, std::span<const Permutation> auts,
            std::span<const std::uint64_t> digits) {
  std::size_t d = 0;
  for (std::size_t c : fc.phi) g.phi[c] = auts[digits[d++]];
  for (std::size_t c : fc.psi) g.psi[c] = auts[digits[d++]];
  for (std::size_t c : fc.theta) g.theta[c] = static_cast<Elem>(digits[d++]);
}

std::size_t aut_count(const SearchSpace& space) {
  return space.family == CocycleFamily::Loop ? automorphisms(space.a).size() : 1;
}

}  // namespace

std::uint64_t exhaustive_space_size(const SearchSpace& space) {
  const FreeCells fc = free_cells(space);
  std::uint64_t total = 1;
  for (std::uint64_t r : radices(space, fc, aut_count(space))) {
    if (r != 0 && total > kExhaustiveCap / r)
      throw Error(ErrorKind::CapExceeded, "exhaustive search space exceeds 1e8 candidates");
    total *= r;
  }
  if (total > kExhaustiveCap)
    throw Error(ErrorKind::CapExceeded, "exhaustive search space exceeds 1e8 candidates");
  return total;
}

Cocycle cocycle_from_index(const SearchSpace& space, std::span<const Permutation> auts,
                           std::uint64_t index) {
  const FreeCells fc = free_cells(space);
  const auto r = radices(space, fc, auts.size());
  std::vector<std::uint64_t> digits(r.size());
  for (std::size_t i = r.size(); i-- > 0;) {
    digits[i] = index % r[i];
    index /= r[i];
  }
  Cocycle g = trivial_cocycle(space.a, space.f);
  assign(g, fc, auts, digits);
  return g;
}

Cocycle random_cocycle(const SearchSpace& space, std::span<const Permutation> auts,
                       std::uint64_t seed, std::uint64_t k) {
  const FreeCells fc = free_cells(space);
  const auto r = radices(space, fc, auts.size());
  SplitMix64 rng(candidate_seed(seed, k));
  std::vector<std::uint64_t> digits(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) digits[i] = rng.next() % r[i];
  Cocycle g = trivial_cocycle(space.a, space.f);
  assign(g, fc, auts, digits);
  return g;
}

std::vector<std::uint64_t> scan_candidates(std::uint64_t total,
                                           const std::function<bool(std::uint64_t)>& test,
                                           unsigned workers, std::size_t max_hits) {
  constexpr std::uint64_t kChunk = 32;
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(chunks, 1)));

  std::vector<std::vector<std::uint64_t>> found(chunks);
  std::vector<bool> done(chunks, false);
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::uint64_t prefix = 0;  // chunks [0, prefix) are complete
  std::size_t prefix_hits = 0;
  std::exception_ptr failure;

  auto work = [&] {
    for (;;) {
      if (stop.load()) return;
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      std::vector<std::uint64_t> local;
      try {
        const std::uint64_t end = std::min(total, (c + 1) * kChunk);
        for (std::uint64_t i = c * kChunk; i < end; ++i)
          if (test(i)) local.push_back(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        stop = true;
        return;
      }
      std::lock_guard lock(mu);
      found[c] = std::move(local);
      done[c] = true;
      while (prefix < chunks && done[prefix]) prefix_hits += found[prefix++].size();
      if (prefix_hits >= max_hits) stop = true;
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<std::uint64_t> hits;
  for (std::uint64_t c = 0; c < prefix; ++c) hits.insert(hits.end(), found[c].begin(), found[c].end());
  if (hits.size() > max_hits) hits.resize(max_hits);
  return hits;
}

std::vector<SearchHit> search_cocycles(const SearchSpace& space, const CocyclePredicate& pred,
                                       const SearchOptions& opts) {
  const std::vector<Permutation> auts =
      space.family == CocycleFamily::Loop ? automorphisms(space.a)
                                          : std::vector<Permutation>{Permutation::identity(space.a.size())};
  const bool exhaustive = opts.mode == SearchOptions::Mode::Exhaustive;
  const std::uint64_t total = exhaustive ? exhaustive_space_size(space) : opts.budget;

  auto candidate = [&](std::uint64_t k) {
    return exhaustive ? cocycle_from_index(space, auts, k)
                      : random_cocycle(space, auts, opts.seed, k);
  };
  auto test = [&](std::uint64_t k) {
    Cocycle g = candidate(k);
    return pred(build_extension(g), g);
  };

  std::vector<SearchHit> hits;
  for (std::uint64_t k : scan_candidates(total, test, opts.workers, opts.max_hits)) {
    Cocycle g = candidate(k);
    LoopTable t = build_extension(g);
    hits.push_back(SearchHit{k, std::move(g), std::move(t)});
  }
  return hits;
}

namespace {

void latin_fill(std::size_t n, std::vector<Elem>& sq, std::vector<std::uint8_t>& row_used,
                std::vector<std::uint8_t>& col_used, std::size_t cell,
                std::vector<std::vector<Elem>>& out) {
  if (cell == n * n) {
    out.push_back(sq);
    return;
  }
  const std::size_t r = cell / n, c = cell % n;
  for (Elem v = 0; v < n; ++v) {
    if (row_used[r * n + v] || col_used[c * n + v]) continue;
    row_used[r * n + v] = col_used[c * n + v] = 1;
    sq[cell] = v;
    latin_fill(n, sq, row_used, col_used, cell + 1, out);
    row_used[r * n + v] = col_used[c * n + v] = 0;
  }
}

}  // namespace

std::vector<std::vector<Elem>> all_latin_squares(std::size_t n) {
  if (n > 5) throw Error(ErrorKind::CapExceeded, "Latin square enumeration is limited to n <= 5");
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> sq(n * n);
  std::vector<std::uint8_t> row_used(n * n, 0), col_used(n * n, 0);
  latin_fill(n, sq, row_used, col_used, 0, out);
  return out;
}

}  // namespace loopcomm
