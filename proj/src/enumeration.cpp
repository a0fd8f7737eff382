#include "siteswap/enumeration.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <thread>

namespace siteswap {

namespace {

struct ResolvedSpec {
  std::size_t n = 1;
  std::optional<std::int64_t> balls;
  std::int64_t ceiling = 0;
};

// Validates the spec, applies the default / clamped ceiling for a fixed ball
// count and enforces the node budget on the raw (c+1)^n grid.
ResolvedSpec resolve(const EnumerationSpec& spec) {
  if (spec.period < 1)
    throw std::invalid_argument("enumeration: period must be >= 1");
  if (spec.balls && *spec.balls < 0)
    throw std::invalid_argument("enumeration: ball count must be >= 0");
  if (spec.ceiling && *spec.ceiling < 0)
    throw std::invalid_argument("enumeration: ceiling must be >= 0");

  ResolvedSpec r;
  r.n = spec.period;
  r.balls = spec.balls;

  ExactInt ceiling;
  if (spec.balls) {
    // no height in a b-ball period-n pattern can exceed b*n
    const ExactInt cap = ExactInt(*spec.balls) * spec.period;
    ceiling = spec.ceiling ? std::min(ExactInt(*spec.ceiling), cap) : cap;
  } else {
    if (!spec.ceiling)
      throw std::invalid_argument(
          "enumeration over all ball counts requires a ceiling");
    ceiling = *spec.ceiling;
  }

  const ExactInt grid = truncated_pow(ceiling + 1, r.n);
  if (grid > spec.node_budget)
    throw BudgetError("raw grid (ceiling+1)^period = " + grid.str() +
                      " exceeds the node budget of " +
                      std::to_string(spec.node_budget));
  r.ceiling = ceiling.convert_to<std::int64_t>();
  return r;
}

struct SearchState {
  std::size_t n = 1;
  std::int64_t ceiling = 0;
  std::optional<std::int64_t> target;  // required height sum (= balls * n)
  std::vector<std::int64_t> heights;
  std::vector<char> used_slot;
};

SearchState make_state(const ResolvedSpec& r) {
  SearchState s;
  s.n = r.n;
  s.ceiling = r.ceiling;
  if (r.balls) s.target = *r.balls * static_cast<std::int64_t>(r.n);
  s.heights.assign(r.n, 0);
  s.used_slot.assign(r.n, 0);
  return s;
}

// Feasible height range at `pos` given the running sum: never overshoot the
// target, and never drop below what the remaining positions can still reach.
std::pair<std::int64_t, std::int64_t> height_bounds(const SearchState& s,
                                                    std::size_t pos,
                                                    std::int64_t sum) {
  std::int64_t lo = 0;
  std::int64_t hi = s.ceiling;
  if (s.target) {
    const std::int64_t remaining = static_cast<std::int64_t>(s.n - pos - 1);
    const std::int64_t need = *s.target - sum;
    hi = std::min(hi, need);
    lo = std::max<std::int64_t>(0, need - remaining * s.ceiling);
  }
  return {lo, hi};
}

// Depth-first walk in ascending height order; landing slots are claimed as
// they are chosen, so every leaf satisfies the landing condition. Leaf
// returns false to stop the whole search.
template <typename Leaf>
bool walk(SearchState& s, std::size_t pos, std::int64_t sum, Leaf&& leaf) {
  if (pos == s.n) return leaf(s);
  const auto ni = static_cast<std::int64_t>(s.n);
  const auto [lo, hi] = height_bounds(s, pos, sum);
  for (std::int64_t h = lo; h <= hi; ++h) {
    const auto slot = static_cast<std::size_t>(
        (h % ni + static_cast<std::int64_t>(pos)) % ni);
    if (s.used_slot[slot]) continue;
    s.used_slot[slot] = 1;
    s.heights[pos] = h;
    const bool keep_going = walk(s, pos + 1, sum + h, leaf);
    s.used_slot[slot] = 0;
    if (!keep_going) return false;
  }
  return true;
}

// Leaves with the first height restricted to [h0_lo, h0_hi]; used by the
// partitioned count so parallel chunks cover disjoint prefix ranges.
std::uint64_t count_with_first_height_in(const ResolvedSpec& r,
                                         std::int64_t h0_lo,
                                         std::int64_t h0_hi) {
  SearchState s = make_state(r);
  std::uint64_t count = 0;
  auto leaf = [&](SearchState&) {
    ++count;
    return true;
  };
  if (r.n == 1) {
    for (std::int64_t h = h0_lo; h <= h0_hi; ++h)
      if (!s.target || *s.target == h) ++count;
    return count;
  }
  const auto ni = static_cast<std::int64_t>(r.n);
  const auto [lo, hi] = height_bounds(s, 0, 0);
  for (std::int64_t h = std::max(lo, h0_lo); h <= std::min(hi, h0_hi); ++h) {
    const auto slot = static_cast<std::size_t>(h % ni);
    s.used_slot[slot] = 1;
    s.heights[0] = h;
    walk(s, 1, h, leaf);
    s.used_slot[slot] = 0;
  }
  return count;
}

}  // namespace

void enumerate_patterns(const EnumerationSpec& spec,
                        const PatternVisitor& visit) {
  const ResolvedSpec r = resolve(spec);
  SearchState s = make_state(r);
  walk(s, 0, 0, [&](const SearchState& state) {
    return visit(JugglingPattern::checked(ThrowSequence{state.heights}));
  });
}

std::vector<JugglingPattern> enumerate_patterns(const EnumerationSpec& spec) {
  std::vector<JugglingPattern> patterns;
  enumerate_patterns(spec, [&](const JugglingPattern& p) {
    patterns.push_back(p);
    return true;
  });
  return patterns;
}

ExactInt count_patterns_oracle(const EnumerationSpec& spec,
                               std::size_t parallelism) {
  const ResolvedSpec r = resolve(spec);
  if (parallelism == 0)
    parallelism = std::max(1u, std::thread::hardware_concurrency());

  const std::int64_t choices = r.ceiling + 1;
  if (parallelism <= 1 || r.n == 1 || choices < 2) {
    std::uint64_t count = count_with_first_height_in(r, 0, r.ceiling);
    return ExactInt(count);
  }

  const std::int64_t chunks =
      std::min<std::int64_t>(static_cast<std::int64_t>(parallelism), choices);
  std::vector<std::future<std::uint64_t>> futures;
  futures.reserve(static_cast<std::size_t>(chunks));
  for (std::int64_t t = 0; t < chunks; ++t) {
    const std::int64_t lo = choices * t / chunks;
    const std::int64_t hi = choices * (t + 1) / chunks - 1;
    futures.push_back(std::async(std::launch::async, [&r, lo, hi] {
      return count_with_first_height_in(r, lo, hi);
    }));
  }
  ExactInt total = 0;
  for (auto& f : futures) total += f.get();
  return total;
}

ExactInt rook_oracle(std::size_t s, std::size_t n,
                     std::uint64_t node_budget) {
  if (n < 1) throw std::invalid_argument("rook_oracle: n must be >= 1");
  if (s >= n)
    throw std::invalid_argument(
        "rook_oracle: s must be < n (no placement survives s = n)");

  // Cost proxy: each row offers n-s columns, and placements are injective.
  const ExactInt cost =
      std::min(factorial(n), truncated_pow(ExactInt(n - s), n));
  if (cost > node_budget)
    throw BudgetError("rook search space " + cost.str() +
                      " exceeds the node budget of " +
                      std::to_string(node_budget));

  std::vector<char> used(n, 0);
  std::uint64_t count = 0;
  const auto ni = static_cast<std::int64_t>(n);
  const auto rec = [&](auto&& self, std::size_t row) -> void {
    if (row == n) {
      ++count;
      return;
    }
    for (std::size_t col = 0; col < n; ++col) {
      if (used[col]) continue;
      const std::int64_t diff =
          (static_cast<std::int64_t>(col) - static_cast<std::int64_t>(row) +
           ni) %
          ni;
      if (diff >= 1 && diff <= static_cast<std::int64_t>(s)) continue;
      used[col] = 1;
      self(self, row + 1);
      used[col] = 0;
    }
  };
  rec(rec, 0);
  return ExactInt(count);
}

}  // namespace siteswap
