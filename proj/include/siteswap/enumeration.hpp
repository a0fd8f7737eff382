//
// enumeration.hpp
//
// Brute-force ground truth. Exhaustively enumerates the patterns matching a
// period / ball-count / ceiling specification in ascending lexicographic
// order of the height tuple, and counts restricted rook placements by
// exhaustive search. Every closed-form count in the library is verified
// against these oracles.
//

#pragma once

#include "siteswap/exact_math.hpp"
#include "siteswap/pattern.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace siteswap {

// Refusal threshold for raw search grids, in nodes.
inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000;

// Search space exceeds the node budget.
class BudgetError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// What to enumerate: period n, a fixed ball count or all ball counts, and a
// height ceiling. For a fixed ball count b a missing ceiling defaults to
// b*n, the largest height any b-ball period-n pattern can contain (the
// effective ceiling is clamped to b*n for the same reason). Enumerating all
// ball counts requires a finite ceiling.
struct EnumerationSpec {
  std::size_t period = 1;
  std::optional<std::int64_t> balls;    // nullopt: all ball counts
  std::optional<std::int64_t> ceiling;  // nullopt: b*n (fixed balls only)
  std::uint64_t node_budget = kDefaultNodeBudget;
};

// Return false to stop the enumeration early.
using PatternVisitor = std::function<bool(const JugglingPattern&)>;

// Visits every pattern matching the spec in strictly ascending lexicographic
// order of the height tuple. Deterministic across runs and thread counts.
// Throws std::invalid_argument for a malformed spec and BudgetError when the
// raw grid (ceiling+1)^period exceeds the node budget.
void enumerate_patterns(const EnumerationSpec& spec, const PatternVisitor& visit);

// Convenience overload that materializes the stream.
std::vector<JugglingPattern> enumerate_patterns(const EnumerationSpec& spec);

// Cardinality of enumerate_patterns(spec), computed without materializing
// the stream. `parallelism` > 1 partitions the search by first throw height;
// the result is identical for every parallelism degree.
ExactInt count_patterns_oracle(const EnumerationSpec& spec,
                               std::size_t parallelism = 1);

// Number of permutations p of {0,...,n-1} with p(i) not in
// {(i+1) mod n, ..., (i+s) mod n} for every row i, by exhaustive search with
// pruning. rook(0,n) = n!, rook(1,n) = derangements, rook(2,n) = menage.
// Requires s < n. Refuses when min(n!, (n-s)^n) exceeds the node budget.
ExactInt rook_oracle(std::size_t s, std::size_t n,
                     std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace siteswap
