//
// closed_forms.hpp
//
// Every closed-form pattern count, plus a dispatcher that picks the right
// branch for a query and falls back to the enumeration oracle when no
// closed form applies.
//
// J(n,b) counts period-n patterns with b balls; J(n,b,c) additionally caps
// every height at c; J(n,*,c) sums J(n,b,c) over all ball counts.
//

#pragma once

#include "siteswap/enumeration.hpp"
#include "siteswap/exact_math.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace siteswap {

enum class CountMethod {
  automatic,    // closed form when one applies, oracle otherwise
  closed_form,  // closed form or fail
  oracle,       // always enumerate
  both,         // closed form cross-checked against the oracle
};

// The formula (or fallback) that produced a count.
enum class CountBranch {
  unbounded,        // (b+1)^n - b^n
  theorem1_sum,     // sum_k E(n,k) B(n,b-k,a-1) at ceiling an-1
  theorem1_closed,  // truncated-power closed form at ceiling an-1
  eulerian,         // E(n,b) at ceiling n-1
  factorial,        // n! for all balls at ceiling n-1
  rook_derangement, // derangement sum for all balls at ceiling n-2
  rook_menage,      // menage sum for all balls at ceiling n-3
  rook_oracle,      // exhaustive rook placements for all balls, c <= n-4
  pattern_oracle,   // exhaustive pattern enumeration
};

std::string_view to_string(CountBranch branch);
std::string_view to_string(CountMethod method);

// A counting request. Omitting the ceiling means unbounded heights, which
// requires a fixed ball count.
struct CountQuery {
  std::size_t period = 1;
  std::optional<std::int64_t> balls;    // nullopt: all ball counts
  std::optional<std::int64_t> ceiling;  // nullopt: unbounded
  CountMethod method = CountMethod::automatic;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

struct CountResult {
  ExactInt count;
  CountBranch branch = CountBranch::pattern_oracle;
  bool cross_checked = false;
};

// Closed form and oracle disagreed; indicates a bug, never a bad query.
class CrossCheckError : public std::logic_error {
  using std::logic_error::logic_error;
};

// method = closed_form requested but only the pattern oracle applies.
class NoClosedForm : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// J(n,b) = (b+1)^n - b^n: period-n patterns with b balls, no ceiling.
ExactInt count_unbounded(std::size_t n, std::int64_t b);

// J(n,b,an-1) as the descent-indexed sum  sum_k E(n,k) B(n,b-k,a-1).
// This is the reference form; terms with b-k < 0 vanish via the
// combinatorial binomial convention. Requires a >= 1.
ExactInt count_ceiling_multiple(std::size_t n, std::int64_t b, std::int64_t a);

// J(n,b,an-1) as the closed form  sum_i (-1)^i C(n,i)[(b-ia+1)^n - (b-ia)^n]
// evaluated with truncated powers (x^n -> 0 for x < 0). With plain powers
// the sum collapses to 0 for every input; the truncation is what makes the
// printed form match the oracle. Equals count_ceiling_multiple everywhere.
ExactInt count_ceiling_multiple_closed(std::size_t n, std::int64_t b,
                                       std::int64_t a);

// J(n,*,c) for 0 <= c <= n-1, all ball counts: n! at c = n-1, the
// derangement sum at n-2, the menage sum at n-3, and exhaustive rook
// placements rook(n-c-1, n) below that. c >= n is rejected.
ExactInt count_all_balls_small_ceiling(
    std::size_t n, std::int64_t c,
    std::uint64_t node_budget = kDefaultNodeBudget);

// sum_k (-1)^k C(n,k) (n-k)!, the number of derangements of n symbols.
ExactInt derangement_count(std::size_t n);

// sum_k (-1)^k 2n/(2n-k) C(2n-k,k) (n-k)!, the married-couples count.
// Each term is computed in integers with the division last; a non-exact
// division throws std::logic_error. Requires n >= 3.
ExactInt menage_count(std::size_t n);

// Dispatches a query to the cheapest applicable branch:
//
//   fixed b, no ceiling or ceiling >= b*n  -> unbounded
//   fixed b, ceiling = n-1                 -> eulerian
//   fixed b, ceiling = an-1, a >= 2        -> theorem1 (sum, or closed form
//                                             under method = closed_form)
//   all balls, ceiling <= n-1              -> factorial / rook branches
//   anything else                          -> pattern oracle
//
// method = both additionally runs the enumeration oracle and throws
// CrossCheckError on disagreement; cross_checked reports whether two
// independent routes ran.
CountResult count(const CountQuery& query);

}  // namespace siteswap
