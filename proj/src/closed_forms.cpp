#include "siteswap/closed_forms.hpp"

#include <utility>

namespace siteswap {

namespace {

void check_period(std::size_t n) {
  if (n < 1) throw std::invalid_argument("count: period must be >= 1");
}

CountBranch small_ceiling_branch(std::size_t n, std::int64_t c) {
  const auto ni = static_cast<std::int64_t>(n);
  if (c == ni - 1) return CountBranch::factorial;
  if (c == ni - 2) return CountBranch::rook_derangement;
  if (c == ni - 3) return CountBranch::rook_menage;
  return CountBranch::rook_oracle;
}

// The closed-form branch for a query under the documented precedence, or
// nullopt when only the pattern oracle applies. `prefer_closed_theorem1`
// selects the truncated-power form over the reference E*B sum.
struct ClosedDispatch {
  ExactInt value;
  CountBranch branch;
};

std::optional<ClosedDispatch> dispatch_closed(const CountQuery& q,
                                              bool prefer_closed_theorem1) {
  const std::size_t n = q.period;
  const auto ni = static_cast<std::int64_t>(n);

  if (q.balls) {
    const std::int64_t b = *q.balls;
    // a ceiling at or above b*n constrains nothing
    if (!q.ceiling || ExactInt(*q.ceiling) >= ExactInt(b) * ni)
      return ClosedDispatch{count_unbounded(n, b), CountBranch::unbounded};
    const std::int64_t c = *q.ceiling;
    if ((c + 1) % ni == 0) {
      const std::int64_t a = (c + 1) / ni;
      if (a == 1)
        return ClosedDispatch{eulerian(n, b), CountBranch::eulerian};
      if (prefer_closed_theorem1)
        return ClosedDispatch{count_ceiling_multiple_closed(n, b, a),
                              CountBranch::theorem1_closed};
      return ClosedDispatch{count_ceiling_multiple(n, b, a),
                            CountBranch::theorem1_sum};
    }
    return std::nullopt;
  }

  const std::int64_t c = *q.ceiling;  // presence checked by the caller
  if (c <= ni - 1)
    return ClosedDispatch{count_all_balls_small_ceiling(n, c, q.node_budget),
                          small_ceiling_branch(n, c)};
  return std::nullopt;
}

ExactInt run_pattern_oracle(const CountQuery& q) {
  EnumerationSpec spec;
  spec.period = q.period;
  spec.balls = q.balls;
  spec.ceiling = q.ceiling;
  spec.node_budget = q.node_budget;
  return count_patterns_oracle(spec);
}

}  // namespace

std::string_view to_string(CountBranch branch) {
  switch (branch) {
    case CountBranch::unbounded: return "unbounded";
    case CountBranch::theorem1_sum: return "theorem1-sum";
    case CountBranch::theorem1_closed: return "theorem1-closed";
    case CountBranch::eulerian: return "eulerian";
    case CountBranch::factorial: return "factorial";
    case CountBranch::rook_derangement: return "rook-derangement";
    case CountBranch::rook_menage: return "rook-menage";
    case CountBranch::rook_oracle: return "rook-oracle";
    case CountBranch::pattern_oracle: return "pattern-oracle";
  }
  return "unknown";
}

std::string_view to_string(CountMethod method) {
  switch (method) {
    case CountMethod::automatic: return "auto";
    case CountMethod::closed_form: return "closed";
    case CountMethod::oracle: return "oracle";
    case CountMethod::both: return "both";
  }
  return "unknown";
}

ExactInt count_unbounded(std::size_t n, std::int64_t b) {
  check_period(n);
  if (b < 0) throw std::invalid_argument("count: balls must be >= 0");
  return truncated_pow(ExactInt(b) + 1, n) - truncated_pow(ExactInt(b), n);
}

ExactInt count_ceiling_multiple(std::size_t n, std::int64_t b,
                                std::int64_t a) {
  check_period(n);
  if (b < 0) throw std::invalid_argument("count: balls must be >= 0");
  if (a < 1)
    throw std::invalid_argument("count: ceiling multiplier must be >= 1");
  const auto row = eulerian_row(n);
  ExactInt sum = 0;
  for (std::size_t k = 0; k < n; ++k)
    sum += row[k] *
           bounded_compositions(n, b - static_cast<std::int64_t>(k), a - 1);
  return sum;
}

ExactInt count_ceiling_multiple_closed(std::size_t n, std::int64_t b,
                                       std::int64_t a) {
  check_period(n);
  if (b < 0) throw std::invalid_argument("count: balls must be >= 0");
  if (a < 1)
    throw std::invalid_argument("count: ceiling multiplier must be >= 1");
  ExactInt sum = 0;
  for (std::int64_t i = 0; i <= static_cast<std::int64_t>(n); ++i) {
    const ExactInt base = ExactInt(b) - ExactInt(i) * a;
    const ExactInt bracket =
        truncated_pow(base + 1, n) - truncated_pow(base, n);
    const ExactInt term = binomial(static_cast<std::int64_t>(n), i) * bracket;
    sum += (i % 2 == 0) ? term : -term;
  }
  return sum;
}

ExactInt derangement_count(std::size_t n) {
  if (n < 1) throw std::invalid_argument("derangement_count: n must be >= 1");
  ExactInt sum = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    const ExactInt term = binomial(static_cast<std::int64_t>(n),
                                   static_cast<std::int64_t>(k)) *
                          factorial(n - k);
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

ExactInt menage_count(std::size_t n) {
  if (n < 3) throw std::invalid_argument("menage_count: n must be >= 3");
  ExactInt sum = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    const std::int64_t denom = static_cast<std::int64_t>(2 * n - k);
    // 2n C(2n-k, k) (n-k)! / (2n-k), division last and always exact
    ExactInt term = ExactInt(2 * n) *
                    binomial(ExactInt(denom), static_cast<std::int64_t>(k)) *
                    factorial(n - k);
    if (term % denom != 0)
      throw std::logic_error("menage_count: non-exact division");
    term /= denom;
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

ExactInt count_all_balls_small_ceiling(std::size_t n, std::int64_t c,
                                       std::uint64_t node_budget) {
  check_period(n);
  const auto ni = static_cast<std::int64_t>(n);
  if (c < 0 || c > ni - 1)
    throw std::invalid_argument(
        "count_all_balls_small_ceiling: ceiling must be in [0, period-1]");
  switch (small_ceiling_branch(n, c)) {
    case CountBranch::factorial: return factorial(n);
    case CountBranch::rook_derangement: return derangement_count(n);
    case CountBranch::rook_menage: return menage_count(n);
    default:
      return rook_oracle(static_cast<std::size_t>(ni - c - 1), n, node_budget);
  }
}

CountResult count(const CountQuery& query) {
  check_period(query.period);
  if (query.balls && *query.balls < 0)
    throw std::invalid_argument("count: balls must be >= 0");
  if (query.ceiling && *query.ceiling < 0)
    throw std::invalid_argument("count: ceiling must be >= 0");
  if (!query.balls && !query.ceiling)
    throw std::invalid_argument(
        "count: counting all ball counts requires a ceiling");

  switch (query.method) {
    case CountMethod::oracle:
      return CountResult{run_pattern_oracle(query),
                         CountBranch::pattern_oracle, false};

    case CountMethod::closed_form: {
      auto closed = dispatch_closed(query, /*prefer_closed_theorem1=*/true);
      if (!closed)
        throw NoClosedForm(
            "no closed form applies to this query; use method auto, oracle "
            "or both");
      return CountResult{std::move(closed->value), closed->branch, false};
    }

    case CountMethod::automatic: {
      auto closed = dispatch_closed(query, /*prefer_closed_theorem1=*/false);
      if (!closed)
        return CountResult{run_pattern_oracle(query),
                           CountBranch::pattern_oracle, false};
      return CountResult{std::move(closed->value), closed->branch, false};
    }

    case CountMethod::both: {
      auto closed = dispatch_closed(query, /*prefer_closed_theorem1=*/false);
      if (!closed)
        return CountResult{run_pattern_oracle(query),
                           CountBranch::pattern_oracle, false};
      const ExactInt from_oracle = run_pattern_oracle(query);
      if (closed->value != from_oracle)
        throw CrossCheckError(
            "closed form (" + std::string(to_string(closed->branch)) + " = " +
            closed->value.str() + ") disagrees with the oracle (" +
            from_oracle.str() + ")");
      return CountResult{std::move(closed->value), closed->branch, true};
    }
  }
  throw std::invalid_argument("count: unknown method");
}

}  // namespace siteswap
