#include "siteswap/exact_math.hpp"

#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

using siteswap::ExactInt;

namespace {

// Independent oracle: count n-tuples of nonnegative integers summing to b
// with every entry <= cap, by explicit recursion over positions.
std::int64_t brute_capped_tuples(std::size_t n, std::int64_t b, std::int64_t cap) {
  if (b < 0) return 0;
  if (n == 0) return b == 0 ? 1 : 0;
  std::int64_t total = 0;
  for (std::int64_t v = 0; v <= cap && v <= b; ++v)
    total += brute_capped_tuples(n - 1, b - v, cap);
  return total;
}

// Independent oracle: census of permutations of {0..n-1} by the number of
// positions with p_i < i.
std::vector<std::int64_t> brute_descent_census(std::size_t n) {
  std::vector<std::int64_t> census(n, 0);
  std::vector<std::int64_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (perm[i] < static_cast<std::int64_t>(i)) ++k;
    ++census[k];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return census;
}

ExactInt plain_pow(ExactInt base, std::size_t exp) {
  ExactInt r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

TEST_CASE("binomial: direct values and conventions") {
  CHECK(siteswap::binomial(4, 2) == 6);
  CHECK(siteswap::binomial(-1, 3) == 0);
  CHECK(siteswap::binomial(7, 0) == 1);
  CHECK(siteswap::binomial(0, 0) == 1);
  CHECK(siteswap::binomial(3, 5) == 0);
  CHECK(siteswap::binomial(30, 15) == 155117520);
  CHECK_THROWS_AS(siteswap::binomial(4, -1), std::invalid_argument);
}

TEST_CASE("binomial: Pascal property for 1 <= k <= m <= 30") {
  for (std::int64_t m = 1; m <= 30; ++m)
    for (std::int64_t k = 1; k <= m; ++k)
      CHECK(siteswap::binomial(m, k) ==
            siteswap::binomial(m - 1, k - 1) + siteswap::binomial(m - 1, k));
}

TEST_CASE("factorial: values and Eulerian row sums") {
  CHECK(siteswap::factorial(0) == 1);
  CHECK(siteswap::factorial(4) == 24);
  CHECK(siteswap::factorial(6) == 720);
  ExactInt row6_sum = 0;
  for (const auto& e : siteswap::eulerian_row(6)) row6_sum += e;
  CHECK(row6_sum == siteswap::factorial(6));
}

TEST_CASE("eulerian: triangle values") {
  CHECK(siteswap::eulerian(4, 1) == 11);
  CHECK(siteswap::eulerian(6, 2) == 302);
  CHECK(siteswap::eulerian(5, 0) == 1);
  CHECK(siteswap::eulerian(3, 1) == 4);
  CHECK(siteswap::eulerian(5, 2) == 66);
  // out-of-range k
  CHECK(siteswap::eulerian(4, -1) == 0);
  CHECK(siteswap::eulerian(4, 4) == 0);
  CHECK_THROWS_AS(siteswap::eulerian(0, 0), std::invalid_argument);
}

TEST_CASE("eulerian_row: rows of the triangle") {
  CHECK(siteswap::eulerian_row(1) == std::vector<ExactInt>{1});
  CHECK(siteswap::eulerian_row(4) == std::vector<ExactInt>{1, 11, 11, 1});
  CHECK(siteswap::eulerian_row(6) ==
        std::vector<ExactInt>{1, 57, 302, 302, 57, 1});
}

TEST_CASE("eulerian: row sum and symmetry identities up to n = 10") {
  for (std::size_t n = 1; n <= 10; ++n) {
    ExactInt sum = 0;
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(n); ++k) {
      sum += siteswap::eulerian(n, k);
      CHECK(siteswap::eulerian(n, k) ==
            siteswap::eulerian(n, static_cast<std::int64_t>(n) - k - 1));
    }
    CHECK(sum == siteswap::factorial(n));
  }
}

TEST_CASE("eulerian: matches a permutation census") {
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto census = brute_descent_census(n);
    for (std::size_t k = 0; k < n; ++k)
      CHECK(siteswap::eulerian(n, static_cast<std::int64_t>(k)) == census[k]);
  }
}

TEST_CASE("EulerianTable: structure matches the memoized recursion") {
  siteswap::EulerianTable table(10);
  CHECK(table.max_n() == 10);
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto& row = table.row(n);
    REQUIRE(row.size() == n);
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(row[k] >= 1);
      CHECK(row[k] == siteswap::eulerian(n, static_cast<std::int64_t>(k)));
      CHECK(table.at(n, k) == row[k]);
    }
  }
  CHECK_THROWS_AS(table.row(0), std::out_of_range);
  CHECK_THROWS_AS(table.row(11), std::out_of_range);
}

TEST_CASE("eulerian_explicit: paper values and agreement with the recursion") {
  CHECK(siteswap::eulerian_explicit(4, 2) == 11);
  CHECK(siteswap::eulerian_explicit(3, 0) == 1);
  CHECK(siteswap::eulerian_explicit(5, 2) == 66);
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t k = 0; k < n; ++k)
      CHECK(siteswap::eulerian_explicit(n, k) ==
            siteswap::eulerian(n, static_cast<std::int64_t>(k)));
  CHECK_THROWS_AS(siteswap::eulerian_explicit(4, 4), std::domain_error);
}

TEST_CASE("eulerian_explicit: plain powers would collapse the sum to zero") {
  // The alternating sum is an n-th finite difference of x^n when evaluated
  // with plain powers, so it cancels identically; the truncated-power cutoff
  // is what the implementation must apply.
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t k = 0; k < n; ++k) {
      ExactInt plain = 0;
      for (std::size_t i = 0; i <= n; ++i) {
        const ExactInt term =
            siteswap::binomial(static_cast<std::int64_t>(n),
                               static_cast<std::int64_t>(i)) *
            (plain_pow(ExactInt(static_cast<std::int64_t>(k) -
                                static_cast<std::int64_t>(i) + 1),
                       n) -
             plain_pow(ExactInt(static_cast<std::int64_t>(k) -
                                static_cast<std::int64_t>(i)),
                       n));
        plain += (i % 2 == 0) ? term : -term;
      }
      CHECK(plain == 0);
      CHECK(siteswap::eulerian_explicit(n, k) > 0);
    }
}

TEST_CASE("compositions: stars-and-bars values") {
  CHECK(siteswap::compositions(2, 3) == 4);  // (0,3) (1,2) (2,1) (3,0)
  CHECK(siteswap::compositions(3, 0) == 1);
  CHECK(siteswap::compositions(4, -1) == 0);
  CHECK(siteswap::compositions(1, 7) == 1);
}

TEST_CASE("bounded_compositions: direct values") {
  CHECK(siteswap::bounded_compositions(3, 2, 1) == 3);
  CHECK(siteswap::bounded_compositions(2, 1, 0) == 0);
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(siteswap::bounded_compositions(n, 0, 0) == 1);
    CHECK(siteswap::bounded_compositions(n, 0, 7) == 1);
  }
  CHECK(siteswap::bounded_compositions(3, -2, 4) == 0);
  CHECK(siteswap::bounded_compositions(3, 2, -1) == 0);
}

TEST_CASE("bounded_compositions: brute-force sweep and uncapped agreement") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::int64_t b = 0; b <= 10; ++b)
      for (std::int64_t a = 0; a <= 10; ++a) {
        CHECK(siteswap::bounded_compositions(n, b, a) ==
              brute_capped_tuples(n, b, a));
        if (a >= b)
          CHECK(siteswap::bounded_compositions(n, b, a) ==
                siteswap::compositions(n, b));
      }
}

TEST_CASE("worpitzky_rhs: direct values") {
  CHECK(siteswap::worpitzky_rhs(2, 2) == 4);  // 1*C(2,2) + 1*C(3,2)
  CHECK(siteswap::worpitzky_rhs(0, 3) == 0);
  CHECK(siteswap::worpitzky_rhs(1, 3) == 1);  // only E(3,2) C(3,3) survives
}

TEST_CASE("worpitzky_rhs: equals x^n for 0 <= x <= 20, 1 <= n <= 8") {
  for (std::size_t x = 0; x <= 20; ++x)
    for (std::size_t n = 1; n <= 8; ++n)
      CHECK(siteswap::worpitzky_rhs(x, n) == plain_pow(ExactInt(x), n));
}

TEST_CASE("truncated_pow: cutoff below zero") {
  CHECK(siteswap::truncated_pow(3, 4) == 81);
  CHECK(siteswap::truncated_pow(0, 4) == 0);
  CHECK(siteswap::truncated_pow(0, 0) == 1);
  CHECK(siteswap::truncated_pow(-1, 4) == 0);
  CHECK(siteswap::truncated_pow(-7, 3) == 0);
}
