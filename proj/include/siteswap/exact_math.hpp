//
// exact_math.hpp
//
// Exact unbounded-integer combinatorial primitives: binomial coefficients,
// factorials, Eulerian numbers (recursive and explicit), compositions with
// and without an entry cap, and the Worpitzky expansion of x^n.
//
// Every value is an ExactInt; there is no floating point and no modular
// reduction anywhere in this module.
//

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace siteswap {

// Signed integer of unbounded magnitude. All counts in the library live here.
using ExactInt = boost::multiprecision::cpp_int;

// base^exp for base >= 0, and 0 for any negative base. The ceiling-count
// formulas are stated with plain powers but only hold when the terms with a
// negative base are dropped; this is the shared cutoff convention.
ExactInt truncated_pow(const ExactInt& base, std::size_t exp);

// C(m, k) under the combinatorial convention: 0 whenever m < 0 or m < k.
// Never the polynomial extension to negative upper index. k < 0 is rejected.
ExactInt binomial(const ExactInt& m, std::int64_t k);

// Exact n!.
ExactInt factorial(std::size_t n);

// Triangle of Eulerian numbers. Row n (1-based) holds E(n,0) .. E(n,n-1),
// the counts of permutations p of {0..n-1} with exactly k positions p_i < i,
// built from E(n,k) = (k+1) E(n-1,k) + (n-k) E(n-1,k-1) with E(1,0) = 1.
class EulerianTable {
 public:
  explicit EulerianTable(std::size_t max_n);

  std::size_t max_n() const { return rows_.size(); }
  const std::vector<ExactInt>& row(std::size_t n) const;
  const ExactInt& at(std::size_t n, std::size_t k) const;

 private:
  std::vector<std::vector<ExactInt>> rows_;
};

// E(n,k) via the recursion, memoized behind a shared read-after-build table.
// Returns 0 for k < 0 or k >= n. Requires n >= 1. Thread-safe.
ExactInt eulerian(std::size_t n, std::int64_t k);

// E(n,k) via the alternating-sum representation
//   sum_i (-1)^i C(n,i) [(k-i+1)^n - (k-i)^n]
// evaluated with truncated powers (see truncated_pow). Requires 0 <= k <= n-1.
ExactInt eulerian_explicit(std::size_t n, std::size_t k);

// [E(n,0), ..., E(n,n-1)].
std::vector<ExactInt> eulerian_row(std::size_t n);

// B(n,b): number of n-tuples of nonnegative integers summing to b,
// C(n+b-1, n-1). Zero for b < 0.
ExactInt compositions(std::size_t n, std::int64_t b);

// B(n,b,a): number of n-tuples of nonnegative integers summing to b with
// every entry <= a, by inclusion-exclusion over entries exceeding a:
//   sum_i (-1)^i C(n,i) C(n+b-1-i(a+1), n-1).
// Zero for b < 0 or a < 0.
ExactInt bounded_compositions(std::size_t n, std::int64_t b, std::int64_t a);

// Right-hand side of Worpitzky's identity, sum_k E(n,k) C(x+k, n).
// Equals x^n for every nonnegative integer x.
ExactInt worpitzky_rhs(std::size_t x, std::size_t n);

}  // namespace siteswap
