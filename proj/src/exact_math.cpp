#include "siteswap/exact_math.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace siteswap {

namespace {

ExactInt pow_nonneg(const ExactInt& base, std::size_t exp) {
  ExactInt result = 1;
  ExactInt b = base;
  std::size_t e = exp;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

// Shared grow-only cache of Eulerian rows. Extended under a lock; values are
// handed out by copy so callers never observe a row mid-build.
class SharedEulerianRows {
 public:
  std::vector<ExactInt> row(std::size_t n) {
    std::scoped_lock lock(mutex_);
    while (rows_.size() < n) {
      if (rows_.empty()) {
        rows_.push_back({1});
        continue;
      }
      const auto& prev = rows_.back();
      const std::size_t m = rows_.size() + 1;  // row being built
      std::vector<ExactInt> next(m);
      for (std::size_t k = 0; k < m; ++k) {
        ExactInt value = 0;
        if (k < prev.size()) value += ExactInt(k + 1) * prev[k];
        if (k >= 1) value += ExactInt(m - k) * prev[k - 1];
        next[k] = std::move(value);
      }
      rows_.push_back(std::move(next));
    }
    return rows_[n - 1];
  }

 private:
  std::mutex mutex_;
  std::vector<std::vector<ExactInt>> rows_;
};

SharedEulerianRows& shared_rows() {
  static SharedEulerianRows rows;
  return rows;
}

}  // namespace

ExactInt truncated_pow(const ExactInt& base, std::size_t exp) {
  if (base < 0) return 0;
  return pow_nonneg(base, exp);
}

ExactInt binomial(const ExactInt& m, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("binomial: k must be nonnegative");
  if (m < 0 || m < k) return 0;
  ExactInt result = 1;
  // prefix products of consecutive integers divide exactly at every step
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= m - k + i;
    result /= i;
  }
  return result;
}

ExactInt factorial(std::size_t n) {
  ExactInt result = 1;
  for (std::size_t i = 2; i <= n; ++i) result *= i;
  return result;
}

EulerianTable::EulerianTable(std::size_t max_n) {
  rows_.reserve(max_n);
  std::vector<ExactInt> prev;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<ExactInt> row(n);
    if (n == 1) {
      row[0] = 1;
    } else {
      for (std::size_t k = 0; k < n; ++k) {
        ExactInt value = 0;
        if (k < prev.size()) value += ExactInt(k + 1) * prev[k];
        if (k >= 1) value += ExactInt(n - k) * prev[k - 1];
        row[k] = std::move(value);
      }
    }
    prev = row;
    rows_.push_back(std::move(row));
  }
}

const std::vector<ExactInt>& EulerianTable::row(std::size_t n) const {
  if (n < 1 || n > rows_.size())
    throw std::out_of_range("EulerianTable: row " + std::to_string(n) +
                            " not in [1, " + std::to_string(rows_.size()) +
                            "]");
  return rows_[n - 1];
}

const ExactInt& EulerianTable::at(std::size_t n, std::size_t k) const {
  const auto& r = row(n);
  if (k >= r.size())
    throw std::out_of_range("EulerianTable: k out of range");
  return r[k];
}

ExactInt eulerian(std::size_t n, std::int64_t k) {
  if (n < 1) throw std::invalid_argument("eulerian: n must be >= 1");
  if (k < 0 || k >= static_cast<std::int64_t>(n)) return 0;
  return shared_rows().row(n)[static_cast<std::size_t>(k)];
}

std::vector<ExactInt> eulerian_row(std::size_t n) {
  if (n < 1) throw std::invalid_argument("eulerian_row: n must be >= 1");
  return shared_rows().row(n);
}

ExactInt eulerian_explicit(std::size_t n, std::size_t k) {
  if (n < 1) throw std::invalid_argument("eulerian_explicit: n must be >= 1");
  if (k >= n)
    throw std::domain_error("eulerian_explicit: k must be in [0, n-1]");
  const std::int64_t ki = static_cast<std::int64_t>(k);
  ExactInt sum = 0;
  for (std::int64_t i = 0; i <= static_cast<std::int64_t>(n); ++i) {
    const ExactInt bracket = truncated_pow(ExactInt(ki - i + 1), n) -
                             truncated_pow(ExactInt(ki - i), n);
    const ExactInt term = binomial(static_cast<std::int64_t>(n), i) * bracket;
    sum += (i % 2 == 0) ? term : -term;
  }
  return sum;
}

ExactInt compositions(std::size_t n, std::int64_t b) {
  if (n < 1) throw std::invalid_argument("compositions: n must be >= 1");
  if (b < 0) return 0;
  return binomial(ExactInt(n) + b - 1, static_cast<std::int64_t>(n) - 1);
}

ExactInt bounded_compositions(std::size_t n, std::int64_t b, std::int64_t a) {
  if (n < 1)
    throw std::invalid_argument("bounded_compositions: n must be >= 1");
  if (b < 0 || a < 0) return 0;
  ExactInt sum = 0;
  for (std::int64_t i = 0; i <= static_cast<std::int64_t>(n); ++i) {
    const ExactInt top = ExactInt(n) + b - 1 - ExactInt(i) * (ExactInt(a) + 1);
    const ExactInt term =
        binomial(static_cast<std::int64_t>(n), i) *
        binomial(top, static_cast<std::int64_t>(n) - 1);
    sum += (i % 2 == 0) ? term : -term;
  }
  return sum;
}

ExactInt worpitzky_rhs(std::size_t x, std::size_t n) {
  if (n < 1) throw std::invalid_argument("worpitzky_rhs: n must be >= 1");
  const auto row = eulerian_row(n);
  ExactInt sum = 0;
  for (std::size_t k = 0; k < n; ++k)
    sum += row[k] * binomial(ExactInt(x) + k, static_cast<std::int64_t>(n));
  return sum;
}

}  // namespace siteswap
