// Acceptance suite. Runs each acceptance criterion end to end and prints one
// PASS/FAIL line per criterion; exits nonzero if any criterion fails.

#include "siteswap/closed_forms.hpp"
#include "siteswap/enumeration.hpp"
#include "siteswap/exact_math.hpp"
#include "siteswap/notation.hpp"
#include "siteswap/pattern.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#ifndef SITESWAP_CLI_PATH
#error "SITESWAP_CLI_PATH must point at the built CLI binary"
#endif

namespace {

using siteswap::EnumerationSpec;
using siteswap::ExactInt;

struct Failure {
  std::string detail;
};

void require(bool condition, const std::string& detail) {
  if (!condition) throw Failure{detail};
}

struct CliRun {
  int exit_code = -1;
  std::string output;
};

CliRun run_cli(const std::string& args) {
  const std::string command =
      std::string(SITESWAP_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun result;
  FILE* pipe = popen(command.c_str(), "r");
  require(pipe != nullptr, "failed to launch CLI");
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
    result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

ExactInt oracle_count(std::size_t n, std::optional<std::int64_t> b,
                      std::int64_t c) {
  EnumerationSpec spec;
  spec.period = n;
  spec.balls = b;
  spec.ceiling = c;
  return siteswap::count_patterns_oracle(spec);
}

std::string fmt(const ExactInt& v) { return v.str(); }

// ---------------------------------------------------------------------------
// criteria
// ---------------------------------------------------------------------------

// J(4,5) = 671 through the CLI, including the oracle cross-check.
void criterion_1() {
  const auto plain = run_cli("count --period 4 --balls 5 --format json");
  require(plain.exit_code == 0, "count command failed");
  const auto doc = nlohmann::json::parse(plain.output);
  require(doc.at("count") == "671",
          "expected count 671, got " + doc.at("count").get<std::string>());
  require(doc.at("branch") == "unbounded", "expected the unbounded branch");

  const auto both =
      run_cli("count --period 4 --balls 5 --method both --format json");
  require(both.exit_code == 0, "count --method both failed");
  const auto both_doc = nlohmann::json::parse(both.output);
  require(both_doc.at("count") == "671", "cross-checked count mismatch");
  require(both_doc.at("cross_checked") == true,
          "oracle cross-check did not run");
}

// Eulerian triangle rows 1..6, by the recursion and by the explicit sum.
void criterion_2() {
  const std::vector<std::vector<ExactInt>> expected = {
      {1},
      {1, 1},
      {1, 4, 1},
      {1, 11, 11, 1},
      {1, 26, 66, 26, 1},
      {1, 57, 302, 302, 57, 1},
  };
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto row = siteswap::eulerian_row(n);
    require(row == expected[n - 1], "recursion row " + std::to_string(n));
    for (std::size_t k = 0; k < n; ++k)
      require(siteswap::eulerian_explicit(n, k) == expected[n - 1][k],
              "explicit formula at (" + std::to_string(n) + "," +
                  std::to_string(k) + ")");
  }
}

// Theorem-1 equivalence sweep: E*B sum, truncated closed form and oracle.
void criterion_3() {
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::int64_t b = 0; b <= 6; ++b)
      for (std::int64_t a = 1; a <= 3; ++a) {
        const std::int64_t c = a * static_cast<std::int64_t>(n) - 1;
        const auto via_sum = siteswap::count_ceiling_multiple(n, b, a);
        const auto via_closed =
            siteswap::count_ceiling_multiple_closed(n, b, a);
        const auto via_oracle = oracle_count(n, b, c);
        const std::string where = "(n=" + std::to_string(n) +
                                  ", b=" + std::to_string(b) +
                                  ", a=" + std::to_string(a) + ")";
        require(via_sum == via_closed, "sum vs closed at " + where);
        require(via_sum == via_oracle,
                "sum " + fmt(via_sum) + " vs oracle " + fmt(via_oracle) +
                    " at " + where);
      }
}

// Small-ceiling chain for 3 <= n <= 8.
void criterion_4() {
  for (std::size_t n = 3; n <= 8; ++n) {
    const std::int64_t ni = static_cast<std::int64_t>(n);
    const auto at = [&](std::int64_t c) {
      return siteswap::count_all_balls_small_ceiling(n, c);
    };
    require(at(ni - 1) == siteswap::factorial(n), "n! at ceiling n-1");
    require(at(ni - 1) == oracle_count(n, std::nullopt, ni - 1),
            "pattern count at ceiling n-1");

    const auto der = siteswap::derangement_count(n);
    require(at(ni - 2) == der, "derangement formula at ceiling n-2");
    require(der == siteswap::rook_oracle(1, n), "derangement vs rook(1,n)");
    require(der == oracle_count(n, std::nullopt, ni - 2),
            "pattern count at ceiling n-2");

    const auto men = siteswap::menage_count(n);
    require(at(ni - 3) == men, "menage formula at ceiling n-3");
    require(men == siteswap::rook_oracle(2, n), "menage vs rook(2,n)");
    require(men == oracle_count(n, std::nullopt, ni - 3),
            "pattern count at ceiling n-3");
  }
}

// Worpitzky's identity over 0 <= x <= 20, 1 <= n <= 8.
void criterion_5() {
  for (std::size_t x = 0; x <= 20; ++x)
    for (std::size_t n = 1; n <= 8; ++n) {
      ExactInt direct = 1;
      for (std::size_t i = 0; i < n; ++i) direct *= static_cast<int>(x);
      require(siteswap::worpitzky_rhs(x, n) == direct,
              "x=" + std::to_string(x) + ", n=" + std::to_string(n));
    }
}

// Round-trip properties for construct/decompose and parse/render.
void criterion_6() {
  // exhaustive: every legal (perm, b_vec) with n <= 5 and sum(B) <= 5
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::int64_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::int64_t> b_vec(n, 0);
      const std::function<void(std::size_t, std::int64_t)> rec =
          [&](std::size_t pos, std::int64_t used) {
            if (pos == n) {
              const auto pattern = siteswap::construct(perm, b_vec);
              const auto d = siteswap::decompose(pattern);
              require(d.perm == perm && d.b_vec == b_vec,
                      "decompose(construct) mismatch");
              require(siteswap::construct(d.perm, d.b_vec) == pattern,
                      "construct(decompose) mismatch");
              return;
            }
            const std::int64_t lo =
                perm[pos] < static_cast<std::int64_t>(pos) ? 1 : 0;
            for (std::int64_t v = lo; used + v <= 5; ++v) {
              b_vec[pos] = v;
              rec(pos + 1, used + v);
            }
            b_vec[pos] = 0;
          };
      rec(0, 0);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  // randomized larger cases
  std::mt19937 rng(6021023);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 14;
    std::vector<std::int64_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::int64_t> b_vec(n);
    for (std::size_t i = 0; i < n; ++i)
      b_vec[i] = (perm[i] < static_cast<std::int64_t>(i) ? 1 : 0) + rng() % 10;
    const auto pattern = siteswap::construct(perm, b_vec);
    const auto d = siteswap::decompose(pattern);
    require(d.perm == perm && d.b_vec == b_vec, "randomized decompose");
    require(siteswap::construct(d.perm, d.b_vec) == pattern,
            "randomized construct");
  }

  // parse / render round-trips; list-form text for a single throw carries no
  // comma and re-parses as compact digits, so list cases use period >= 2
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + rng() % 8;
    siteswap::ThrowSequence seq;
    for (std::size_t i = 0; i < n; ++i)
      seq.heights.push_back(static_cast<std::int64_t>(rng() % 120));
    require(siteswap::parse(siteswap::render(
                seq, siteswap::NotationForm::list)) == seq,
            "list-form round trip");
    require(siteswap::parse(siteswap::render_auto(seq)) == seq,
            "auto-form round trip");

    siteswap::ThrowSequence compact_seq;
    for (std::size_t i = 0; i < 1 + rng() % 9; ++i)
      compact_seq.heights.push_back(static_cast<std::int64_t>(rng() % 36));
    require(siteswap::parse(siteswap::render(
                compact_seq, siteswap::NotationForm::compact)) == compact_seq,
            "compact-form round trip");
  }
}

// Grouping all n! permutations by descent count reproduces the Eulerian rows.
void criterion_7() {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::vector<ExactInt> census(n, 0);
    std::vector<std::int64_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      ++census[siteswap::descent_count(perm)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    require(census == siteswap::eulerian_row(n),
            "census row " + std::to_string(n));
  }
}

// J(2,1,1) = 1 under truncation; the plain-power form collapses to 0.
void criterion_8() {
  require(oracle_count(2, 1, 1) == 1, "oracle count of {0,1}^2 patterns");
  require(siteswap::count_ceiling_multiple_closed(2, 1, 1) == 1,
          "truncated closed form");
  require(siteswap::count_ceiling_multiple(2, 1, 1) == 1, "E*B sum");

  ExactInt plain = 0;
  for (std::int64_t i = 0; i <= 2; ++i) {
    ExactInt hi = 1, lo = 1;
    for (int e = 0; e < 2; ++e) {
      hi *= ExactInt(1 - i + 1);
      lo *= ExactInt(1 - i);
    }
    const ExactInt term = siteswap::binomial(2, i) * (hi - lo);
    plain += (i % 2 == 0) ? term : -term;
  }
  require(plain == 0, "plain-power evaluation should collapse to 0");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"J(4,5) = 671 via the CLI, oracle cross-checked", criterion_1},
      {"Eulerian triangle rows 1-6 by recursion and explicit sum",
       criterion_2},
      {"Theorem-1 sweep (n<=5, b<=6, a<=3): sum = closed = oracle",
       criterion_3},
      {"small-ceiling chain 3<=n<=8: n!, derangements, menage, rook, oracle",
       criterion_4},
      {"Worpitzky identity for 0<=x<=20, 1<=n<=8", criterion_5},
      {"construct/decompose and parse/render round trips", criterion_6},
      {"descent census reproduces Eulerian rows for n<=7", criterion_7},
      {"J(2,1,1) = 1 pins the truncated-power convention", criterion_8},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& [name, fn] = criteria[i];
    try {
      fn();
      std::cout << "PASS  criterion " << (i + 1) << ": " << name << "\n";
    } catch (const Failure& f) {
      ++failures;
      std::cout << "FAIL  criterion " << (i + 1) << ": " << name << " ["
                << f.detail << "]\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL  criterion " << (i + 1) << ": " << name
                << " [unexpected error: " << e.what() << "]\n";
    }
  }

  if (failures == 0)
    std::cout << "all " << criteria.size() << " acceptance criteria passed\n";
  else
    std::cout << failures << " acceptance criteria failed\n";
  return failures == 0 ? 0 : 1;
}
