#include "siteswap/pattern.hpp"

#include "siteswap/exact_math.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace siteswap {

namespace {

void check_well_formed(const ThrowSequence& seq) {
  if (seq.heights.empty())
    throw std::invalid_argument("throw sequence must have period >= 1");
  for (const auto h : seq.heights)
    if (h < 0)
      throw std::invalid_argument(
          "throw heights must be nonnegative, got " + std::to_string(h));
}

void check_permutation(std::span<const std::int64_t> perm) {
  const std::size_t n = perm.size();
  if (n == 0) throw std::invalid_argument("permutation must have length >= 1");
  std::vector<bool> seen(n, false);
  for (const auto p : perm) {
    if (p < 0 || p >= static_cast<std::int64_t>(n))
      throw std::invalid_argument("permutation entry " + std::to_string(p) +
                                  " out of range [0, " + std::to_string(n) +
                                  ")");
    if (seen[static_cast<std::size_t>(p)])
      throw std::invalid_argument("permutation repeats entry " +
                                  std::to_string(p));
    seen[static_cast<std::size_t>(p)] = true;
  }
}

}  // namespace

std::vector<std::string> ValidationReport::violation_messages() const {
  std::vector<std::string> messages;
  for (const auto& c : collisions) {
    std::ostringstream os;
    os << "beats " << c.first_beat << " and " << c.second_beat
       << " both land at slot " << c.slot;
    messages.push_back(os.str());
  }
  if (sum_remainder != 0) {
    std::ostringstream os;
    os << "height sum leaves remainder " << sum_remainder
       << " modulo the period";
    messages.push_back(os.str());
  }
  return messages;
}

ValidationReport validate(const ThrowSequence& seq) {
  check_well_formed(seq);
  const std::size_t n = seq.period();
  const auto ni = static_cast<std::int64_t>(n);

  ValidationReport report;

  // landing condition: (i + h_i) mod n pairwise distinct
  std::vector<std::vector<std::size_t>> beats_by_slot(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t slot =
        (seq.heights[i] % ni + static_cast<std::int64_t>(i)) % ni;
    beats_by_slot[static_cast<std::size_t>(slot)].push_back(i);
  }
  for (std::size_t slot = 0; slot < n; ++slot) {
    const auto& beats = beats_by_slot[slot];
    for (std::size_t x = 0; x + 1 < beats.size(); ++x)
      for (std::size_t y = x + 1; y < beats.size(); ++y)
        report.collisions.push_back(LandingCollision{
            beats[x], beats[y], static_cast<std::int64_t>(slot)});
  }

  // average condition: sum h_i = b n
  ExactInt sum = 0;
  for (const auto h : seq.heights) sum += h;
  report.sum_remainder = ExactInt(sum % ni).convert_to<std::int64_t>();
  if (report.collisions.empty() && report.sum_remainder == 0) {
    report.valid = true;
    report.balls = ExactInt(sum / ni).convert_to<std::int64_t>();
  }
  return report;
}

JugglingPattern JugglingPattern::checked(ThrowSequence seq) {
  const auto report = validate(seq);
  if (!report.valid) {
    std::string what = "not a valid pattern:";
    for (const auto& message : report.violation_messages())
      what += " " + message + ";";
    what.pop_back();
    throw std::invalid_argument(what);
  }
  return JugglingPattern(std::move(seq), report.balls);
}

std::size_t descent_count(std::span<const std::int64_t> perm) {
  check_permutation(perm);
  std::size_t count = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] < static_cast<std::int64_t>(i)) ++count;
  return count;
}

JugglingPattern construct(std::span<const std::int64_t> perm,
                          std::span<const std::int64_t> b_vec) {
  check_permutation(perm);
  if (b_vec.size() != perm.size())
    throw std::invalid_argument("perm and b_vec must have equal length");
  const std::size_t n = perm.size();
  const auto ni = static_cast<std::int64_t>(n);

  ThrowSequence seq;
  seq.heights.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t ii = static_cast<std::int64_t>(i);
    if (b_vec[i] < 0)
      throw std::invalid_argument("b_" + std::to_string(i) +
                                  " must be nonnegative");
    if (perm[i] < ii && b_vec[i] < 1)
      throw std::invalid_argument("b_" + std::to_string(i) +
                                  " must be >= 1 at descent position " +
                                  std::to_string(i));
    const ExactInt height = ExactInt(perm[i]) - ii + ExactInt(ni) * b_vec[i];
    if (height > std::numeric_limits<std::int64_t>::max())
      throw std::overflow_error("constructed height exceeds the 64-bit range");
    seq.heights.push_back(height.convert_to<std::int64_t>());
  }
  return JugglingPattern::checked(std::move(seq));
}

Decomposition decompose(const JugglingPattern& pattern) {
  const std::size_t n = pattern.period();
  const auto ni = static_cast<std::int64_t>(n);
  const auto& heights = pattern.heights();

  Decomposition d;
  d.perm.reserve(n);
  d.b_vec.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t ii = static_cast<std::int64_t>(i);
    const std::int64_t p = (heights[i] % ni + ii) % ni;
    d.perm.push_back(p);
    const ExactInt carry = (ExactInt(heights[i]) + ii - p) / ni;
    d.b_vec.push_back(carry.convert_to<std::int64_t>());
    if (p < ii) ++d.descents;
  }
  return d;
}

}  // namespace siteswap
