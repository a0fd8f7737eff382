//
// pattern.hpp
//
// Siteswap pattern representation: the two validity conditions (one landing
// per beat slot, height sum divisible by the period), ball counting, and the
// P - Q + nB decomposition that splits every valid pattern into a landing
// permutation P, the fixed ramp Q = (0,1,...,n-1) and a nonnegative carry
// vector B.
//

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace siteswap {

// A raw ordered list of throw heights, one per beat. Not necessarily a valid
// pattern. Heights are measured in beats (the interval between two throws)
// and must be nonnegative.
struct ThrowSequence {
  std::vector<std::int64_t> heights;

  std::size_t period() const { return heights.size(); }

  bool operator==(const ThrowSequence&) const = default;
};

// Two beats whose throws land in the same slot modulo the period.
struct LandingCollision {
  std::size_t first_beat = 0;
  std::size_t second_beat = 0;
  std::int64_t slot = 0;  // common landing slot, in [0, period)

  bool operator==(const LandingCollision&) const = default;
};

// Result of checking both validity conditions. Lists every colliding beat
// pair and the height-sum remainder rather than stopping at the first
// violation.
struct ValidationReport {
  bool valid = false;
  std::int64_t balls = 0;  // (sum of heights) / period, meaningful when valid
  std::vector<LandingCollision> collisions;
  std::int64_t sum_remainder = 0;  // sum of heights mod period

  // Human-readable violation lines, empty when valid.
  std::vector<std::string> violation_messages() const;
};

// Checks the landing condition ((i + h_i) mod n pairwise distinct) and the
// average condition (sum h_i = b n). Invalidity is reported, not thrown.
// Throws std::invalid_argument for malformed input (empty sequence or a
// negative height).
ValidationReport validate(const ThrowSequence& seq);

// A ThrowSequence that passed validation, together with its ball count.
class JugglingPattern {
 public:
  // Validates and wraps; throws std::invalid_argument listing every
  // violation when the sequence is not a pattern.
  static JugglingPattern checked(ThrowSequence seq);

  const ThrowSequence& sequence() const { return seq_; }
  const std::vector<std::int64_t>& heights() const { return seq_.heights; }
  std::size_t period() const { return seq_.period(); }
  std::int64_t balls() const { return balls_; }

  bool operator==(const JugglingPattern&) const = default;

 private:
  JugglingPattern(ThrowSequence seq, std::int64_t balls)
      : seq_(std::move(seq)), balls_(balls) {}

  ThrowSequence seq_;
  std::int64_t balls_ = 0;
};

// The (P, B) pair of the P - Q + nB split, with the descent count
// k = |{i : p_i < i}| that indexes the Eulerian numbers.
struct Decomposition {
  std::vector<std::int64_t> perm;   // P: a permutation of {0,...,n-1}
  std::vector<std::int64_t> b_vec;  // B: nonnegative, b_i >= 1 where p_i < i
  std::size_t descents = 0;

  bool operator==(const Decomposition&) const = default;
};

// |{i : p_i < i}|. Throws std::invalid_argument unless perm is a permutation
// of {0,...,n-1}.
std::size_t descent_count(std::span<const std::int64_t> perm);

// Builds the pattern with h_i = p_i - i + n b_i. Requires b_i >= 1 at every
// position with p_i < i (otherwise h_i would be negative) and b_i >= 0
// elsewhere; violations throw std::invalid_argument. The result always
// satisfies both validity conditions.
JugglingPattern construct(std::span<const std::int64_t> perm,
                          std::span<const std::int64_t> b_vec);

// Inverts construct: p_i = (i + h_i) mod n, b_i = (h_i + i - p_i) / n.
// construct(decompose(p)) == p for every valid pattern.
Decomposition decompose(const JugglingPattern& pattern);

}  // namespace siteswap
