#pragma once

#include <cstdint>
#include <vector>

#include "upnat/func.hpp"
#include "upnat/upset.hpp"

namespace upnat::oracle {

/// {x <= limit | f(x) in s} by direct evaluation. Throws std::domain_error
/// if f is a table shorter than limit + 1.
std::vector<Nat> brute_preimage(const FuncSpec& f, const UPSet& s, Nat limit);

/// Pointwise agreement on [0, limit].
bool sets_equal_upto(const UPSet& lhs, const UPSet& rhs, Nat limit);

/// max(q1, q2) + 2 lcm(r1, r2): agreement on [0, window] implies equality.
Nat sufficient_window(const UPSet& lhs, const UPSet& rhs);

/**
 * 64-bit linear congruential generator, state' = a state + c (mod 2^64) with
 * Knuth's MMIX constants a = 6364136223846793005, c = 1442695040888963407.
 * Outputs are the high 32 bits of the new state.
 */
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint32_t next() {
    state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<std::uint32_t>(state_ >> 32);
  }
  /// Uniform-ish in [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

/// Threshold in [0, max_q], period in [1, max_r], each window bit a fair
/// coin. Throws std::invalid_argument for max_r = 0.
UPSet random_upset(std::uint64_t seed, Nat max_q, Nat max_r);

/**
 * Degree in [0, max_deg], coefficients in [0, max_coeff]. One draw in eight
 * is replaced by the constant c0, and one in eight by the non-monotone
 * c x^2 - (c+1) x + (c+1) + c0 (c >= 1), which stays non-negative on N.
 */
FuncSpec random_polynomial(std::uint64_t seed, Nat max_deg, Nat max_coeff);

}  // namespace upnat::oracle
