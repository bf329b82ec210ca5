#pragma once

// Test-only helpers: raw (non-canonical) set representations with a direct
// membership reading, independent of the library's canonicalization.

#include <algorithm>
#include <numeric>
#include <vector>

#include "upnat/oracle.hpp"
#include "upnat/upset.hpp"

namespace upnat::testing {

struct RawSet {
  std::vector<Nat> transient;
  Nat threshold = 0;
  Nat period = 1;
  std::vector<Nat> residues;

  bool member(Nat x) const {
    if (x < threshold) return std::find(transient.begin(), transient.end(), x) != transient.end();
    return std::find(residues.begin(), residues.end(), x % period) != residues.end();
  }

  UPSet canonical() const { return UPSet::make(transient, threshold, period, residues); }
};

inline RawSet random_raw(oracle::Lcg64& rng, Nat max_q, Nat max_r) {
  RawSet raw;
  raw.threshold = rng.below(max_q + 1);
  raw.period = 1 + rng.below(max_r);
  // Bias toward sparse or dense sets now and then so canonicalization has
  // something to collapse.
  const Nat density = rng.below(4);
  auto coin = [&] { return density == 0 ? rng.below(4) == 0 : density == 1 ? rng.below(4) != 0 : rng.below(2) == 1; };
  for (Nat x = 0; x < raw.threshold; ++x) {
    if (coin()) raw.transient.push_back(x);
  }
  for (Nat b = 0; b < raw.period; ++b) {
    if (coin()) raw.residues.push_back(b);
  }
  // Sometimes repeat a smaller pattern so the minimal period is a proper divisor.
  if (rng.below(3) == 0 && raw.period > 1) {
    const Nat d = 1 + rng.below(raw.period);
    if (raw.period % d == 0) {
      std::vector<Nat> repeated;
      for (Nat b = 0; b < raw.period; ++b) {
        if (std::find(raw.residues.begin(), raw.residues.end(), b % d) != raw.residues.end()) {
          repeated.push_back(b);
        }
      }
      raw.residues = repeated;
    }
  }
  return raw;
}

/// Pointwise membership of an arbitrary predicate over [0, limit].
template <class Pred>
std::vector<Nat> enumerate_pred(Pred pred, Nat limit) {
  std::vector<Nat> out;
  for (Nat x = 0; x <= limit; ++x) {
    if (pred(x)) out.push_back(x);
  }
  return out;
}

inline Nat lcm(Nat a, Nat b) { return std::lcm(a, b); }

}  // namespace upnat::testing
