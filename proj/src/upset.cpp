#include "upnat/upset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace upnat {

namespace {

void check_window(Nat threshold, Nat period) {
  if (threshold > kMaxWindow || period > kMaxWindow || threshold + period > kMaxWindow) {
    throw std::length_error("window " + std::to_string(threshold) + "+" +
                            std::to_string(period) + " exceeds representation limit");
  }
}

// Smallest d | period such that tail[j] == tail[j mod d] for all j.
Nat minimal_period(const std::vector<bool>& tail) {
  const Nat period = tail.size();
  for (Nat d = 1; d < period; ++d) {
    if (period % d != 0) continue;
    bool ok = true;
    for (Nat j = d; j < period && ok; ++j) ok = tail[j] == tail[j - d];
    if (ok) return d;
  }
  return period;
}

}  // namespace

UPSet::UPSet() = default;

UPSet UPSet::from_window(Nat threshold, Nat period, const std::vector<bool>& bits) {
  if (period == 0) throw std::invalid_argument("period must be positive");
  check_window(threshold, period);
  if (bits.size() != threshold + period) {
    throw std::invalid_argument("window size does not match threshold + period");
  }

  const std::vector<bool> tail(bits.begin() + static_cast<std::ptrdiff_t>(threshold), bits.end());
  const Nat d = minimal_period(tail);

  // Pull the threshold down while the element just below it agrees with the
  // periodic prediction.
  Nat q = threshold;
  while (q > 0) {
    const Nat back = (threshold - (q - 1)) % d;
    const Nat idx = (d - back) % d;
    if (bits[q - 1] != tail[idx]) break;
    --q;
  }

  UPSet out;
  out.threshold_ = q;
  out.period_ = d;
  for (Nat x = 0; x < q; ++x) {
    if (bits[x]) out.transient_.push_back(x);
  }
  for (Nat x = q; x < q + d; ++x) {
    // x >= q, so its membership is the tail value at (x - threshold) mod d,
    // taken as a non-negative residue.
    const Nat idx = x >= threshold ? (x - threshold) % d : (d - (threshold - x) % d) % d;
    if (tail[idx]) out.residues_.push_back(x % d);
  }
  std::sort(out.residues_.begin(), out.residues_.end());
  return out;
}

UPSet UPSet::make(std::span<const Nat> transient, Nat threshold, Nat period,
                  std::span<const Nat> residues) {
  if (period == 0) throw std::invalid_argument("period must be positive");
  check_window(threshold, period);
  std::vector<bool> bits(threshold + period, false);
  for (Nat x : transient) {
    if (x >= threshold) {
      throw std::invalid_argument("transient element " + std::to_string(x) +
                                  " is not below threshold " + std::to_string(threshold));
    }
    bits[x] = true;
  }
  std::vector<bool> classes(period, false);
  for (Nat b : residues) {
    if (b >= period) {
      throw std::invalid_argument("residue " + std::to_string(b) + " is not below period " +
                                  std::to_string(period));
    }
    classes[b] = true;
  }
  for (Nat x = threshold; x < threshold + period; ++x) bits[x] = classes[x % period];
  return from_window(threshold, period, bits);
}

UPSet UPSet::naturals() {
  const Nat zero = 0;
  return make({}, 0, 1, std::span<const Nat>(&zero, 1));
}

UPSet UPSet::finite(std::span<const Nat> elements) {
  Nat threshold = 0;
  for (Nat x : elements) threshold = std::max(threshold, x + 1);
  return make(elements, threshold, 1, {});
}

UPSet UPSet::progression(Nat offset, Nat period) {
  if (period == 0) throw std::invalid_argument("period must be positive");
  const Nat residue = offset % period;
  return make({}, offset, period, std::span<const Nat>(&residue, 1));
}

UPSet UPSet::from_offset_form(std::span<const Nat> transient, Nat threshold, Nat period,
                              std::span<const Nat> offsets) {
  if (period == 0) throw std::invalid_argument("period must be positive");
  std::vector<Nat> residues;
  residues.reserve(offsets.size());
  for (Nat b : offsets) {
    if (b >= period) throw std::invalid_argument("offset is not below period");
    residues.push_back((b + threshold) % period);
  }
  return make(transient, threshold, period, residues);
}

std::vector<Nat> UPSet::offsets() const {
  std::vector<Nat> out;
  out.reserve(residues_.size());
  const Nat shift = threshold_ % period_;
  for (Nat b : residues_) out.push_back((b + period_ - shift) % period_);
  std::sort(out.begin(), out.end());
  return out;
}

bool UPSet::contains(Nat x) const {
  if (x < threshold_) return std::binary_search(transient_.begin(), transient_.end(), x);
  return std::binary_search(residues_.begin(), residues_.end(), x % period_);
}

std::vector<bool> UPSet::window(Nat length) const {
  check_window(length, 1);
  std::vector<bool> bits(length);
  for (Nat x = 0; x < length; ++x) bits[x] = contains(x);
  return bits;
}

Nat checked_lcm(Nat a, Nat b) {
  const Nat g = std::gcd(a, b);
  const Nat a_over_g = a / g;
  if (a_over_g != 0 && b > kMaxWindow / a_over_g) {
    throw std::length_error("period lcm(" + std::to_string(a) + ", " + std::to_string(b) +
                            ") exceeds representation limit");
  }
  return a_over_g * b;
}

namespace {

template <class Op>
UPSet combine(const UPSet& lhs, const UPSet& rhs, Op op) {
  const Nat threshold = std::max(lhs.threshold(), rhs.threshold());
  const Nat period = checked_lcm(lhs.period(), rhs.period());
  check_window(threshold, period);
  std::vector<bool> bits(threshold + period);
  for (Nat x = 0; x < threshold + period; ++x) bits[x] = op(lhs.contains(x), rhs.contains(x));
  return UPSet::from_window(threshold, period, bits);
}

}  // namespace

UPSet unite(const UPSet& lhs, const UPSet& rhs) {
  return combine(lhs, rhs, [](bool a, bool b) { return a || b; });
}

UPSet intersect(const UPSet& lhs, const UPSet& rhs) {
  return combine(lhs, rhs, [](bool a, bool b) { return a && b; });
}

UPSet decrement(const UPSet& s, Nat shift) {
  if (shift == 0) return s;
  const Nat q = s.threshold();
  const Nat r = s.period();
  // Past the threshold, shifting by r changes nothing.
  if (shift >= q + r) shift = q + (shift - q) % r;
  const Nat threshold = q > shift ? q - shift : 0;
  std::vector<bool> bits(threshold + r);
  for (Nat x = 0; x < threshold + r; ++x) bits[x] = s.contains(x + shift);
  return UPSet::from_window(threshold, r, bits);
}

bool is_subset(const UPSet& sub, const UPSet& super) {
  return intersect(sub, super) == sub;
}

std::vector<Nat> enumerate_upto(const UPSet& s, Nat limit) {
  std::vector<Nat> out;
  for (Nat x = 0;; ++x) {
    if (s.contains(x)) out.push_back(x);
    if (x == limit) break;
  }
  return out;
}

}  // namespace upnat
