#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace upnat {

using Nat = std::uint64_t;

/// Largest window (threshold + period) any operation will materialize.
/// Operations that would need more throw std::length_error.
inline constexpr Nat kMaxWindow = Nat{1} << 26;

/**
 * An ultimately periodic subset of the naturals in canonical form.
 *
 * A value denotes the set
 *
 *     { x < threshold | x in transient } u { x >= threshold | x mod period in residues }
 *
 * Residues are absolute (taken mod period), not relative to the threshold.
 * Every value is normalized on construction: the period is the least period
 * of the tail, and the threshold is the least one that works for that
 * period. Two values denote the same set iff they compare equal.
 *
 * Values are immutable.
 */
class UPSet {
 public:
  /// The empty set.
  UPSet();

  /// Builds the canonical form of `transient u {x >= threshold | x mod period in residues}`.
  /// Throws std::invalid_argument if period is 0, a transient element is
  /// >= threshold, or a residue is >= period.
  static UPSet make(std::span<const Nat> transient, Nat threshold, Nat period,
                    std::span<const Nat> residues);

  static UPSet empty() { return UPSet(); }
  static UPSet naturals();
  static UPSet finite(std::span<const Nat> elements);
  /// offset + period * N
  static UPSet progression(Nat offset, Nat period);

  /// Offset form `A u (q + B + rN)` where B holds offsets relative to q.
  static UPSet from_offset_form(std::span<const Nat> transient, Nat threshold, Nat period,
                                std::span<const Nat> offsets);

  /// Canonicalizes a membership window: bits[x] is membership of x for
  /// x < threshold + period, and membership repeats with `period` from
  /// `threshold` on. Requires bits.size() == threshold + period.
  static UPSet from_window(Nat threshold, Nat period, const std::vector<bool>& bits);

  const std::vector<Nat>& transient() const noexcept { return transient_; }
  Nat threshold() const noexcept { return threshold_; }
  Nat period() const noexcept { return period_; }
  const std::vector<Nat>& residues() const noexcept { return residues_; }

  /// Residues re-indexed relative to the threshold: {(b - q) mod r}.
  std::vector<Nat> offsets() const;

  bool contains(Nat x) const;
  bool is_empty() const noexcept { return transient_.empty() && residues_.empty(); }
  bool is_finite() const noexcept { return residues_.empty(); }

  /// Membership over [0, length).
  std::vector<bool> window(Nat length) const;

  friend bool operator==(const UPSet&, const UPSet&) = default;
  friend std::strong_ordering operator<=>(const UPSet&, const UPSet&) = default;

 private:
  std::vector<Nat> transient_;
  Nat threshold_ = 0;
  Nat period_ = 1;
  std::vector<Nat> residues_;
};

UPSet unite(const UPSet& lhs, const UPSet& rhs);
UPSet intersect(const UPSet& lhs, const UPSet& rhs);

/// {x | x + shift in s}
UPSet decrement(const UPSet& s, Nat shift);

bool is_subset(const UPSet& sub, const UPSet& super);

/// Members of s that are <= limit, ascending.
std::vector<Nat> enumerate_upto(const UPSet& s, Nat limit);

/// lcm with overflow and kMaxWindow checks.
Nat checked_lcm(Nat a, Nat b);

}  // namespace upnat
