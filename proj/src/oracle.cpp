#include "upnat/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace upnat::oracle {

std::vector<Nat> brute_preimage(const FuncSpec& f, const UPSet& s, Nat limit) {
  if (auto n = f.domain_size(); n && *n <= limit) {
    throw std::domain_error("table has " + std::to_string(*n) + " entries, need " +
                            std::to_string(limit + 1));
  }
  std::vector<Nat> out;
  for (Nat x = 0; x <= limit; ++x) {
    if (s.contains(f(x))) out.push_back(x);
  }
  return out;
}

bool sets_equal_upto(const UPSet& lhs, const UPSet& rhs, Nat limit) {
  for (Nat x = 0; x <= limit; ++x) {
    if (lhs.contains(x) != rhs.contains(x)) return false;
  }
  return true;
}

Nat sufficient_window(const UPSet& lhs, const UPSet& rhs) {
  return std::max(lhs.threshold(), rhs.threshold()) + 2 * checked_lcm(lhs.period(), rhs.period());
}

UPSet random_upset(std::uint64_t seed, Nat max_q, Nat max_r) {
  if (max_r == 0) throw std::invalid_argument("max_r must be positive");
  Lcg64 rng(seed);
  const Nat q = rng.below(max_q + 1);
  const Nat r = 1 + rng.below(max_r);
  std::vector<Nat> transient, residues;
  for (Nat x = 0; x < q; ++x) {
    if (rng.below(2)) transient.push_back(x);
  }
  for (Nat b = 0; b < r; ++b) {
    if (rng.below(2)) residues.push_back(b);
  }
  return UPSet::make(transient, q, r, residues);
}

FuncSpec random_polynomial(std::uint64_t seed, Nat max_deg, Nat max_coeff) {
  Lcg64 rng(seed);
  const Nat tweak = rng.below(8);
  const Nat degree = rng.below(max_deg + 1);
  std::vector<std::int64_t> c(degree + 1);
  for (auto& x : c) x = static_cast<std::int64_t>(rng.below(max_coeff + 1));

  if (tweak == 0) return FuncSpec::polynomial(std::vector<std::int64_t>{c[0]});
  if (tweak == 1) {
    const auto lead = static_cast<std::int64_t>(1 + rng.below(std::max<Nat>(max_coeff, 1)));
    return FuncSpec::polynomial(std::vector<std::int64_t>{lead + 1 + c[0], -(lead + 1), lead});
  }
  return FuncSpec::polynomial(std::move(c));
}

}  // namespace upnat::oracle
