#include "upnat/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "upnat/errors.hpp"

namespace upnat {

Nat wrap_shift(const UPSet& seed, Nat shift) {
  const Nat q = seed.threshold();
  const Nat r = seed.period();
  if (shift < q + r) return shift;
  return q + (shift - q) % r;
}

// ---------------------------------------------------------------------------
// DecrementFamily

DecrementFamily::DecrementFamily(UPSet seed) : seed_(std::move(seed)) {
  const Nat span = seed_.threshold() + seed_.period();
  index_of_shift_.reserve(span);
  for (Nat i = 0; i < span; ++i) {
    UPSet d = decrement(seed_, i);
    auto it = std::find(members_.begin(), members_.end(), d);
    if (it == members_.end()) {
      index_of_shift_.push_back(members_.size());
      members_.push_back(std::move(d));
      representatives_.push_back(i);
    } else {
      index_of_shift_.push_back(static_cast<std::size_t>(it - members_.begin()));
    }
  }
}

std::size_t DecrementFamily::member_of_shift(Nat shift) const {
  return index_of_shift_[wrap_shift(seed_, shift)];
}

std::vector<Nat> DecrementFamily::shifts_of(std::size_t index) const {
  std::vector<Nat> out;
  for (Nat i = 0; i < index_of_shift_.size(); ++i) {
    if (index_of_shift_[i] == index) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> DecrementFamily::find(const UPSet& s) const {
  auto it = std::find(members_.begin(), members_.end(), s);
  if (it == members_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

// ---------------------------------------------------------------------------
// LatticeExpr

LatticeExpr::LatticeExpr(std::vector<Clause> clauses) {
  if (clauses.empty()) throw std::invalid_argument("lattice expression needs at least one clause");
  for (auto& c : clauses) {
    if (c.empty()) throw std::invalid_argument("lattice expression clause is empty");
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  std::sort(clauses.begin(), clauses.end());
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());

  // Absorption: a clause that contains another clause is redundant.
  std::vector<bool> drop(clauses.size(), false);
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    for (std::size_t j = 0; j < clauses.size() && !drop[i]; ++j) {
      if (i == j || drop[j] || clauses[j].size() >= clauses[i].size()) continue;
      if (std::includes(clauses[i].begin(), clauses[i].end(), clauses[j].begin(), clauses[j].end())) {
        drop[i] = true;
      }
    }
  }
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (!drop[i]) clauses_.push_back(std::move(clauses[i]));
  }
}

LatticeExpr LatticeExpr::join(const LatticeExpr& other) const {
  std::vector<Clause> c = clauses_;
  c.insert(c.end(), other.clauses_.begin(), other.clauses_.end());
  return LatticeExpr(std::move(c));
}

LatticeExpr LatticeExpr::meet(const LatticeExpr& other) const {
  std::vector<Clause> c;
  c.reserve(clauses_.size() * other.clauses_.size());
  for (const auto& a : clauses_) {
    for (const auto& b : other.clauses_) {
      Clause merged;
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
      c.push_back(std::move(merged));
    }
  }
  return LatticeExpr(std::move(c));
}

std::string LatticeExpr::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < clauses_.size(); ++j) {
    if (j) out += " | ";
    const auto& clause = clauses_[j];
    if (clause.size() > 1) out += "(";
    for (std::size_t k = 0; k < clause.size(); ++k) {
      if (k) out += " & ";
      out += "L-" + std::to_string(clause[k]);
    }
    if (clause.size() > 1) out += ")";
  }
  return out;
}

UPSet eval_expr(const LatticeExpr& expr, const UPSet& seed) {
  std::optional<UPSet> result;
  for (const auto& clause : expr.clauses()) {
    UPSet acc = decrement(seed, clause.front());
    for (std::size_t k = 1; k < clause.size(); ++k) acc = intersect(acc, decrement(seed, clause[k]));
    result = result ? unite(*result, acc) : acc;
  }
  return *result;
}

LatticeExpr normalize_shifts(const LatticeExpr& expr, const UPSet& seed) {
  const DecrementFamily family(seed);
  std::vector<LatticeExpr::Clause> clauses;
  for (const auto& clause : expr.clauses()) {
    LatticeExpr::Clause c;
    for (Nat i : clause) c.push_back(family.representative(family.member_of_shift(i)));
    clauses.push_back(std::move(c));
  }
  return LatticeExpr(std::move(clauses));
}

LatticeExpr simplify(const LatticeExpr& expr, const UPSet& seed) {
  const DecrementFamily family(seed);
  const auto& d = family.members();

  std::vector<LatticeExpr::Clause> clauses;
  std::vector<UPSet> denoted;
  for (const auto& clause : expr.clauses()) {
    std::vector<std::size_t> idx;
    for (Nat i : clause) idx.push_back(family.member_of_shift(i));
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());

    LatticeExpr::Clause kept;
    UPSet acc = UPSet::naturals();
    for (std::size_t m : idx) {
      const bool redundant = std::any_of(idx.begin(), idx.end(), [&](std::size_t other) {
        return other != m && is_subset(d[other], d[m]);
      });
      if (!redundant) kept.push_back(family.representative(m));
      acc = intersect(acc, d[m]);
    }
    clauses.push_back(std::move(kept));
    denoted.push_back(std::move(acc));
  }

  std::vector<LatticeExpr::Clause> survivors;
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    bool absorbed = false;
    for (std::size_t k = 0; k < clauses.size() && !absorbed; ++k) {
      if (k == j || !is_subset(denoted[j], denoted[k])) continue;
      // Of two equal clauses, keep the earlier one.
      absorbed = denoted[j] != denoted[k] || k < j;
    }
    if (!absorbed) survivors.push_back(clauses[j]);
  }
  return LatticeExpr(std::move(survivors));
}

// ---------------------------------------------------------------------------
// Lattice generation
//
// Every member of the lattice generated by L has threshold <= q and period
// dividing r, so it is determined by its membership over [0, q + r). The
// closure runs on those windows as packed bit vectors.

namespace {

using Profile = std::vector<std::uint64_t>;

struct ProfileHash {
  std::size_t operator()(const Profile& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t w : p) {
      h ^= w;
      h *= 1099511628211ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

Profile to_profile(const UPSet& s, Nat length) {
  Profile p((length + 63) / 64, 0);
  for (Nat x = 0; x < length; ++x) {
    if (s.contains(x)) p[x / 64] |= std::uint64_t{1} << (x % 64);
  }
  return p;
}

std::vector<bool> to_bits(const Profile& p, Nat length) {
  std::vector<bool> bits(length);
  for (Nat x = 0; x < length; ++x) bits[x] = (p[x / 64] >> (x % 64)) & 1u;
  return bits;
}

}  // namespace

Lattice generate_lattice(const UPSet& seed, const LatticeOptions& options) {
  const Nat q = seed.threshold();
  const Nat r = seed.period();
  const Nat length = q + r;
  const DecrementFamily family(seed);

  std::vector<Profile> profiles;
  std::vector<Lattice::Origin> origins;
  std::unordered_map<Profile, std::size_t, ProfileHash> seen;

  auto add = [&](Profile p, Lattice::Origin origin) {
    auto [it, inserted] = seen.try_emplace(std::move(p), profiles.size());
    if (!inserted) return;
    if (profiles.size() >= options.max_members) throw CapacityError(options.max_members);
    profiles.push_back(it->first);
    origins.push_back(origin);
  };

  for (std::size_t m = 0; m < family.size(); ++m) {
    add(to_profile(family.members()[m], length),
        {Lattice::Origin::Kind::kDecrement, family.representative(m), 0, 0});
  }

  // Intersections distribute over unions and decrements over both, so the
  // lattice is every union of intersections of decrements: close D(L) under
  // intersection, then close that family under union.
  Profile combined;
  auto close = [&](std::size_t generators, Lattice::Origin::Kind kind) {
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      for (std::size_t g = 0; g < generators; ++g) {
        const std::size_t words = profiles[i].size();
        combined.resize(words);
        for (std::size_t w = 0; w < words; ++w) {
          combined[w] = kind == Lattice::Origin::Kind::kJoin ? profiles[i][w] | profiles[g][w]
                                                             : profiles[i][w] & profiles[g][w];
        }
        add(combined, {kind, 0, i, g});
      }
    }
  };
  close(profiles.size(), Lattice::Origin::Kind::kMeet);
  close(profiles.size(), Lattice::Origin::Kind::kJoin);

  Lattice lattice;
  lattice.seed_ = seed;
  lattice.origins_ = std::move(origins);
  lattice.members_.reserve(profiles.size());
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    lattice.members_.push_back(UPSet::from_window(q, r, to_bits(profiles[i], length)));
    lattice.index_.emplace(lattice.members_.back(), i);
  }
  return lattice;
}

std::optional<std::size_t> Lattice::find(const UPSet& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

LatticeExpr Lattice::build_witness(std::size_t index,
                                   std::vector<std::optional<LatticeExpr>>& memo) const {
  // Origins only point at earlier members, so the needed members can be
  // filled in increasing order without recursion.
  std::vector<bool> needed(index + 1, false);
  needed[index] = true;
  for (std::size_t i = index + 1; i-- > 0;) {
    if (!needed[i] || memo[i]) continue;
    const Origin& o = origins_[i];
    if (o.kind != Origin::Kind::kDecrement) {
      needed[o.lhs] = true;
      needed[o.rhs] = true;
    }
  }
  for (std::size_t i = 0; i <= index; ++i) {
    if (!needed[i] || memo[i]) continue;
    const Origin& o = origins_[i];
    switch (o.kind) {
      case Origin::Kind::kDecrement:
        memo[i] = LatticeExpr::decrement(o.shift);
        break;
      case Origin::Kind::kJoin:
        memo[i] = memo[o.lhs]->join(*memo[o.rhs]);
        break;
      case Origin::Kind::kMeet:
        memo[i] = memo[o.lhs]->meet(*memo[o.rhs]);
        break;
    }
  }
  return *memo[index];
}

LatticeExpr Lattice::witness(std::size_t index) const {
  if (index >= members_.size()) throw std::out_of_range("lattice member index out of range");
  std::vector<std::optional<LatticeExpr>> memo(members_.size());
  return build_witness(index, memo);
}

std::vector<LatticeExpr> Lattice::witnesses() const {
  std::vector<std::optional<LatticeExpr>> memo(members_.size());
  std::vector<LatticeExpr> out;
  out.reserve(members_.size());
  for (std::size_t i = 0; i < members_.size(); ++i) out.push_back(build_witness(i, memo));
  return out;
}

std::optional<LatticeExpr> find_expr(const UPSet& s, const UPSet& seed, const LatticeOptions& options) {
  const Lattice lattice = generate_lattice(seed, options);
  auto index = lattice.find(s);
  if (!index) return std::nullopt;
  return lattice.witness(*index);
}

}  // namespace upnat
