#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "upnat/upset.hpp"

namespace upnat {

/// Maps any shift onto [0, q + r) of the seed's canonical (q, r); decrements
/// by the two shifts coincide.
Nat wrap_shift(const UPSet& seed, Nat shift);

/**
 * The finite family D(L) = {L - i | i in N}.
 *
 * Members are the distinct sets L - i for i in [0, q + r), in order of
 * first appearance; every other shift wraps onto that range.
 */
class DecrementFamily {
 public:
  explicit DecrementFamily(UPSet seed);

  const UPSet& seed() const noexcept { return seed_; }
  const std::vector<UPSet>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

  /// Position in members() of L - shift, for any shift.
  std::size_t member_of_shift(Nat shift) const;
  /// Smallest shift producing members()[index].
  Nat representative(std::size_t index) const { return representatives_.at(index); }
  /// All shifts in [0, q + r) producing members()[index].
  std::vector<Nat> shifts_of(std::size_t index) const;

  std::optional<std::size_t> find(const UPSet& s) const;

 private:
  UPSet seed_;
  std::vector<UPSet> members_;
  std::vector<std::size_t> index_of_shift_;
  std::vector<Nat> representatives_;
};

inline DecrementFamily decrement_family(const UPSet& seed) { return DecrementFamily(seed); }

/**
 * A union of intersections of decrements, relative to a seed supplied at
 * evaluation time: clauses {I_1, ..., I_m} denote U_j n_{i in I_j} (L - i).
 *
 * Clauses are kept sorted and duplicate-free; no clause is a superset of
 * another. There is always at least one clause and no clause is empty.
 */
class LatticeExpr {
 public:
  using Clause = std::vector<Nat>;

  /// Throws std::invalid_argument on zero clauses or an empty clause.
  explicit LatticeExpr(std::vector<Clause> clauses);

  static LatticeExpr decrement(Nat shift) { return LatticeExpr(std::vector<Clause>{Clause{shift}}); }

  const std::vector<Clause>& clauses() const noexcept { return clauses_; }

  /// Union: concatenate clauses.
  LatticeExpr join(const LatticeExpr& other) const;
  /// Intersection: distribute into union-of-intersections form.
  LatticeExpr meet(const LatticeExpr& other) const;

  /// Text form, e.g. `(L-2 & L-3) | (L-0 & L-1)`.
  std::string to_string() const;

  friend bool operator==(const LatticeExpr&, const LatticeExpr&) = default;

 private:
  std::vector<Clause> clauses_;
};

UPSet eval_expr(const LatticeExpr& expr, const UPSet& seed);

/// Wraps every shift into [0, q + r) and replaces it by the smallest shift
/// with the same decrement.
LatticeExpr normalize_shifts(const LatticeExpr& expr, const UPSet& seed);

/// Semantics-preserving reduction: normalizes shifts, drops a shift from a
/// clause when another shift in it denotes a subset, and drops a clause when
/// its set is contained in another clause's set.
LatticeExpr simplify(const LatticeExpr& expr, const UPSet& seed);

struct LatticeOptions {
  std::size_t max_members = std::size_t{1} << 16;
};

/**
 * The smallest family containing the seed that is closed under union,
 * intersection and decrement, with a witness expression for each member.
 */
class Lattice {
 public:
  const UPSet& seed() const noexcept { return seed_; }
  const std::vector<UPSet>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

  std::optional<std::size_t> find(const UPSet& s) const;
  bool contains(const UPSet& s) const { return find(s).has_value(); }

  /// Expression denoting members()[index], rebuilt from how the member was
  /// first reached.
  LatticeExpr witness(std::size_t index) const;
  /// witness(i) for every member, sharing intermediate results.
  std::vector<LatticeExpr> witnesses() const;

 private:
  friend Lattice generate_lattice(const UPSet& seed, const LatticeOptions& options);

  struct Origin {
    enum class Kind { kDecrement, kJoin, kMeet } kind;
    Nat shift = 0;
    std::size_t lhs = 0;
    std::size_t rhs = 0;
  };

  LatticeExpr build_witness(std::size_t index, std::vector<std::optional<LatticeExpr>>& memo) const;

  UPSet seed_;
  std::vector<UPSet> members_;
  std::vector<Origin> origins_;
  std::map<UPSet, std::size_t> index_;
};

/// Throws CapacityError when the member count would exceed the cap.
Lattice generate_lattice(const UPSet& seed, const LatticeOptions& options = {});

inline bool lattice_contains(const Lattice& lattice, const UPSet& s) { return lattice.contains(s); }

/// A witness expression for s over seed if s lies in the generated lattice.
std::optional<LatticeExpr> find_expr(const UPSet& s, const UPSet& seed,
                                     const LatticeOptions& options = {});

}  // namespace upnat
