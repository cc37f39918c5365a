#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chow/multipoly.hpp"

namespace chow {

// A point of affine n-space; coordinates[k] is the value of x_{k+1}.
// The chart constant x_0 is implicitly 1.
struct AffinePoint {
  std::vector<Rational> coordinates;

  Point as_point(const VarTable& table) const;
};

// δ^k applied to the coordinate functions, k = 0..d+1, indexed [k][j]
// with j = 0..n; row k holds δ^k x_j and column 0 is the chart constant.
using PowerTable = std::vector<std::vector<MultiPoly>>;

// Locally nilpotent derivation δ = Σ δ(x_j) ∂/∂x_j of Q[x_1..x_n].
//
// Construction iterates δ on the coordinate functions until δ^{d+1} x_j = 0
// for every j, which fixes the degree d and the power table. A derivation
// restricted to an invariant stratum keeps the ambient variable table; the
// substituted coordinates become polynomial coordinate functions.
class Derivation {
 public:
  static constexpr std::size_t kDefaultBound = 64;

  // generators[j-1] = δ(x_j). Throws NotNilpotentError if δ^{bound+1} x_j
  // does not vanish for some j, DomainError on bad generator shape.
  Derivation(VarTable::Ptr table, std::vector<MultiPoly> generators, std::size_t bound = kDefaultBound);

  const VarTable::Ptr& table() const noexcept { return table_; }
  unsigned dimension() const noexcept { return table_->dimension(); }
  unsigned degree() const noexcept { return degree_; }

  // δ(x_j), 1 <= j <= n
  const MultiPoly& generator(unsigned j) const;
  // δ^0 x_j: x_j itself, or the stratum's coordinate function; j = 0 gives 1
  const MultiPoly& coordinate(unsigned j) const;
  // δ^k x_j for 0 <= k <= d+1, 0 <= j <= n
  const MultiPoly& power(unsigned k, unsigned j) const;
  const PowerTable& power_table() const noexcept { return powers_; }

  // Coordinates that are not fixed by a stratum substitution.
  const std::vector<unsigned>& free_coordinates() const noexcept { return free_; }
  const Substitution& stratum() const noexcept { return stratum_; }

  // Σ_j δ(x_j) ∂p/∂x_j; throws DomainError if p involves non-coordinate variables.
  MultiPoly apply(const MultiPoly& p) const;

  friend Derivation restrict_derivation(const Derivation& d, const Substitution& sub, std::size_t bound);

 private:
  Derivation(VarTable::Ptr table, std::vector<MultiPoly> generators, std::vector<MultiPoly> coordinates,
             std::vector<unsigned> free, Substitution stratum, std::size_t bound);

  void build(std::size_t bound);

  VarTable::Ptr table_;
  std::vector<MultiPoly> generators_;   // index j-1
  std::vector<MultiPoly> coordinates_;  // index j, with [0] = 1
  std::vector<unsigned> free_;
  Substitution stratum_;
  PowerTable powers_;
  unsigned degree_ = 0;
};

MultiPoly apply_delta(const Derivation& d, const MultiPoly& p);

// Smallest d with δ^{d+1} x_j = 0 for all j; throws NotNilpotentError past bound.
unsigned nilpotency_degree(const VarTable::Ptr& table, std::span<const MultiPoly> generators,
                           std::size_t bound = Derivation::kDefaultBound);

// Coordinates Σ_{j=0}^d t^j/j! (δ^j x_k)(x). This is the point the action
// labels -t.x; the sign convention is kept as is.
AffinePoint flow(const Derivation& d, const AffinePoint& x, const Rational& t);

// x lies in U_0 iff some δ^d x_j does not vanish at x.
bool generic_locus_member(const Derivation& d, const AffinePoint& x);

// t(x) = (δ^{d-1} x_j)(x) / (δ^d x_j)(x); throws DomainError when the
// denominator vanishes ("point not in chart").
Rational slice_time(const Derivation& d, const AffinePoint& x, unsigned j);

// flow(x, -t(x)); δ^{d-1} x_j vanishes at the result.
AffinePoint slice_normalize(const Derivation& d, const AffinePoint& x, unsigned j);

// True iff every δ(x_j) vanishes at x, i.e. x is a fixed point and the
// action is not free. A false result certifies nothing.
bool fixed_point_check(const Derivation& d, const AffinePoint& x);

// Induced derivation on the stratum {x_v = s_v}. Every image s_v must avoid
// the substituted variables, and the stratum must be invariant:
// δ(x_v - s_v) restricted to the stratum vanishes. Throws DomainError with
// "substitution not invariant" otherwise. The degree is recomputed.
Derivation restrict_derivation(const Derivation& d, const Substitution& sub,
                               std::size_t bound = Derivation::kDefaultBound);

}  // namespace chow
