#pragma once

#include <optional>
#include <vector>

#include "prymlat/matrix.hpp"

namespace prymlat {

// A sublattice of Z^ambient_rank, stored as the canonical Hermite column
// basis so that sublattice equality is basis-matrix equality.  The saturated
// flag is computed on construction (all elementary divisors of the basis are
// 1); "saturated" is the lattice counterpart of the connected component of
// an algebraic subgroup.
class Sublattice {
 public:
  Sublattice() = default;  // the zero lattice in the zero ambient

  static Sublattice zero(std::size_t ambient_rank);
  static Sublattice full(std::size_t ambient_rank);
  // Columns of `generators` span the lattice; they may be dependent or zero.
  static Sublattice from_generators(std::size_t ambient_rank,
                                    const IntegerMatrix& generators);

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return basis_.cols(); }
  const IntegerMatrix& basis() const { return basis_; }
  bool is_saturated() const { return saturated_; }

  bool operator==(const Sublattice&) const = default;

 private:
  std::size_t ambient_rank_ = 0;
  IntegerMatrix basis_;  // ambient_rank x rank, canonical
  bool saturated_ = true;
};

// Saturated integer kernel of A, inside Z^cols(A).
Sublattice kernel_basis(const IntegerMatrix& a);

// Column span of A, inside Z^rows(A).  Not saturated in general.
Sublattice image_basis(const IntegerMatrix& a);

// Primitive closure: smallest saturated sublattice containing L.
Sublattice saturate(const Sublattice& l);

Sublattice intersect(const Sublattice& l1, const Sublattice& l2);
Sublattice sum(const Sublattice& l1, const Sublattice& l2);

// Exponent of Z^ambient / L when L has full rank (the largest elementary
// divisor of the basis); nullopt when the cokernel is infinite.
std::optional<Int> cokernel_exponent(const Sublattice& l);

bool membership(const std::vector<Int>& v, const Sublattice& l);

// Solve basis * x = v over the integers; basis must be a canonical Hermite
// column basis (independent columns, pivot rows strictly increasing).
std::optional<std::vector<Int>> solve_in_column_basis(
    const IntegerMatrix& basis, const std::vector<Int>& v);

}  // namespace prymlat
