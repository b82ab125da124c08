#pragma once

#include <optional>
#include <string>

#include "prymlat/homology.hpp"

namespace prymlat {

// Norm endomorphism: the sum of all group elements acting on H1.  It absorbs
// every single action (N * rho(g) = N) and acts as multiplication by |G| on
// the fixed sublattice.
struct NormOperator {
  IntegerMatrix matrix;
  long long group_order = 1;
};

NormOperator norm_operator(const EquivariantLattice& l);

// Saturation of the simultaneous fixed sublattice of all generator actions;
// the lattice counterpart of the connected fixed subvariety.
Sublattice fixed_sublattice(const EquivariantLattice& l);

// Saturated kernel of the norm operator.  For covers of the projective line
// this is all of H1.
struct PrymLattice {
  Sublattice sublattice;
  std::size_t rank = 0;
  std::size_t dimension = 0;  // rank / 2
};

PrymLattice prym_lattice(const EquivariantLattice& l);

// Certificate that H1 decomposes, up to finite index bounded by |G|, into
// the fixed sublattice and the Prym sublattice, with the saturated image of
// the norm equal to the fixed part.
struct DecompositionReport {
  std::size_t ambient_rank = 0;
  std::size_t fixed_rank = 0;
  std::size_t prym_rank = 0;
  bool image_saturation_equals_fixed = false;
  std::size_t intersection_rank = 0;
  // Exponent of H1 / (fixed + prym); 0 encodes an infinite cokernel, which
  // can only happen if an upstream computation is broken.
  long long torsion_exponent = 0;
  bool n_times_ambient_in_sum = false;
  long long group_order = 1;

  bool passed() const;
};

DecompositionReport verify_decomposition(const EquivariantLattice& l);

// The same group acting diagonally on n copies of the lattice: the action
// of the diagonal subgroup on H1 of the n-fold product.
EquivariantLattice diagonal_product(const EquivariantLattice& l, long long n);

// Checks that the Prym lattice of the diagonal product equals (canonical
// basis equality, not just rank) the block-diagonal sum of n copies of the
// Prym lattice of the factor.
struct ProductReport {
  long long n_copies = 1;
  std::size_t factor_prym_rank = 0;
  std::size_t product_prym_rank = 0;
  bool rank_matches = false;
  bool basis_matches = false;

  bool passed() const { return rank_matches && basis_matches; }
};

ProductReport verify_product(const EquivariantLattice& l, long long n);

// Rank of the span of all action matrices inside the matrix space: a
// certified lower bound for the rank of the endomorphism ring.
long long group_ring_rank(const EquivariantLattice& l);

// Rank of the lattice of matrices commuting with every action matrix; an
// upper-bound hint for the endomorphism rank, never used in the bound.
long long commutant_rank(const EquivariantLattice& l);

// Lower bound for the Mordell-Weil rank of the twisted Jacobian over the
// function field of the n-fold quotient: bound = n_copies * end_rank_used.
struct RankBoundReport {
  FiniteAbelianGroup group;
  std::string branch_label;
  long long group_order = 1;
  long long n_copies = 1;
  long long genus = 0;
  std::size_t prym_product_rank = 0;  // must equal n_copies * 2 * genus
  long long end_rank_lower = 0;       // group-ring image rank (certified)
  long long end_rank_upper = 0;       // commutant rank (hint)
  long long end_rank_used = 0;        // override if given, else lower bound
  long long bound = 0;
  std::string torsion_note;
  std::string assumptions;
};

RankBoundReport rank_bound(const BranchData& b, long long n,
                           std::optional<long long> end_rank_override = {});

}  // namespace prymlat
