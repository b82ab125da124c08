#include "prymlat/prym.hpp"

#include <algorithm>

#include "prymlat/errors.hpp"

namespace prymlat {

NormOperator norm_operator(const EquivariantLattice& l) {
  IntegerMatrix sum(l.rank, l.rank);
  for (const auto& action : all_element_actions(l)) sum = sum + action;
  return NormOperator{std::move(sum), l.group.order()};
}

Sublattice fixed_sublattice(const EquivariantLattice& l) {
  Sublattice fixed = Sublattice::full(l.rank);
  for (const auto& action : l.generator_action)
    fixed = intersect(fixed,
                      kernel_basis(action - IntegerMatrix::identity(l.rank)));
  return saturate(fixed);
}

PrymLattice prym_lattice(const EquivariantLattice& l) {
  Sublattice ker = saturate(kernel_basis(norm_operator(l).matrix));
  if (ker.rank() % 2 != 0)
    throw InvariantViolation("Prym lattice rank is odd");
  PrymLattice p;
  p.rank = ker.rank();
  p.dimension = p.rank / 2;
  p.sublattice = std::move(ker);
  return p;
}

bool DecompositionReport::passed() const {
  return fixed_rank + prym_rank == ambient_rank &&
         image_saturation_equals_fixed && intersection_rank == 0 &&
         n_times_ambient_in_sum && torsion_exponent >= 1 &&
         group_order % torsion_exponent == 0;
}

DecompositionReport verify_decomposition(const EquivariantLattice& l) {
  NormOperator nm = norm_operator(l);
  Sublattice fixed = fixed_sublattice(l);
  Sublattice prym = saturate(kernel_basis(nm.matrix));

  DecompositionReport report;
  report.ambient_rank = l.rank;
  report.group_order = nm.group_order;
  report.fixed_rank = fixed.rank();
  report.prym_rank = prym.rank();
  report.image_saturation_equals_fixed =
      saturate(image_basis(nm.matrix)) == fixed;
  report.intersection_rank = intersect(fixed, prym).rank();

  Sublattice total = sum(fixed, prym);
  report.n_times_ambient_in_sum = true;
  for (std::size_t i = 0; i < l.rank; ++i) {
    std::vector<Int> v(l.rank, 0);
    v[i] = nm.group_order;
    if (!membership(v, total)) {
      report.n_times_ambient_in_sum = false;
      break;
    }
  }
  auto exponent = cokernel_exponent(total);
  report.torsion_exponent =
      exponent ? static_cast<long long>(*exponent) : 0;
  return report;
}

EquivariantLattice diagonal_product(const EquivariantLattice& l, long long n) {
  if (n < 1)
    throw InvalidCopyCount("copy count must be at least 1, got " +
                           std::to_string(n));
  EquivariantLattice product;
  product.group = l.group;
  product.rank = static_cast<std::size_t>(n) * l.rank;
  for (const auto& action : l.generator_action)
    product.generator_action.push_back(block_diagonal(
        std::vector<IntegerMatrix>(static_cast<std::size_t>(n), action)));
  return product;
}

ProductReport verify_product(const EquivariantLattice& l, long long n) {
  PrymLattice factor = prym_lattice(l);
  PrymLattice product = prym_lattice(diagonal_product(l, n));

  ProductReport report;
  report.n_copies = n;
  report.factor_prym_rank = factor.rank;
  report.product_prym_rank = product.rank;
  report.rank_matches =
      product.rank == static_cast<std::size_t>(n) * factor.rank;

  Sublattice embedded = Sublattice::from_generators(
      product.sublattice.ambient_rank(),
      block_diagonal(std::vector<IntegerMatrix>(static_cast<std::size_t>(n),
                                                factor.sublattice.basis())));
  report.basis_matches = embedded == product.sublattice;
  return report;
}

long long group_ring_rank(const EquivariantLattice& l) {
  auto actions = all_element_actions(l);
  IntegerMatrix flattened(l.rank * l.rank, actions.size());
  for (std::size_t c = 0; c < actions.size(); ++c)
    for (std::size_t i = 0; i < l.rank; ++i)
      for (std::size_t j = 0; j < l.rank; ++j)
        flattened.at(i * l.rank + j, c) = actions[c].at(i, j);
  return static_cast<long long>(rational_rank(flattened));
}

long long commutant_rank(const EquivariantLattice& l) {
  // Rank of {X : rho(g) X = X rho(g) for all g}.  The solution space is the
  // invariants of the conjugation action on the matrix space, and its exact
  // dimension is the trace of the averaging projector:
  //   (1/|G|) * sum_g tr(rho(g)) * tr(rho(g^{-1})).
  auto actions = all_element_actions(l);
  const FiniteAbelianGroup& g = l.group;
  Int total = 0;
  for (long long idx = 0; idx < g.order(); ++idx) {
    long long inv_idx = g.index_of(negate(g.element_at(idx)));
    Int tr = 0, tr_inv = 0;
    for (std::size_t i = 0; i < l.rank; ++i) {
      tr += actions[static_cast<std::size_t>(idx)].at(i, i);
      tr_inv += actions[static_cast<std::size_t>(inv_idx)].at(i, i);
    }
    total += tr * tr_inv;
  }
  if (total % g.order() != 0)
    throw InvariantViolation("projector trace is not an integer");
  return static_cast<long long>(total / g.order());
}

RankBoundReport rank_bound(const BranchData& b, long long n,
                           std::optional<long long> end_rank_override) {
  if (n < 1)
    throw InvalidCopyCount("copy count must be at least 1, got " +
                           std::to_string(n));
  long long g = genus(b);  // throws InvalidBranchData on bad data
  EquivariantLattice h1 = h1_with_action(build_cover_complex(b));
  if (h1.rank != static_cast<std::size_t>(2 * g))
    throw InvariantViolation("H1 rank does not match Riemann-Hurwitz genus");

  PrymLattice product_prym = prym_lattice(diagonal_product(h1, n));
  if (product_prym.rank != static_cast<std::size_t>(n) * h1.rank)
    throw InvariantViolation(
        "self-product Prym rank is not n times the full H1 rank");

  RankBoundReport report;
  report.group = b.group;
  report.branch_label = b.label;
  report.group_order = b.group.order();
  report.n_copies = n;
  report.genus = g;
  report.prym_product_rank = product_prym.rank;
  report.end_rank_lower = group_ring_rank(h1);
  report.end_rank_upper = commutant_rank(h1);
  if (end_rank_override) {
    if (*end_rank_override < report.end_rank_lower)
      throw OverrideBelowCertifiedLower(
          "end-rank override " + std::to_string(*end_rank_override) +
          " is below the certified lower bound " +
          std::to_string(report.end_rank_lower));
    report.end_rank_used = *end_rank_override;
  } else {
    report.end_rank_used = report.end_rank_lower;
  }
  report.bound = report.n_copies * report.end_rank_used;
  report.torsion_note =
      "plus the torsion summand Jac(C)[" + std::to_string(report.group_order) +
      "](k), reported symbolically; it contributes no free rank";
  report.assumptions =
      "assumes a rational base point x0 in X(k) and the cocycle a_g = g; "
      "unconditional for the Jacobian self-product case";
  return report;
}

}  // namespace prymlat
