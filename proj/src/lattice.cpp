#include "prymlat/lattice.hpp"

#include <algorithm>

#include "prymlat/errors.hpp"

namespace prymlat {

Sublattice Sublattice::zero(std::size_t ambient_rank) {
  Sublattice l;
  l.ambient_rank_ = ambient_rank;
  l.basis_ = IntegerMatrix(ambient_rank, 0);
  l.saturated_ = true;
  return l;
}

Sublattice Sublattice::full(std::size_t ambient_rank) {
  Sublattice l;
  l.ambient_rank_ = ambient_rank;
  l.basis_ = IntegerMatrix::identity(ambient_rank);
  l.saturated_ = true;
  return l;
}

Sublattice Sublattice::from_generators(std::size_t ambient_rank,
                                       const IntegerMatrix& generators) {
  if (generators.rows() != ambient_rank)
    throw AmbientMismatch("generators do not live in the stated ambient");
  Sublattice l;
  l.ambient_rank_ = ambient_rank;
  l.basis_ = hermite_column_basis(generators);
  if (l.basis_.cols() == 0) {
    l.saturated_ = true;
  } else {
    auto divisors = smith_normal_form(l.basis_).divisors();
    l.saturated_ = std::all_of(divisors.begin(), divisors.end(),
                               [](const Int& d) { return d == 1; });
  }
  return l;
}

Sublattice kernel_basis(const IntegerMatrix& a) {
  SmithExtended s = smith_extended(a);
  std::size_t r = s.rank();
  std::size_t n = a.cols();
  IntegerMatrix gens(n, n - r);
  for (std::size_t j = r; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) gens.at(i, j - r) = s.v.at(i, j);
  return Sublattice::from_generators(n, gens);
}

Sublattice image_basis(const IntegerMatrix& a) {
  return Sublattice::from_generators(a.rows(), a);
}

Sublattice saturate(const Sublattice& l) {
  if (l.rank() == 0 || l.is_saturated()) return l;
  // Basis B factors as U^{-1} D V^{-1}; dropping the elementary divisors
  // leaves the first rank columns of U^{-1} spanning the primitive closure.
  SmithExtended s = smith_extended(l.basis());
  std::size_t r = l.rank();
  IntegerMatrix gens(l.ambient_rank(), r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < l.ambient_rank(); ++i)
      gens.at(i, j) = s.u_inv.at(i, j);
  return Sublattice::from_generators(l.ambient_rank(), gens);
}

Sublattice intersect(const Sublattice& l1, const Sublattice& l2) {
  if (l1.ambient_rank() != l2.ambient_rank())
    throw AmbientMismatch("intersect: ambient rank mismatch");
  std::size_t r1 = l1.rank();
  // v = B1 x = B2 y  <=>  (x, y) in ker [B1 | -B2]; push kernel through B1.
  Sublattice pairs = kernel_basis(hstack(l1.basis(), -l2.basis()));
  IntegerMatrix top(r1, pairs.rank());
  for (std::size_t i = 0; i < r1; ++i)
    for (std::size_t j = 0; j < pairs.rank(); ++j)
      top.at(i, j) = pairs.basis().at(i, j);
  return Sublattice::from_generators(l1.ambient_rank(), l1.basis() * top);
}

Sublattice sum(const Sublattice& l1, const Sublattice& l2) {
  if (l1.ambient_rank() != l2.ambient_rank())
    throw AmbientMismatch("sum: ambient rank mismatch");
  return Sublattice::from_generators(l1.ambient_rank(),
                                     hstack(l1.basis(), l2.basis()));
}

std::optional<Int> cokernel_exponent(const Sublattice& l) {
  if (l.rank() != l.ambient_rank()) return std::nullopt;
  if (l.rank() == 0) return Int(1);
  auto divisors = smith_normal_form(l.basis()).divisors();
  return divisors.back();
}

std::optional<std::vector<Int>> solve_in_column_basis(
    const IntegerMatrix& basis, const std::vector<Int>& v) {
  if (v.size() != basis.rows())
    throw AmbientMismatch("solve: vector length mismatch");
  std::vector<Int> w = v;
  std::vector<Int> x(basis.cols());
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    // Pivot row: first nonzero entry of column j; strictly increasing in j
    // for a canonical basis, so earlier columns no longer contribute there.
    std::size_t p = 0;
    while (p < basis.rows() && basis.at(p, j) == 0) ++p;
    if (w[p] % basis.at(p, j) != 0) return std::nullopt;
    x[j] = w[p] / basis.at(p, j);
    if (x[j] != 0)
      for (std::size_t i = p; i < basis.rows(); ++i)
        w[i] -= x[j] * basis.at(i, j);
  }
  for (const Int& wi : w)
    if (wi != 0) return std::nullopt;
  return x;
}

bool membership(const std::vector<Int>& v, const Sublattice& l) {
  if (v.size() != l.ambient_rank())
    throw AmbientMismatch("membership: vector length mismatch");
  return solve_in_column_basis(l.basis(), v).has_value();
}

}  // namespace prymlat
