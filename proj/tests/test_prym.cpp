#include <doctest.h>

#include "prymlat/errors.hpp"
#include "prymlat/prym.hpp"
#include "test_support.hpp"

using namespace prymlat;
using prymtest::commutant_rank_oracle;
using prymtest::corpus;
using prymtest::entry;
using prymtest::to_branch;

namespace {

EquivariantLattice h1_of(const std::string& label) {
  return h1_with_action(build_cover_complex(to_branch(entry(label))));
}

// Z/2 swapping two coordinates: fixed = span(1,1), kernel of the norm =
// span(1,-1), and their sum has index 2.
EquivariantLattice swap_lattice() {
  EquivariantLattice l;
  l.group = make_group({2});
  l.rank = 2;
  l.generator_action = {IntegerMatrix::from_rows({{0, 1}, {1, 0}})};
  return l;
}

}  // namespace

TEST_CASE("norm operator on the swap action") {
  auto l = swap_lattice();
  auto nm = norm_operator(l);
  CHECK(nm.group_order == 2);
  CHECK(nm.matrix == IntegerMatrix::from_rows({{1, 1}, {1, 1}}));
  // The norm absorbs every single action.
  for (const auto& a : all_element_actions(l))
    CHECK(nm.matrix * a == nm.matrix);
}

TEST_CASE("fixed and Prym sublattices of the swap action") {
  auto l = swap_lattice();
  auto fixed = fixed_sublattice(l);
  REQUIRE(fixed.rank() == 1);
  CHECK(fixed.is_saturated());
  CHECK(fixed.basis().at(0, 0) == 1);
  CHECK(fixed.basis().at(1, 0) == 1);

  auto report = verify_decomposition(l);
  CHECK(report.ambient_rank == 2);
  CHECK(report.fixed_rank == 1);
  CHECK(report.prym_rank == 1);
  CHECK(report.image_saturation_equals_fixed);
  CHECK(report.intersection_rank == 0);
  CHECK(report.torsion_exponent == 2);  // (1,0) only reaches fixed+prym doubled
  CHECK(report.n_times_ambient_in_sum);
  CHECK(report.passed());

  // The Prym half has odd rank here, so it cannot be halved into a
  // dimension; the constructor must refuse.
  CHECK_THROWS_AS(prym_lattice(l), InvariantViolation);
}

TEST_CASE("identity action fixes everything") {
  EquivariantLattice l;
  l.group = make_group({2});
  l.rank = 2;
  l.generator_action = {IntegerMatrix::identity(2)};
  CHECK(fixed_sublattice(l) == Sublattice::full(2));
  auto report = verify_decomposition(l);
  CHECK(report.fixed_rank == 2);
  CHECK(report.prym_rank == 0);
  CHECK(report.torsion_exponent == 1);
  CHECK(report.passed());
  auto p = prym_lattice(l);
  CHECK(p.rank == 0);
  CHECK(p.dimension == 0);
}

TEST_CASE("norm vanishes on covers of the projective line") {
  for (const auto& e : corpus()) {
    CAPTURE(e.label);
    auto l = h1_with_action(build_cover_complex(to_branch(e)));
    CHECK(norm_operator(l).matrix.is_zero());
    CHECK(fixed_sublattice(l).rank() == 0);
    auto p = prym_lattice(l);
    CHECK(p.rank == l.rank);
    CHECK(p.dimension == static_cast<std::size_t>(e.genus));
    CHECK(p.sublattice == Sublattice::full(l.rank));
  }
}

TEST_CASE("decomposition certificate passes on the corpus") {
  for (const auto& e : corpus()) {
    CAPTURE(e.label);
    auto l = h1_with_action(build_cover_complex(to_branch(e)));
    auto report = verify_decomposition(l);
    CHECK(report.passed());
    CHECK(report.fixed_rank == 0);
    CHECK(report.prym_rank == l.rank);
    CHECK(report.torsion_exponent == 1);
  }
}

TEST_CASE("diagonal product stacks the action") {
  auto l = h1_of("z3-111");
  auto d = diagonal_product(l, 3);
  CHECK(d.rank == 3 * l.rank);
  CHECK(d.group == l.group);
  REQUIRE(d.generator_action.size() == 1);
  CHECK(d.generator_action[0] ==
        block_diagonal({l.generator_action[0], l.generator_action[0],
                        l.generator_action[0]}));
  CHECK_THROWS_AS(diagonal_product(l, 0), InvalidCopyCount);
  CHECK_THROWS_AS(diagonal_product(l, -2), InvalidCopyCount);
}

TEST_CASE("product Prym equals the product of Pryms") {
  for (const auto& label : {"z2-6pts", "z3-111", "v4-aabb", "z2z4-abc"}) {
    CAPTURE(label);
    auto l = h1_of(label);
    for (long long n : {1, 2, 3}) {
      auto report = verify_product(l, n);
      CHECK(report.n_copies == n);
      CHECK(report.factor_prym_rank == l.rank);
      CHECK(report.product_prym_rank ==
            static_cast<std::size_t>(n) * l.rank);
      CHECK(report.rank_matches);
      CHECK(report.basis_matches);
      CHECK(report.passed());
    }
  }
}

TEST_CASE("product verification also holds for a proper Prym") {
  // Two swapped pairs: fixed and Prym parts both have rank 2, and the Prym
  // is a proper sublattice, so basis equality is a real constraint here.
  EquivariantLattice l;
  l.group = make_group({2});
  l.rank = 4;
  auto swap = IntegerMatrix::from_rows({{0, 1}, {1, 0}});
  l.generator_action = {block_diagonal({swap, swap})};

  auto p = prym_lattice(l);
  CHECK(p.rank == 2);
  CHECK(p.dimension == 1);
  CHECK(p.sublattice != Sublattice::full(4));

  auto decomposition = verify_decomposition(l);
  CHECK(decomposition.fixed_rank == 2);
  CHECK(decomposition.prym_rank == 2);
  CHECK(decomposition.torsion_exponent == 2);
  CHECK(decomposition.passed());

  for (long long n : {1, 2, 3}) {
    auto report = verify_product(l, n);
    CHECK(report.rank_matches);
    CHECK(report.basis_matches);
    CHECK(report.passed());
  }
}

TEST_CASE("group ring rank distinguishes the involution from a triple cover") {
  // Hyperelliptic involution acts as -1, so the group ring spans only I.
  auto z2 = h1_of("z2-6pts");
  CHECK(z2.generator_action[0] == -IntegerMatrix::identity(4));
  CHECK(group_ring_rank(z2) == 1);

  // An order-3 action satisfies 1 + rho + rho^2 = 0 with rho != I, so the
  // group ring has rank exactly 2.
  auto z3 = h1_of("z3-111");
  CHECK(group_ring_rank(z3) == 2);
}

TEST_CASE("commutant rank agrees with the direct linear solve") {
  for (const auto& label :
       {"z2-2pts", "z2-6pts", "z3-111", "z4-112", "v4-aabb", "z2z4-abc"}) {
    CAPTURE(label);
    auto l = h1_of(label);
    CHECK(commutant_rank(l) == commutant_rank_oracle(l));
  }
  CHECK(commutant_rank(h1_of("z2-6pts")) == 16);  // full matrix algebra
  CHECK(commutant_rank(h1_of("z3-111")) == 2);
}

TEST_CASE("group ring rank never exceeds the commutant rank") {
  // For an abelian group both sit inside the endomorphism algebra; the
  // group ring image is always contained in the commutant.
  for (const auto& e : corpus()) {
    if (e.genus > 4) continue;
    CAPTURE(e.label);
    auto l = h1_with_action(build_cover_complex(to_branch(e)));
    if (l.rank == 0) continue;
    CHECK(group_ring_rank(l) <= commutant_rank(l));
  }
}

TEST_CASE("rank bound reproduces the closing computation") {
  auto b6 = to_branch(entry("z2-6pts"));
  auto r5 = rank_bound(b6, 5);
  CHECK(r5.genus == 2);
  CHECK(r5.n_copies == 5);
  CHECK(r5.prym_product_rank == 20);
  CHECK(r5.end_rank_lower == 1);
  CHECK(r5.end_rank_used == 1);
  CHECK(r5.bound == 5);
  CHECK(r5.group_order == 2);
  CHECK_FALSE(r5.torsion_note.empty());
  CHECK_FALSE(r5.assumptions.empty());

  auto b3 = to_branch(entry("z3-111"));
  auto r4 = rank_bound(b3, 4);
  CHECK(r4.genus == 1);
  CHECK(r4.end_rank_lower == 2);
  CHECK(r4.end_rank_upper == 2);
  CHECK(r4.bound == 8);
}

TEST_CASE("rank bound accepts overrides above the certified floor") {
  auto b = to_branch(entry("z2-6pts"));
  auto overridden = rank_bound(b, 5, 3);
  CHECK(overridden.end_rank_lower == 1);
  CHECK(overridden.end_rank_used == 3);
  CHECK(overridden.bound == 15);

  auto b3 = to_branch(entry("z3-111"));
  CHECK_THROWS_AS(rank_bound(b3, 4, 1), OverrideBelowCertifiedLower);
  CHECK_THROWS_AS(rank_bound(b, 0), InvalidCopyCount);
  auto bad = make_branch_data(make_group({3}), {{1}, {1}});
  CHECK_THROWS_AS(rank_bound(bad, 2), InvalidBranchData);
}

TEST_CASE("rank bound doubles with the copy count") {
  for (const auto& label : {"z2-6pts", "z3-111", "z4-112", "z2z4-abc"}) {
    CAPTURE(label);
    auto b = to_branch(entry(label));
    for (long long n : {1, 2, 3}) {
      auto single = rank_bound(b, n);
      auto doubled = rank_bound(b, 2 * n);
      CHECK(doubled.bound == 2 * single.bound);
    }
  }
}
