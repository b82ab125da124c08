#include <doctest.h>

#include <random>

#include "prymlat/errors.hpp"
#include "prymlat/lattice.hpp"
#include "test_support.hpp"

using namespace prymlat;
using prymtest::random_matrix;

TEST_CASE("kernel of a known matrix") {
  auto a = IntegerMatrix::from_rows({{1, 1, 1}});
  auto k = kernel_basis(a);
  CHECK(k.ambient_rank() == 3);
  CHECK(k.rank() == 2);
  CHECK(k.is_saturated());
  CHECK((a * k.basis()).is_zero());
}

TEST_CASE("kernel properties on random matrices") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_matrix(rng, dim(rng), dim(rng), -12, 12);
    auto k = kernel_basis(a);
    CHECK((a * k.basis()).is_zero());
    CHECK(k.is_saturated());
    CHECK(k.rank() == a.cols() - rational_rank(a));
  }
}

TEST_CASE("image basis spans the columns") {
  auto a = IntegerMatrix::from_rows({{2, 2}, {0, 4}});
  auto im = image_basis(a);
  CHECK(im.rank() == 2);
  for (std::size_t j = 0; j < a.cols(); ++j)
    CHECK(membership(a.column(j), im));
  CHECK_FALSE(im.is_saturated());  // index 8 in Z^2
}

TEST_CASE("saturation") {
  auto doubled = IntegerMatrix::from_rows({{2}, {0}});
  auto l = Sublattice::from_generators(2, doubled);
  CHECK_FALSE(l.is_saturated());
  auto s = saturate(l);
  CHECK(s.is_saturated());
  CHECK(s.rank() == 1);
  CHECK(s.basis().at(0, 0) == 1);
  CHECK(s.basis().at(1, 0) == 0);

  std::mt19937_64 rng(22);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_matrix(rng, dim(rng), dim(rng), -12, 12);
    auto im = image_basis(a);
    auto sat = saturate(im);
    CHECK(saturate(sat) == sat);  // idempotent
    CHECK(sat.rank() == im.rank());
    for (std::size_t j = 0; j < im.basis().cols(); ++j)
      CHECK(membership(im.basis().column(j), sat));
  }
}

TEST_CASE("sum and intersection satisfy the rank identity") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t ambient = 5;
    auto l1 = Sublattice::from_generators(
        ambient, random_matrix(rng, ambient, dim(rng), -9, 9));
    auto l2 = Sublattice::from_generators(
        ambient, random_matrix(rng, ambient, dim(rng), -9, 9));
    auto s = sum(l1, l2);
    auto i = intersect(l1, l2);
    CHECK(l1.rank() + l2.rank() == s.rank() + i.rank());
    for (std::size_t j = 0; j < i.basis().cols(); ++j) {
      CHECK(membership(i.basis().column(j), l1));
      CHECK(membership(i.basis().column(j), l2));
    }
    for (std::size_t j = 0; j < l1.basis().cols(); ++j)
      CHECK(membership(l1.basis().column(j), s));
  }
}

TEST_CASE("zero and full sublattices") {
  auto z = Sublattice::zero(3);
  auto f = Sublattice::full(3);
  CHECK(z.rank() == 0);
  CHECK(f.rank() == 3);
  CHECK(sum(z, f) == f);
  CHECK(intersect(z, f) == z);
  auto l = Sublattice::from_generators(
      3, IntegerMatrix::from_rows({{1, 0}, {0, 2}, {0, 0}}));
  CHECK(sum(l, z) == l);
  CHECK(intersect(l, f) == l);
}

TEST_CASE("cokernel exponent") {
  CHECK(cokernel_exponent(Sublattice::full(4)) == Int(1));
  auto doubled = Sublattice::from_generators(
      2, IntegerMatrix::from_rows({{2, 0}, {0, 2}}));
  CHECK(cokernel_exponent(doubled) == Int(2));
  auto mixed = Sublattice::from_generators(
      2, IntegerMatrix::from_rows({{1, 0}, {0, 6}}));
  CHECK(cokernel_exponent(mixed) == Int(6));
  auto thin = Sublattice::from_generators(
      2, IntegerMatrix::from_rows({{1}, {0}}));
  CHECK_FALSE(cokernel_exponent(thin).has_value());
}

TEST_CASE("membership and solving") {
  auto l = Sublattice::from_generators(
      3, IntegerMatrix::from_rows({{2, 0}, {0, 3}, {0, 0}}));
  CHECK(membership({2, 3, 0}, l));
  CHECK(membership({4, 0, 0}, l));
  CHECK_FALSE(membership({1, 0, 0}, l));
  CHECK_FALSE(membership({0, 0, 1}, l));

  auto x = solve_in_column_basis(l.basis(), {6, -3, 0});
  REQUIRE(x.has_value());
  CHECK(l.basis().apply(*x) == std::vector<Int>{6, -3, 0});
  CHECK_FALSE(solve_in_column_basis(l.basis(), {1, 1, 0}).has_value());
}

TEST_CASE("ambient mismatch is rejected") {
  CHECK_THROWS_AS(intersect(Sublattice::full(2), Sublattice::full(3)),
                  AmbientMismatch);
  CHECK_THROWS_AS(sum(Sublattice::zero(2), Sublattice::zero(4)),
                  AmbientMismatch);
  CHECK_THROWS_AS(membership({1, 2, 3}, Sublattice::full(2)), AmbientMismatch);
  CHECK_THROWS_AS(
      Sublattice::from_generators(3, IntegerMatrix::identity(2)),
      AmbientMismatch);
}
