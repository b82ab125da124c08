#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "prymlat/cover.hpp"
#include "prymlat/lattice.hpp"

namespace prymlat {

// Equivariant cellular model of the covering curve: the Schreier-graph lift
// of the one-vertex presentation complex of the punctured sphere, with one
// filling face per puncture of the cover.
//
//   vertices: one per group element
//   edges:    (i, g) = the lift of loop x_i starting at g, ending at g + g_i
//   faces:    relator faces (lift of x_1 x_2 ... x_r at each g), then
//             puncture faces (i, coset of <g_i>), in that order
//
// Cell ordering is deterministic: vertices in group enumeration order, edges
// by (i, g) with i major, coset representatives by enumeration order.
struct CoverComplex {
  BranchData branch;
  long long group_order = 1;
  std::vector<long long> point_orders;  // m_i = order of g_i

  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t relator_face_count = 0;
  std::vector<std::pair<std::size_t, long long>> puncture_faces;  // (i, rep)

  IntegerMatrix d1;  // vertices x edges
  IntegerMatrix d2;  // edges x faces

  std::size_t face_count() const {
    return relator_face_count + puncture_faces.size();
  }
  long long euler_characteristic() const;

  std::size_t edge_index(std::size_t point, long long element_index) const {
    return point * static_cast<std::size_t>(group_order) +
           static_cast<std::size_t>(element_index);
  }

  // Left-translation action of h on cell indices.
  std::vector<std::size_t> vertex_permutation(const GroupElement& h) const;
  std::vector<std::size_t> edge_permutation(const GroupElement& h) const;
  std::vector<std::size_t> face_permutation(const GroupElement& h) const;

 private:
  friend CoverComplex build_cover_complex(const BranchData& b);
  // per point i: element index -> representative index of its <g_i>-coset
  std::vector<std::vector<long long>> coset_rep_;
};

CoverComplex build_cover_complex(const BranchData& b);

// H1 of the covering curve: a free lattice of rank 2g together with the
// action of each group generator, as integer matrices in a fixed basis.
struct EquivariantLattice {
  FiniteAbelianGroup group;
  std::size_t rank = 0;
  std::vector<IntegerMatrix> generator_action;  // one per invariant factor
};

EquivariantLattice h1_with_action(const CoverComplex& c);

IntegerMatrix element_action(const EquivariantLattice& l,
                             const GroupElement& g);
// All |G| action matrices, in group enumeration order.
std::vector<IntegerMatrix> all_element_actions(const EquivariantLattice& l);

// Complex dimension of the chi-eigenspace of the action on L (x) C.  Exact:
// computed over two distinct primes p = 1 (mod exponent) with p > 2*rank+1
// and p > |G|, mapping roots of unity into the prime field; the two results
// are cross-checked and must agree.
long long isotypic_dimension(const EquivariantLattice& l, const Character& chi);

// The two primes isotypic_dimension would use (exposed for verification).
std::pair<long long, long long> isotypic_check_primes(
    const EquivariantLattice& l);

}  // namespace prymlat
