#include "prymlat/homology.hpp"

#include <algorithm>
#include <cstdint>

#include "prymlat/errors.hpp"

namespace prymlat {

long long CoverComplex::euler_characteristic() const {
  return static_cast<long long>(vertex_count) -
         static_cast<long long>(edge_count) +
         static_cast<long long>(face_count());
}

std::vector<std::size_t> CoverComplex::vertex_permutation(
    const GroupElement& h) const {
  if (h.group() != branch.group)
    throw GroupMismatch("vertex_permutation: element of a different group");
  std::vector<std::size_t> perm(vertex_count);
  for (long long v = 0; v < group_order; ++v)
    perm[static_cast<std::size_t>(v)] = static_cast<std::size_t>(
        branch.group.index_of(add(branch.group.element_at(v), h)));
  return perm;
}

std::vector<std::size_t> CoverComplex::edge_permutation(
    const GroupElement& h) const {
  std::vector<std::size_t> vperm = vertex_permutation(h);
  std::vector<std::size_t> perm(edge_count);
  for (std::size_t i = 0; i < branch.monodromy.size(); ++i)
    for (long long g = 0; g < group_order; ++g)
      perm[edge_index(i, g)] =
          edge_index(i, static_cast<long long>(vperm[static_cast<std::size_t>(g)]));
  return perm;
}

std::vector<std::size_t> CoverComplex::face_permutation(
    const GroupElement& h) const {
  std::vector<std::size_t> vperm = vertex_permutation(h);
  std::vector<std::size_t> perm(face_count());
  for (long long g = 0; g < group_order; ++g)
    perm[static_cast<std::size_t>(g)] = vperm[static_cast<std::size_t>(g)];
  // Map each puncture face to the face of the translated coset.
  std::vector<std::vector<std::size_t>> face_of(branch.monodromy.size());
  for (std::size_t f = 0; f < puncture_faces.size(); ++f) {
    auto [i, rep] = puncture_faces[f];
    if (face_of[i].empty())
      face_of[i].assign(static_cast<std::size_t>(group_order), 0);
    face_of[i][static_cast<std::size_t>(rep)] = relator_face_count + f;
  }
  for (std::size_t f = 0; f < puncture_faces.size(); ++f) {
    auto [i, rep] = puncture_faces[f];
    long long image = static_cast<long long>(vperm[static_cast<std::size_t>(rep)]);
    long long image_rep = coset_rep_[i][static_cast<std::size_t>(image)];
    perm[relator_face_count + f] =
        face_of[i][static_cast<std::size_t>(image_rep)];
  }
  return perm;
}

CoverComplex build_cover_complex(const BranchData& b) {
  {
    auto violations = validate(b);
    if (!violations.empty()) {
      std::string msg = "invalid branch data:";
      for (const auto& v : violations) msg += " " + v.describe();
      throw InvalidBranchData(msg);
    }
  }

  CoverComplex c;
  c.branch = b;
  c.group_order = b.group.order();
  const long long n = c.group_order;
  const std::size_t r = b.monodromy.size();

  c.vertex_count = static_cast<std::size_t>(n);
  c.edge_count = r * static_cast<std::size_t>(n);
  c.relator_face_count = static_cast<std::size_t>(n);

  for (const auto& g : b.monodromy) c.point_orders.push_back(element_order(g));

  // Cosets of <g_i>: orbits of translation by g_i, representative = first
  // element hit in enumeration order.
  c.coset_rep_.assign(r, std::vector<long long>(static_cast<std::size_t>(n), -1));
  for (std::size_t i = 0; i < r; ++i) {
    auto& rep = c.coset_rep_[i];
    for (long long start = 0; start < n; ++start) {
      if (rep[static_cast<std::size_t>(start)] != -1) continue;
      GroupElement e = b.group.element_at(start);
      for (long long s = 0; s < c.point_orders[i]; ++s) {
        rep[static_cast<std::size_t>(b.group.index_of(e))] = start;
        e = add(e, b.monodromy[i]);
      }
      c.puncture_faces.emplace_back(i, start);
    }
  }
  // Reorder puncture faces to (i, rep) lexicographic; the scan above already
  // produces i-major, rep-ascending order, so this is a no-op kept as a
  // guard.
  std::sort(c.puncture_faces.begin(), c.puncture_faces.end());

  c.d1 = IntegerMatrix(c.vertex_count, c.edge_count);
  for (std::size_t i = 0; i < r; ++i)
    for (long long g = 0; g < n; ++g) {
      long long head = b.group.index_of(add(b.group.element_at(g), b.monodromy[i]));
      std::size_t e = c.edge_index(i, g);
      c.d1.at(static_cast<std::size_t>(head), e) += 1;
      c.d1.at(static_cast<std::size_t>(g), e) -= 1;
    }

  c.d2 = IntegerMatrix(c.edge_count, c.face_count());
  // Relator face at g: the lift of x_1 x_2 ... x_r starting at g.
  for (long long g = 0; g < n; ++g) {
    GroupElement at = b.group.element_at(g);
    for (std::size_t i = 0; i < r; ++i) {
      c.d2.at(c.edge_index(i, b.group.index_of(at)), static_cast<std::size_t>(g)) += 1;
      at = add(at, b.monodromy[i]);
    }
  }
  // Puncture face (i, rep): the x_i-cycle through the coset.
  for (std::size_t f = 0; f < c.puncture_faces.size(); ++f) {
    auto [i, rep] = c.puncture_faces[f];
    GroupElement at = b.group.element_at(rep);
    for (long long s = 0; s < c.point_orders[i]; ++s) {
      c.d2.at(c.edge_index(i, b.group.index_of(at)),
              c.relator_face_count + f) += 1;
      at = add(at, b.monodromy[i]);
    }
  }

  if (!(c.d1 * c.d2).is_zero())
    throw InvariantViolation("boundary of a boundary is nonzero");
  return c;
}

namespace {

std::vector<Int> permute_chain(const std::vector<Int>& chain,
                               const std::vector<std::size_t>& perm) {
  std::vector<Int> out(chain.size());
  for (std::size_t c = 0; c < chain.size(); ++c) out[perm[c]] = chain[c];
  return out;
}

}  // namespace

EquivariantLattice h1_with_action(const CoverComplex& c) {
  // Cycles, then boundaries expressed in cycle coordinates.
  Sublattice cycles = kernel_basis(c.d1);
  const std::size_t z = cycles.rank();

  IntegerMatrix boundaries(z, c.face_count());
  for (std::size_t f = 0; f < c.face_count(); ++f) {
    auto y = solve_in_column_basis(cycles.basis(), c.d2.column(f));
    if (!y)
      throw InvariantViolation("face boundary is not an integral cycle");
    boundaries.set_column(f, *y);
  }

  // H1 = Z^z / im(boundaries).  After U*M*V = D the quotient is
  // (+) Z/d_j (+) Z^(z-s) in the coordinates Ux; torsion-free means all
  // elementary divisors are 1.
  SmithExtended s = smith_extended(boundaries);
  const std::size_t rank_b = s.rank();
  for (std::size_t j = 0; j < rank_b; ++j)
    if (s.d.at(j, j) != 1)
      throw TorsionDetected("H1 of the cover complex has torsion");

  EquivariantLattice l;
  l.group = c.branch.group;
  l.rank = z - rank_b;

  // Lift of the quotient basis: cycles K * (columns s.. of U^{-1}).
  IntegerMatrix lifts(c.edge_count, l.rank);
  for (std::size_t j = 0; j < l.rank; ++j) {
    std::vector<Int> u_col = s.u_inv.column(rank_b + j);
    lifts.set_column(j, cycles.basis().apply(u_col));
  }

  auto quotient_class = [&](const std::vector<Int>& cycle) {
    auto y = solve_in_column_basis(cycles.basis(), cycle);
    if (!y) throw InvariantViolation("translated cycle left the cycle lattice");
    std::vector<Int> uy = s.u.apply(*y);
    return std::vector<Int>(uy.begin() + static_cast<std::ptrdiff_t>(rank_b),
                            uy.end());
  };

  for (std::size_t gen = 0; gen < l.group.num_factors(); ++gen) {
    std::vector<long long> coords(l.group.num_factors(), 0);
    coords[gen] = 1;
    auto perm = c.edge_permutation(l.group.element(coords));
    IntegerMatrix action(l.rank, l.rank);
    for (std::size_t j = 0; j < l.rank; ++j)
      action.set_column(j, quotient_class(permute_chain(lifts.column(j), perm)));
    l.generator_action.push_back(std::move(action));
  }

  // Group relations pin down invertibility: rho(t_i)^{d_i} = I.
  for (std::size_t i = 0; i < l.generator_action.size(); ++i) {
    if (!matrix_power(l.generator_action[i], l.group.invariant_factors()[i])
             .is_identity())
      throw InvariantViolation("generator action does not satisfy its relation");
    for (std::size_t j = 0; j < i; ++j)
      if (l.generator_action[i] * l.generator_action[j] !=
          l.generator_action[j] * l.generator_action[i])
        throw InvariantViolation("generator actions do not commute");
  }
  return l;
}

IntegerMatrix element_action(const EquivariantLattice& l,
                             const GroupElement& g) {
  if (g.group() != l.group)
    throw GroupMismatch("element_action: element of a different group");
  IntegerMatrix m = IntegerMatrix::identity(l.rank);
  for (std::size_t i = 0; i < l.group.num_factors(); ++i)
    if (g.coords()[i] != 0)
      m = m * matrix_power(l.generator_action[i], g.coords()[i]);
  return m;
}

std::vector<IntegerMatrix> all_element_actions(const EquivariantLattice& l) {
  // Expand along the invariant-factor structure, reusing generator powers.
  std::vector<std::vector<IntegerMatrix>> powers(l.group.num_factors());
  for (std::size_t i = 0; i < l.group.num_factors(); ++i) {
    powers[i].push_back(IntegerMatrix::identity(l.rank));
    for (long long e = 1; e < l.group.invariant_factors()[i]; ++e)
      powers[i].push_back(powers[i].back() * l.generator_action[i]);
  }
  std::vector<IntegerMatrix> out;
  out.reserve(static_cast<std::size_t>(l.group.order()));
  for (long long idx = 0; idx < l.group.order(); ++idx) {
    GroupElement g = l.group.element_at(idx);
    IntegerMatrix m = IntegerMatrix::identity(l.rank);
    for (std::size_t i = 0; i < l.group.num_factors(); ++i)
      if (g.coords()[i] != 0)
        m = m * powers[i][static_cast<std::size_t>(g.coords()[i])];
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 p) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}

u64 pow_mod(u64 base, u64 exp, u64 p) {
  u64 result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

u64 primitive_root(u64 p) {
  std::vector<u64> prime_factors;
  u64 m = p - 1;
  for (u64 q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      prime_factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) prime_factors.push_back(m);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (u64 q : prime_factors)
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
}

u64 to_mod(const Int& x, u64 p) {
  Int r = x % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  return static_cast<u64>(r);
}

std::size_t rank_mod_p(std::vector<std::vector<u64>> m, u64 p) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = rank; i < rows; ++i)
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    u64 inv = pow_mod(m[rank][c], p - 2, p);
    for (std::size_t j = c; j < cols; ++j) m[rank][j] = mul_mod(m[rank][j], inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][c] == 0) continue;
      u64 f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        u64 sub = mul_mod(f, m[rank][j], p);
        m[i][j] = (m[i][j] + p - sub) % p;
      }
    }
    ++rank;
  }
  return rank;
}

long long isotypic_dimension_mod_p(const EquivariantLattice& l,
                                   const Character& chi, u64 p) {
  const std::size_t k = l.group.num_factors();
  const std::size_t r = l.rank;
  if (r == 0) return 0;
  if (k == 0) return static_cast<long long>(r);  // trivial group, trivial chi

  u64 root = primitive_root(p);
  u64 expo = static_cast<u64>(l.group.exponent());
  u64 zeta = pow_mod(root, (p - 1) / expo, p);

  std::vector<std::vector<u64>> stacked(k * r, std::vector<u64>(r, 0));
  for (std::size_t i = 0; i < k; ++i) {
    u64 lambda = pow_mod(
        zeta,
        static_cast<u64>(expo / static_cast<u64>(l.group.invariant_factors()[i]) *
                         static_cast<u64>(chi.exponents()[i])),
        p);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) {
        u64 v = to_mod(l.generator_action[i].at(a, b), p);
        if (a == b) v = (v + p - lambda) % p;
        stacked[i * r + a][b] = v;
      }
  }
  return static_cast<long long>(r - rank_mod_p(std::move(stacked), p));
}

}  // namespace

std::pair<long long, long long> isotypic_check_primes(
    const EquivariantLattice& l) {
  long long expo = l.group.exponent();
  long long lower = std::max<long long>(2 * static_cast<long long>(l.rank) + 1,
                                        l.group.order());
  std::vector<long long> primes;
  for (long long p = lower + 1; primes.size() < 2; ++p)
    if (p % expo == 1 && is_prime(p)) primes.push_back(p);
  return {primes[0], primes[1]};
}

long long isotypic_dimension(const EquivariantLattice& l,
                             const Character& chi) {
  if (chi.group() != l.group)
    throw GroupMismatch("isotypic_dimension: character of a different group");
  auto [p1, p2] = isotypic_check_primes(l);
  long long d1 = isotypic_dimension_mod_p(l, chi, static_cast<u64>(p1));
  long long d2 = isotypic_dimension_mod_p(l, chi, static_cast<u64>(p2));
  if (d1 != d2)
    throw InvariantViolation("isotypic dimensions disagree between primes");
  return d1;
}

}  // namespace prymlat
