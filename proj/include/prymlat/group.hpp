#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prymlat/matrix.hpp"

namespace prymlat {

struct GroupPresentation;

// Finite abelian group in canonical invariant-factor form d1 | d2 | ... | dk,
// every factor >= 2 (empty list = trivial group).  Canonical form is the one
// internal representation, so group equality is structural equality and
// element enumeration order is reproducible.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;  // trivial group

  const std::vector<long long>& invariant_factors() const { return factors_; }
  std::size_t num_factors() const { return factors_.size(); }
  long long order() const { return order_; }
  long long exponent() const {
    return factors_.empty() ? 1 : factors_.back();
  }
  bool is_trivial() const { return factors_.empty(); }

  class Element;
  Element identity() const;
  Element element(std::vector<long long> coords) const;  // reduced mod d_i
  Element element_at(long long index) const;  // lexicographic enumeration
  long long index_of(const Element& g) const;
  std::vector<Element> elements() const;

  std::string describe() const;  // "Z/2 x Z/4", "trivial"

  bool operator==(const FiniteAbelianGroup&) const = default;

 private:
  friend GroupPresentation make_group_presentation(
      const std::vector<long long>& moduli);
  explicit FiniteAbelianGroup(std::vector<long long> factors);

  std::vector<long long> factors_;
  long long order_ = 1;
};

class FiniteAbelianGroup::Element {
 public:
  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<long long>& coords() const { return coords_; }
  bool is_identity() const;
  bool operator==(const Element&) const = default;

 private:
  friend class FiniteAbelianGroup;
  Element(FiniteAbelianGroup group, std::vector<long long> coords)
      : group_(std::move(group)), coords_(std::move(coords)) {}
  FiniteAbelianGroup group_;
  std::vector<long long> coords_;
};

using GroupElement = FiniteAbelianGroup::Element;

// Canonical invariant-factor form of prod Z/m_i.  Moduli equal to 1 are
// dropped; throws EmptyOrNonPositiveModulus on m <= 0.
FiniteAbelianGroup make_group(const std::vector<long long>& moduli);

// Same, but also keeps the coordinate change from the given moduli to the
// canonical coordinates (needed to interpret user-supplied tuples).
struct GroupPresentation {
  std::vector<long long> moduli;
  FiniteAbelianGroup group;
  IntegerMatrix coordinate_map;  // num_factors x moduli.size()

  GroupElement element(const std::vector<long long>& coords) const;
};

GroupPresentation make_group_presentation(const std::vector<long long>& moduli);

GroupElement add(const GroupElement& g, const GroupElement& h);
GroupElement negate(const GroupElement& g);
GroupElement multiple(const GroupElement& g, long long n);
long long element_order(const GroupElement& g);

// Characters chi of G, stored by their exponent tuple: chi sends the i-th
// canonical generator to exp(2*pi*i * e_i / d_i).
class Character {
 public:
  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<long long>& exponents() const { return exponents_; }
  bool is_trivial() const;
  bool operator==(const Character&) const = default;

  Character(FiniteAbelianGroup group, std::vector<long long> exponents);

 private:
  FiniteAbelianGroup group_;
  std::vector<long long> exponents_;
};

// All |G| characters in lexicographic order on exponent tuples; the trivial
// character comes first.
std::vector<Character> all_characters(const FiniteAbelianGroup& g);

Character conjugate(const Character& chi);

// chi(g) = exp(2*pi*i * nu) with nu in [0,1) returned exactly.
Rat character_exponent(const Character& chi, const GroupElement& g);

}  // namespace prymlat
