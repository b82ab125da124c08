#include "prymlat/group.hpp"

#include <algorithm>
#include <numeric>

#include "prymlat/errors.hpp"

namespace prymlat {

namespace {

long long checked_product(const std::vector<long long>& xs) {
  long long p = 1;
  for (long long x : xs) {
    if (x != 0 && p > (1LL << 62) / x)
      throw std::overflow_error("group order exceeds the supported range");
    p *= x;
  }
  return p;
}

long long mod_reduce(long long c, long long d) {
  long long r = c % d;
  return r < 0 ? r + d : r;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long long> factors)
    : factors_(std::move(factors)), order_(checked_product(factors_)) {}

GroupElement FiniteAbelianGroup::identity() const {
  return Element(*this, std::vector<long long>(num_factors(), 0));
}

GroupElement FiniteAbelianGroup::element(std::vector<long long> coords) const {
  if (coords.size() != num_factors())
    throw GroupMismatch("element: coordinate count does not match the group");
  for (std::size_t i = 0; i < coords.size(); ++i)
    coords[i] = mod_reduce(coords[i], factors_[i]);
  return Element(*this, std::move(coords));
}

GroupElement FiniteAbelianGroup::element_at(long long index) const {
  std::vector<long long> coords(num_factors());
  for (std::size_t i = num_factors(); i-- > 0;) {
    coords[i] = index % factors_[i];
    index /= factors_[i];
  }
  return Element(*this, std::move(coords));
}

long long FiniteAbelianGroup::index_of(const Element& g) const {
  if (g.group() != *this)
    throw GroupMismatch("index_of: element of a different group");
  long long index = 0;
  for (std::size_t i = 0; i < num_factors(); ++i)
    index = index * factors_[i] + g.coords()[i];
  return index;
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (long long i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

std::string FiniteAbelianGroup::describe() const {
  if (factors_.empty()) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += " x ";
    s += "Z/" + std::to_string(factors_[i]);
  }
  return s;
}

bool GroupElement::is_identity() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](long long c) { return c == 0; });
}

GroupPresentation make_group_presentation(
    const std::vector<long long>& moduli) {
  for (long long m : moduli)
    if (m <= 0)
      throw EmptyOrNonPositiveModulus("moduli must be positive, got " +
                                      std::to_string(m));
  // prod Z/m_i = Z^m / diag(m); the Smith form of diag(m) is the invariant
  // factor decomposition, and U transports coordinates.
  std::size_t m = moduli.size();
  IntegerMatrix diag(m, m);
  for (std::size_t i = 0; i < m; ++i) diag.at(i, i) = moduli[i];
  SmithExtended s = smith_extended(diag);

  std::vector<long long> factors;
  std::vector<std::size_t> kept_rows;
  for (std::size_t i = 0; i < m; ++i) {
    Int di = s.d.at(i, i);
    if (di > 1) {
      factors.push_back(static_cast<long long>(di));
      kept_rows.push_back(i);
    }
  }
  GroupPresentation p;
  p.moduli = moduli;
  p.group = FiniteAbelianGroup(std::move(factors));
  p.coordinate_map = IntegerMatrix(kept_rows.size(), m);
  for (std::size_t i = 0; i < kept_rows.size(); ++i)
    for (std::size_t j = 0; j < m; ++j)
      p.coordinate_map.at(i, j) = s.u.at(kept_rows[i], j);
  return p;
}

GroupElement GroupPresentation::element(
    const std::vector<long long>& coords) const {
  if (coords.size() != moduli.size())
    throw GroupMismatch("presentation element: coordinate count mismatch");
  std::vector<Int> v(coords.begin(), coords.end());
  std::vector<Int> w = coordinate_map.apply(v);
  std::vector<long long> canonical(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    Int r = w[i] % group.invariant_factors()[i];
    if (r < 0) r += group.invariant_factors()[i];
    canonical[i] = static_cast<long long>(r);
  }
  return group.element(std::move(canonical));
}

FiniteAbelianGroup make_group(const std::vector<long long>& moduli) {
  return make_group_presentation(moduli).group;
}

GroupElement add(const GroupElement& g, const GroupElement& h) {
  if (g.group() != h.group())
    throw GroupMismatch("add: elements of different groups");
  std::vector<long long> coords(g.coords());
  for (std::size_t i = 0; i < coords.size(); ++i)
    coords[i] = (coords[i] + h.coords()[i]) %
                g.group().invariant_factors()[i];
  return g.group().element(std::move(coords));
}

GroupElement negate(const GroupElement& g) {
  std::vector<long long> coords(g.coords());
  for (std::size_t i = 0; i < coords.size(); ++i)
    coords[i] = coords[i] == 0 ? 0 : g.group().invariant_factors()[i] - coords[i];
  return g.group().element(std::move(coords));
}

GroupElement multiple(const GroupElement& g, long long n) {
  std::vector<long long> coords(g.coords().size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    long long d = g.group().invariant_factors()[i];
    long long c = mod_reduce(n, d);
    coords[i] = static_cast<long long>(Int(g.coords()[i]) * c % d);
  }
  return g.group().element(std::move(coords));
}

long long element_order(const GroupElement& g) {
  long long order = 1;
  for (std::size_t i = 0; i < g.coords().size(); ++i) {
    long long d = g.group().invariant_factors()[i];
    long long component_order = d / std::gcd(d, g.coords()[i]);
    order = std::lcm(order, component_order);
  }
  return order;
}

Character::Character(FiniteAbelianGroup group, std::vector<long long> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
  if (exponents_.size() != group_.num_factors())
    throw GroupMismatch("character: exponent count does not match the group");
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    exponents_[i] = mod_reduce(exponents_[i], group_.invariant_factors()[i]);
}

bool Character::is_trivial() const {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](long long e) { return e == 0; });
}

std::vector<Character> all_characters(const FiniteAbelianGroup& g) {
  std::vector<Character> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  for (long long i = 0; i < g.order(); ++i)
    out.emplace_back(g, g.element_at(i).coords());
  return out;
}

Character conjugate(const Character& chi) {
  std::vector<long long> exps(chi.exponents());
  for (std::size_t i = 0; i < exps.size(); ++i)
    exps[i] = exps[i] == 0 ? 0 : chi.group().invariant_factors()[i] - exps[i];
  return Character(chi.group(), std::move(exps));
}

Rat character_exponent(const Character& chi, const GroupElement& g) {
  if (chi.group() != g.group())
    throw GroupMismatch("character_exponent: group mismatch");
  Rat nu = 0;
  for (std::size_t i = 0; i < chi.exponents().size(); ++i)
    nu += Rat(Int(chi.exponents()[i]) * g.coords()[i],
              Int(chi.group().invariant_factors()[i]));
  // Reduce into [0, 1).
  Int num = boost::multiprecision::numerator(nu);
  Int den = boost::multiprecision::denominator(nu);
  Int r = num % den;
  if (r < 0) r += den;
  return Rat(r, den);
}

}  // namespace prymlat
