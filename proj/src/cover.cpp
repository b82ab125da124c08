#include "prymlat/cover.hpp"

#include <algorithm>

#include "prymlat/errors.hpp"
#include "prymlat/lattice.hpp"

namespace prymlat {

BranchData make_branch_data(const FiniteAbelianGroup& group,
                            const std::vector<std::vector<long long>>& coords,
                            std::string label) {
  BranchData b;
  b.group = group;
  b.label = std::move(label);
  b.monodromy.reserve(coords.size());
  for (const auto& c : coords) b.monodromy.push_back(group.element(c));
  return b;
}

std::string Violation::describe() const {
  std::string s;
  switch (kind) {
    case ViolationKind::SumNotZero:
      s = "SumNotZero";
      break;
    case ViolationKind::TrivialMonodromy:
      s = "TrivialMonodromy";
      break;
    case ViolationKind::NotGenerating:
      s = "NotGenerating";
      break;
    case ViolationKind::WrongGroup:
      s = "WrongGroup";
      break;
  }
  if (index) s += " at index " + std::to_string(*index);
  return s;
}

namespace {

// The g_i generate G iff the map Z^r + diag relations -> G is onto, i.e. all
// elementary divisors of [coords | diag(d)] are 1.
bool generates(const BranchData& b) {
  std::size_t k = b.group.num_factors();
  if (k == 0) return true;
  std::size_t r = b.monodromy.size();
  IntegerMatrix m(k, r + k);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < k; ++i)
      m.at(i, j) = b.monodromy[j].coords()[i];
  for (std::size_t i = 0; i < k; ++i)
    m.at(i, r + i) = b.group.invariant_factors()[i];
  auto divisors = smith_normal_form(m).divisors();
  return divisors.size() == k &&
         std::all_of(divisors.begin(), divisors.end(),
                     [](const Int& d) { return d == 1; });
}

}  // namespace

std::vector<Violation> validate(const BranchData& b) {
  std::vector<Violation> out;
  bool groups_ok = true;
  for (std::size_t i = 0; i < b.monodromy.size(); ++i) {
    if (b.monodromy[i].group() != b.group) {
      out.push_back({ViolationKind::WrongGroup, i});
      groups_ok = false;
    }
  }
  if (!groups_ok) return out;

  for (std::size_t i = 0; i < b.monodromy.size(); ++i)
    if (b.monodromy[i].is_identity())
      out.push_back({ViolationKind::TrivialMonodromy, i});

  GroupElement total = b.group.identity();
  for (const auto& g : b.monodromy) total = add(total, g);
  if (!total.is_identity())
    out.push_back({ViolationKind::SumNotZero, std::nullopt});

  if (!generates(b))
    out.push_back({ViolationKind::NotGenerating, std::nullopt});
  return out;
}

bool is_valid(const BranchData& b) { return validate(b).empty(); }

namespace {

void require_valid(const BranchData& b) {
  auto violations = validate(b);
  if (violations.empty()) return;
  std::string msg = "invalid branch data:";
  for (const auto& v : violations) msg += " " + v.describe();
  throw InvalidBranchData(msg);
}

}  // namespace

long long genus(const BranchData& b) {
  require_valid(b);
  long long n = b.group.order();
  Int ramification = 0;
  for (const auto& g : b.monodromy)
    ramification += n - n / element_order(g);
  Int two_g = 2 * Int(1 - n) + ramification;
  if (two_g % 2 != 0 || two_g < 0)
    throw InvariantViolation("Riemann-Hurwitz did not yield a genus");
  return static_cast<long long>(two_g / 2);
}

EigenspaceTable chevalley_weil_dims(const BranchData& b) {
  require_valid(b);
  EigenspaceTable table;
  table.characters = all_characters(b.group);
  table.dims.reserve(table.characters.size());
  for (const auto& chi : table.characters) {
    if (chi.is_trivial()) {
      table.dims.push_back(0);
      continue;
    }
    Rat total = 0;
    for (const auto& g : b.monodromy) total += character_exponent(chi, g);
    Rat d = total - 1;
    Int num = boost::multiprecision::numerator(d);
    Int den = boost::multiprecision::denominator(d);
    if (den != 1 || num < 0)
      throw InvariantViolation("eigenspace dimension is not a nonnegative integer");
    table.dims.push_back(static_cast<long long>(num));
    table.total += table.dims.back();
  }
  if (table.total != genus(b))
    throw InvariantViolation("eigenspace dimensions do not sum to the genus");
  return table;
}

long long EigenspaceTable::at(const Character& chi) const {
  for (std::size_t i = 0; i < characters.size(); ++i)
    if (characters[i] == chi) return dims[i];
  throw GroupMismatch("character not in table");
}

}  // namespace prymlat
