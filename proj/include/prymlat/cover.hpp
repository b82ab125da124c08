#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prymlat/group.hpp"

namespace prymlat {

// An abelian cover of the projective line, given purely by its local
// monodromy: elements g_1, ..., g_r with sum zero that generate the group.
// Branch point coordinates are not modeled; every quantity computed here is
// invariant under moving the points.
struct BranchData {
  FiniteAbelianGroup group;
  std::vector<GroupElement> monodromy;
  std::string label;
};

BranchData make_branch_data(const FiniteAbelianGroup& group,
                            const std::vector<std::vector<long long>>& coords,
                            std::string label = "");

enum class ViolationKind {
  SumNotZero,        // product of local monodromies must be trivial
  TrivialMonodromy,  // a listed point must be genuinely branched
  NotGenerating,     // the cover must be connected
  WrongGroup,        // a monodromy element belongs to a different group
};

struct Violation {
  ViolationKind kind;
  std::optional<std::size_t> index;
  std::string describe() const;
  bool operator==(const Violation&) const = default;
};

// Reports every violated invariant; an empty list means valid.  Never throws
// on bad data -- violations are data.
std::vector<Violation> validate(const BranchData& b);

bool is_valid(const BranchData& b);

// Riemann-Hurwitz genus of the covering curve:
//   g = 1 - |G| + (1/2) * sum_i (|G| - |G|/m_i),  m_i = order of g_i.
long long genus(const BranchData& b);

// Dimensions d_chi of the character eigenspaces of holomorphic differentials
// on the cover; d at the trivial character is 0 and the nontrivial ones sum
// to the genus.
struct EigenspaceTable {
  std::vector<Character> characters;  // enumeration order of all_characters
  std::vector<long long> dims;
  long long total = 0;

  long long at(const Character& chi) const;
};

// d_chi = -1 + sum_i frac(nu_chi(g_i)) for nontrivial chi, with nu the exact
// character exponent in [0,1).  The sign convention (nu, not -nu) is fixed
// here once; only the pair sum d_chi + d_conj(chi) is pinned by the homology
// cross-check.
EigenspaceTable chevalley_weil_dims(const BranchData& b);

}  // namespace prymlat
