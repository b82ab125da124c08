#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prymlat/cover.hpp"

#include <json.hpp>

namespace prymlat {

// On-disk description of a cover, one per file:
//
//   {
//     "group": { "invariant_factors": [2, 4] },
//     "branch_points": [ { "monodromy": [1, 0] }, ... ],
//     "label": "optional name"
//   }
//
// The given factors may be any positive moduli; they are canonicalized and
// the monodromy coordinates transported into invariant-factor form.
// Coordinates are reduced modulo the given moduli.
struct CoverDocument {
  std::vector<long long> invariant_factors;
  std::vector<std::vector<long long>> branch_points;
  std::optional<std::string> label;
};

// Throws DocumentError naming the offending field.
CoverDocument parse_cover_document(const nlohmann::json& doc);
CoverDocument load_cover_document(const std::string& path);

nlohmann::ordered_json document_to_json(const CoverDocument& doc);

BranchData to_branch_data(const CoverDocument& doc);

}  // namespace prymlat
