#include "prymlat/cover_io.hpp"

#include <fstream>
#include <sstream>

#include "prymlat/errors.hpp"
#include "prymlat/group.hpp"

namespace prymlat {

namespace {

long long require_positive_integer(const nlohmann::json& v, const std::string& field) {
  if (!v.is_number_integer())
    throw DocumentError(field, "expected an integer");
  long long x = v.get<long long>();
  if (x <= 0)
    throw DocumentError(field, "expected a positive integer");
  return x;
}

long long require_integer(const nlohmann::json& v, const std::string& field) {
  if (!v.is_number_integer())
    throw DocumentError(field, "expected an integer");
  return v.get<long long>();
}

}  // namespace

CoverDocument parse_cover_document(const nlohmann::json& doc) {
  if (!doc.is_object())
    throw DocumentError("$", "expected a JSON object");

  CoverDocument out;

  auto git = doc.find("group");
  if (git == doc.end())
    throw DocumentError("group", "missing");
  if (!git->is_object())
    throw DocumentError("group", "expected an object");
  auto fit = git->find("invariant_factors");
  if (fit == git->end())
    throw DocumentError("group.invariant_factors", "missing");
  if (!fit->is_array() || fit->empty())
    throw DocumentError("group.invariant_factors", "expected a non-empty array");
  for (std::size_t i = 0; i < fit->size(); ++i) {
    std::ostringstream field;
    field << "group.invariant_factors[" << i << "]";
    out.invariant_factors.push_back(require_positive_integer((*fit)[i], field.str()));
  }

  auto bit = doc.find("branch_points");
  if (bit == doc.end())
    throw DocumentError("branch_points", "missing");
  if (!bit->is_array())
    throw DocumentError("branch_points", "expected an array");
  for (std::size_t i = 0; i < bit->size(); ++i) {
    const auto& bp = (*bit)[i];
    std::ostringstream base;
    base << "branch_points[" << i << "]";
    if (!bp.is_object())
      throw DocumentError(base.str(), "expected an object");
    auto mit = bp.find("monodromy");
    if (mit == bp.end())
      throw DocumentError(base.str() + ".monodromy", "missing");
    if (!mit->is_array())
      throw DocumentError(base.str() + ".monodromy", "expected an array");
    if (mit->size() != out.invariant_factors.size())
      throw DocumentError(base.str() + ".monodromy",
                          "expected one coordinate per group factor");
    std::vector<long long> coords;
    for (std::size_t j = 0; j < mit->size(); ++j) {
      std::ostringstream field;
      field << base.str() << ".monodromy[" << j << "]";
      coords.push_back(require_integer((*mit)[j], field.str()));
    }
    out.branch_points.push_back(std::move(coords));
  }

  auto lit = doc.find("label");
  if (lit != doc.end()) {
    if (!lit->is_string())
      throw DocumentError("label", "expected a string");
    out.label = lit->get<std::string>();
  }

  return out;
}

CoverDocument load_cover_document(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw DocumentError(path, "cannot open file");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw DocumentError(path, std::string("invalid JSON: ") + e.what());
  }
  return parse_cover_document(doc);
}

nlohmann::ordered_json document_to_json(const CoverDocument& doc) {
  nlohmann::ordered_json out;
  out["group"]["invariant_factors"] = doc.invariant_factors;
  out["branch_points"] = nlohmann::ordered_json::array();
  for (const auto& coords : doc.branch_points) {
    nlohmann::ordered_json bp;
    bp["monodromy"] = coords;
    out["branch_points"].push_back(std::move(bp));
  }
  if (doc.label)
    out["label"] = *doc.label;
  return out;
}

BranchData to_branch_data(const CoverDocument& doc) {
  GroupPresentation pres = make_group_presentation(doc.invariant_factors);
  std::vector<FiniteAbelianGroup::Element> monodromy;
  monodromy.reserve(doc.branch_points.size());
  for (const auto& coords : doc.branch_points)
    monodromy.push_back(pres.element(coords));
  return BranchData{pres.group, std::move(monodromy),
                    doc.label.value_or(std::string{})};
}

}  // namespace prymlat
