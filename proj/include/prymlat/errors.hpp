#pragma once

#include <stdexcept>
#include <string>

namespace prymlat {

// Input-level errors (map to CLI exit code 1).
struct EmptyOrNonPositiveModulus : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GroupMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct AmbientMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidBranchData : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidCopyCount : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct OverrideBelowCertifiedLower : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DocumentError : std::invalid_argument {
  DocumentError(const std::string& field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field(field) {}
  std::string field;
};

// Internal invariant violations (map to CLI exit code 2).  Surface homology
// is torsion-free, so seeing torsion means the chain-level computation is
// wrong, not the input.
struct TorsionDetected : std::logic_error {
  using std::logic_error::logic_error;
};

struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace prymlat
