#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qlab {

// A named element participating in a violation, e.g. {"alpha", "a"}.
using Witness = std::vector<std::pair<std::string, std::string>>;

// Single law evaluation result, used both by validators (first failure is
// thrown) and by the CLI `check` command (all laws reported).
struct LawStatus {
  std::string law;
  bool ok = true;
  Witness witness;
  std::string note;
};

// Thrown when a structure fails validation or an operation's precondition is
// not met.  `code` is a stable machine-readable identifier (AssocFail,
// NotAPoset, SearchBoundExceeded, ...), `witness` names the offending
// elements.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string code, const std::string& detail,
                  Witness witness = {})
      : std::runtime_error(code + ": " + detail),
        code_(std::move(code)),
        witness_(std::move(witness)) {}

  const std::string& code() const noexcept { return code_; }
  const Witness& witness() const noexcept { return witness_; }

 private:
  std::string code_;
  Witness witness_;
};

// Violation of a statement the implementation treats as always true.  If one
// of these ever fires the build is wrong, not the input.
class TheoremViolation : public ValidationError {
 public:
  TheoremViolation(const std::string& detail, Witness witness = {})
      : ValidationError("TheoremViolation", detail, std::move(witness)) {}
};

inline ValidationError bound_exceeded(const std::string& what, int size,
                                      int bound) {
  return ValidationError(
      "SearchBoundExceeded",
      what + " (size " + std::to_string(size) + " exceeds bound " +
          std::to_string(bound) + ")");
}

}  // namespace qlab
