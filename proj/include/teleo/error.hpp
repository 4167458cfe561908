#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace teleo {

enum class ErrorCode {
  duplicate_name,
  undeclared_object,
  invalid_name,
  syntax_error,
  type_mismatch,
  not_dualisable,
  unknown_symbol,
  boundary_mismatch,
  not_an_adaptor,
  not_a_scalar,
  invalid_partition,
  infeasible_subset,
  unmapped_symbol,
  dual_undefined,
  invalid_graph,
  invalid_input,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct Issue {
  ErrorCode code;
  std::string subject;  // offending symbol, node or edge
  std::string message;
};

/// Result of the validate_* operations. Empty issue list means valid.
struct ValidationReport {
  std::vector<Issue> issues;

  bool ok() const noexcept { return issues.empty(); }
  void add(ErrorCode code, std::string subject, std::string message) {
    issues.push_back({code, std::move(subject), std::move(message)});
  }
};

}  // namespace teleo
