#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace resproof {

enum class ErrorCode {
  kMissingPivot,
  kTautologicalResolvent,
  kTautologicalClause,
  kInvalidLiteral,
  kNoPivot,
  kAmbiguousPivot,
  kCycleDetected,
  kSingleChild,
  kNotARefutation,
  kInvalidNode,
  kSyntaxError,
  kLiteralOutOfRange,
  kDanglingAntecedent,
  kClauseMismatch,
  kAmbiguousRoot,
  kIllegalProof,
  kResourceLimit,
  kTooManyVariables,
  kRuleNotApplicable,
  kUnknownVariable,
  kMixedVariablePresent,
  kUntaggedLeaf,
  kMixedResidue,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> line = std::nullopt);

  ErrorCode code() const { return code_; }
  // 1-based input line for parse errors.
  std::optional<std::size_t> line() const { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace resproof
