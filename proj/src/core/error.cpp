#include "resproof/error.hpp"

namespace resproof {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMissingPivot: return "MissingPivot";
    case ErrorCode::kTautologicalResolvent: return "TautologicalResolvent";
    case ErrorCode::kTautologicalClause: return "TautologicalClause";
    case ErrorCode::kInvalidLiteral: return "InvalidLiteral";
    case ErrorCode::kNoPivot: return "NoPivot";
    case ErrorCode::kAmbiguousPivot: return "AmbiguousPivot";
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kSingleChild: return "SingleChild";
    case ErrorCode::kNotARefutation: return "NotARefutation";
    case ErrorCode::kInvalidNode: return "InvalidNode";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kLiteralOutOfRange: return "LiteralOutOfRange";
    case ErrorCode::kDanglingAntecedent: return "DanglingAntecedent";
    case ErrorCode::kClauseMismatch: return "ClauseMismatch";
    case ErrorCode::kAmbiguousRoot: return "AmbiguousRoot";
    case ErrorCode::kIllegalProof: return "IllegalProof";
    case ErrorCode::kResourceLimit: return "ResourceLimit";
    case ErrorCode::kTooManyVariables: return "TooManyVariables";
    case ErrorCode::kRuleNotApplicable: return "RuleNotApplicable";
    case ErrorCode::kUnknownVariable: return "UnknownVariable";
    case ErrorCode::kMixedVariablePresent: return "MixedVariablePresent";
    case ErrorCode::kUntaggedLeaf: return "UntaggedLeaf";
    case ErrorCode::kMixedResidue: return "MixedResidue";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message,
                     std::optional<std::size_t> line) {
  std::string out(error_code_name(code));
  if (line) out += " (line " + std::to_string(*line) + ")";
  if (!message.empty()) out += ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> line)
    : std::runtime_error(decorate(code, message, line)),
      code_(code),
      line_(line) {}

}  // namespace resproof
