#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbiform {

enum class ErrorCode {
  kInvalidArgument,
  kDomain,
  kMalformedRegion,
  kEmptyRegion,
  kEvenVertexCount,
  kWidthViolation,
  kAdjacencyViolation,
  kClosureViolation,
  kContactDeficit,
  kDegenerateSector,
  kArcCollapse,
  kInvalidIndex,
  kEmptyContact,
  kNonConvergence,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kMalformedRegion: return "malformed-region";
    case ErrorCode::kEmptyRegion: return "empty-region";
    case ErrorCode::kEvenVertexCount: return "even-vertex-count";
    case ErrorCode::kWidthViolation: return "width-violation";
    case ErrorCode::kAdjacencyViolation: return "adjacency-violation";
    case ErrorCode::kClosureViolation: return "closure-violation";
    case ErrorCode::kContactDeficit: return "contact-deficit";
    case ErrorCode::kDegenerateSector: return "degenerate-sector";
    case ErrorCode::kArcCollapse: return "arc-collapse";
    case ErrorCode::kInvalidIndex: return "invalid-index";
    case ErrorCode::kEmptyContact: return "empty-contact";
    case ErrorCode::kNonConvergence: return "non-convergence";
  }
  return "unknown";
}

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace orbiform
