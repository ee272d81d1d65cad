#ifndef POSETOP_ERROR_HPP_
#define POSETOP_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace posetop {

enum class ErrorCode {
  DuplicateLabel,
  UnknownLabel,
  CycleDetected,
  LabelClash,
  GroundSetMismatch,
  NotConvex,
  EmptySubset,
  SizeLimitExceeded,
  VertexNotFound,
  EmptyInner,
  NotWN,
  NotNablaCompatible,
  EmptyPoset,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every domain failure in the library is reported through this type; the
// code is what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace posetop

#endif  // POSETOP_ERROR_HPP_
