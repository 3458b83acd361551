#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace s1fix {

enum class ErrorCode {
  Malformed,
  NonPositiveWeight,
  MixedArity,
  BadSign,
  EmptyData,
  Overflow,
  NotCoprime,
  PointNotPresent,
  PairInvalid,
  PairNotPresent,
  ArityMismatch,
  StepInapplicable,
  ValidationFailed,
  InvalidGraph,
  TraceInvalid,
  InternalInconsistency,
  UnmatchedEntry,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library. `location` is a JSON pointer for
// parse errors; `index` is the offending step or point where one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> index = std::nullopt,
        std::string location = {});

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }
  const std::string& location() const noexcept { return location_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
  std::string location_;
  std::string message_;
};

}  // namespace s1fix
