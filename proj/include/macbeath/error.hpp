#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace macbeath {

enum class ErrorCode {
  InvalidArgument,
  BadReduction,
  Inadmissible,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Domain error carrying a machine-readable code. The CLI maps
/// BadReduction and Inadmissible to exit status 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace macbeath
