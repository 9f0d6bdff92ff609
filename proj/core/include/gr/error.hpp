#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gr {

enum class Errc {
  InvalidArgument,
  WrongFamily,
  UnknownVertex,
  DuplicateVertex,
  NonInteriorSet,
  UnrankedNeighbor,
  PrefixTooShort,
  RangeExceeded,
  BoxTooSmall,
  NotNormalized,
  Unsupported,
  HypothesisFailure,
  Parse,
  Io,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit path) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gr
