#include "gr/error.hpp"

namespace gr {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "invalid argument";
    case Errc::WrongFamily: return "wrong graph family";
    case Errc::UnknownVertex: return "unknown vertex";
    case Errc::DuplicateVertex: return "duplicate vertex";
    case Errc::NonInteriorSet: return "set touches non-interior vertices";
    case Errc::UnrankedNeighbor: return "unranked neighbor";
    case Errc::PrefixTooShort: return "valid ordering prefix too short";
    case Errc::RangeExceeded: return "range exceeded";
    case Errc::BoxTooSmall: return "search box too small";
    case Errc::NotNormalized: return "function not normalized";
    case Errc::Unsupported: return "unsupported";
    case Errc::HypothesisFailure: return "hypothesis failure";
    case Errc::Parse: return "parse error";
    case Errc::Io: return "i/o error";
  }
  return "unknown error";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace gr
