#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace walkreg {

enum class Errc {
  MalformedHeader,
  TruncatedBody,
  InvalidByte,
  OversizeGraph,
  TrailingData,
  BadParams,
  Oversize,
  BadVertex,
  SingularMatrix,
  DimensionMismatch,
  IsolatedVertex,
  Disconnected,
  SameVertex,
  NotAWalk,
  TooSmall,
  NotReversible,
  NotRegular,
  CharacterizationMismatch,
  InvariantViolation,
  BadFilter,
  BadRational,
};

constexpr std::string_view errc_name(Errc e) {
  switch (e) {
    case Errc::MalformedHeader: return "MalformedHeader";
    case Errc::TruncatedBody: return "TruncatedBody";
    case Errc::InvalidByte: return "InvalidByte";
    case Errc::OversizeGraph: return "OversizeGraph";
    case Errc::TrailingData: return "TrailingData";
    case Errc::BadParams: return "BadParams";
    case Errc::Oversize: return "Oversize";
    case Errc::BadVertex: return "BadVertex";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::IsolatedVertex: return "IsolatedVertex";
    case Errc::Disconnected: return "Disconnected";
    case Errc::SameVertex: return "SameVertex";
    case Errc::NotAWalk: return "NotAWalk";
    case Errc::TooSmall: return "TooSmall";
    case Errc::NotReversible: return "NotReversible";
    case Errc::NotRegular: return "NotRegular";
    case Errc::CharacterizationMismatch: return "CharacterizationMismatch";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::BadFilter: return "BadFilter";
    case Errc::BadRational: return "BadRational";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace walkreg
