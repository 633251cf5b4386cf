#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace biblock {

enum class Errc {
  OutOfRange,
  SelfLoop,
  DuplicateEdge,
  MissingEdge,
  InvalidSize,
  OddCycle,
  Disconnected,
  NotNeighbors,
  NotLeaf,
  SingleBlock,
  NotBipartite,
  TooLarge,
  NotMaximum,
  NoConvergence,
  ZeroVector,
  NotConstantWithinClass,
  NoSuchConfiguration,
  SizeMismatch,
  PreconditionFailed,
  BadSplit,
  OrientationMismatch,
  BlockIndexTooSmall,
  NoValidPair,
  PostconditionFailed,
  Stuck,
  TheoremViolation,
  ParseError,
  InvalidArgument,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::MissingEdge: return "MissingEdge";
    case Errc::InvalidSize: return "InvalidSize";
    case Errc::OddCycle: return "OddCycle";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NotNeighbors: return "NotNeighbors";
    case Errc::NotLeaf: return "NotLeaf";
    case Errc::SingleBlock: return "SingleBlock";
    case Errc::NotBipartite: return "NotBipartite";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotMaximum: return "NotMaximum";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NotConstantWithinClass: return "NotConstantWithinClass";
    case Errc::NoSuchConfiguration: return "NoSuchConfiguration";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::BadSplit: return "BadSplit";
    case Errc::OrientationMismatch: return "OrientationMismatch";
    case Errc::BlockIndexTooSmall: return "BlockIndexTooSmall";
    case Errc::NoValidPair: return "NoValidPair";
    case Errc::PostconditionFailed: return "PostconditionFailed";
    case Errc::Stuck: return "Stuck";
    case Errc::TheoremViolation: return "TheoremViolation";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace biblock
