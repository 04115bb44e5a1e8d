#pragma once

#include <stdexcept>
#include <string>

namespace sec {

// Every failure mode the library reports deliberately.  The CLI maps these to
// exit codes: input/validation problems -> 1, internal invariant breaches -> 3.
enum class Err {
  LoopEdge,
  IndexOutOfRange,
  RotationMismatch,
  NonPlanar,
  NotOnFace,
  SyntaxError,
  ColorOutOfRange,
  UncoloredEdge,
  AlreadyColored,
  FrontierTooLarge,
  TooLarge,
  UnknownName,
  InfeasibleSpec,
  Disconnected,
  HasBridge,
  InvalidColoring,
  InputInvalid,
  // The four below can only fire if the reduction theory itself were wrong
  // (or the implementation disagrees with it); they are "counterexample found"
  // signals and tests assert they never occur.
  InvalidConfiguration,
  ExtensionImpossible,
  DetectorGap,
  InternalCounterexample,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& msg)
      : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

inline bool is_internal_breach(Err e) {
  return e == Err::InvalidConfiguration || e == Err::ExtensionImpossible ||
         e == Err::DetectorGap || e == Err::InternalCounterexample;
}

}  // namespace sec
