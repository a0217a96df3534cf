#pragma once

#include <stdexcept>
#include <string>

namespace formation {

enum class ErrorCode {
  InvalidArgument,
  SelfLoop,
  DuplicateEdge,
  Disconnected,
  InvalidInstance,
  NonSquare,
  NegativeEntry,
  TooLarge,
  OpposedEdge,
  CycleDetected,
  NoStandaloneGoal,
  ResidualUnderflow,
  NotOrdered,
  TooCrowded,
  ParseError,
  InvariantViolation,
};

const char* to_string(ErrorCode code);

// Every library failure surfaces as Error. `code` keys programmatic handling,
// the message names the offending vertex / edge / field.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace formation
