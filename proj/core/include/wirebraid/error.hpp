#pragma once

#include <stdexcept>
#include <string>

namespace wb {

enum class ErrorKind {
  Parse,
  AsymmetricAdjacency,
  Disconnected,
  InvalidRoot,
  Syntax,
  LabelRange,
  RepeatedLabel,
  PatternMismatch,
  DegreeTooSmall,
  MissingLollipop,
  UnsupportedRegime,
  SizeCap,
  IllegalMove,
  NotClosed,
  Unassigned,
  ClassMismatch,
  OutOfRange,
  Budget,
  SelfIntersection,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wb
