#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace updag {

enum class ErrorKind {
  Parse,
  CyclicGraph,
  Disconnected,
  NotBiconnected,
  NotAFan,
  NotAnOuterpath,
  TooLarge,
  InvalidParameter,
  InvalidInstance,
  InvalidLabeling,
  NotASolution,
  NonSimpleDrawing,
  UnsupportedInput,
  InconsistentChoice,
  InternalVerification,
  Usage,
};

/// Library-wide error. `witness` carries a directed cycle (vertex sequence,
/// first == last) for CyclicGraph; `line` is 1-based for Parse errors.
class Error : public std::runtime_error {
public:
  Error(ErrorKind k, std::string msg) : std::runtime_error(std::move(msg)), kind(k) {}
  Error(ErrorKind k, std::string msg, std::vector<int> w)
      : std::runtime_error(std::move(msg)), kind(k), witness(std::move(w)) {}

  ErrorKind kind;
  std::vector<int> witness;
  int line = -1;
};

inline Error parse_error(int line, const std::string& msg) {
  Error e(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
  e.line = line;
  return e;
}

const char* error_kind_name(ErrorKind k);

}  // namespace updag
