#pragma once

#include <stdexcept>
#include <string>

namespace stableplace {

enum class ErrorKind {
  DegenerateInput,
  OpenMesh,
  NonPositiveVolume,
  NoPlaneFound,
  IndexOutOfRange,
  EmptyView,
  NoStablePoints,
  ParseError,
  ValidationError,
  IoError,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::OpenMesh: return "OpenMesh";
    case ErrorKind::NonPositiveVolume: return "NonPositiveVolume";
    case ErrorKind::NoPlaneFound: return "NoPlaneFound";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EmptyView: return "EmptyView";
    case ErrorKind::NoStablePoints: return "NoStablePoints";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace stableplace
