#pragma once

#include <stdexcept>
#include <string>

namespace rkt {

// Kinds map one-to-one onto CLI exit codes (see cli/run.cpp).
enum class ErrorKind {
  Input,        // malformed or inconsistent input
  Unsupported,  // valid input outside what the engine can classify
  Hypothesis,   // input violates a standing assumption of a classification
  CrossCheck,   // two independent computations disagree
  Ambiguous,    // extension problem left open under require_split
  Internal
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) throw Error(kind, what);
}

const char* kind_name(ErrorKind kind);

}  // namespace rkt
