#pragma once

#include <stdexcept>
#include <string>

namespace aigsynth {

// Base class for everything this library throws on purpose.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input (AIGER, QDIMACS). Carries a 1-based line number.
class parse_error : public error {
 public:
  parse_error(const std::string& msg, int line)
      : error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A gate set references a node that is neither an input nor a defined gate.
class malformed_graph_error : public error {
 public:
  using error::error;
};

// The input circuit does not fit the supported safety-spec shape.
class unsupported_spec_error : public error {
 public:
  using error::error;
};

// A documented precondition of an oracle call was violated.
class contract_error : public error {
 public:
  using error::error;
};

// An extraction step found the strategy forcing an output both ways.
class strategy_conflict_error : public error {
 public:
  using error::error;
};

// Implementation/spec interface mismatch during verification.
class interface_error : public error {
 public:
  using error::error;
};

class timeout_error : public error {
 public:
  timeout_error() : error("time limit exceeded") {}
};

// Invariant breach; indicates a bug, not bad input.
class internal_error : public error {
 public:
  using error::error;
};

namespace detail {
[[noreturn]] inline void check_fail(const char* expr, const char* file, int line) {
  throw internal_error(std::string("check failed: ") + expr + " at " + file + ":" +
                       std::to_string(line));
}
}  // namespace detail

}  // namespace aigsynth

// Always-on invariant check (independent of NDEBUG).
#define AIGSYNTH_CHECK(expr) \
  ((expr) ? void(0) : ::aigsynth::detail::check_fail(#expr, __FILE__, __LINE__))
