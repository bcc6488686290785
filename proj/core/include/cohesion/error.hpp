#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cohesion {

enum class ErrorCode {
  EmptyDocument,
  Parse,
  TooFewSegments,
  FilterWindow,
  ZeroNorm,
  SignalLength,
  Comparison,
  AlignmentRequired,
  Config,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map them to diagnostics without
/// parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with a 1-based line number (0 when not line-oriented).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorCode::Parse,
              line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cohesion
