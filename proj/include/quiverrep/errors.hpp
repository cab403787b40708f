#pragma once

#include <stdexcept>
#include <string>

namespace qrep {

/// Base for all domain-level refusals. `code()` is the stable machine name
/// that ends up in CLI reports and exit-code classification.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

class CycleError : public DomainError {
public:
  explicit CycleError(const std::string& what) : DomainError("CycleError", what) {}
};

class UnknownVertexError : public DomainError {
public:
  explicit UnknownVertexError(const std::string& what)
      : DomainError("UnknownVertex", what) {}
};

class EndpointMismatchError : public DomainError {
public:
  explicit EndpointMismatchError(const std::string& what)
      : DomainError("EndpointMismatch", what) {}
};

class NotUifError : public DomainError {
public:
  explicit NotUifError(const std::string& what) : DomainError("NotUIF", what) {}
};

class NeedsLargerWindowError : public DomainError {
public:
  explicit NeedsLargerWindowError(const std::string& what)
      : DomainError("NeedsLargerWindow", what) {}
};

class TruncationError : public DomainError {
public:
  explicit TruncationError(const std::string& what)
      : DomainError("TruncationError", what) {}
};

class MismatchError : public DomainError {
public:
  explicit MismatchError(const std::string& what) : DomainError("Mismatch", what) {}
};

class NotASubrepError : public DomainError {
public:
  explicit NotASubrepError(const std::string& what)
      : DomainError("NotASubrep", what) {}
};

class DecompositionFailure : public DomainError {
public:
  explicit DecompositionFailure(const std::string& what)
      : DomainError("DecompositionFailure", what) {}
};

/// Malformed input files or CLI arguments; maps to exit code 2.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line ? ("line " + std::to_string(line) + ": " + what)
                                : what),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

}  // namespace qrep
