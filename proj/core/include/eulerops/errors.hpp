#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eulerops {

// Base class for every error raised by the library. `name()` is the stable
// identifier surfaced by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class ModelMismatchError : public Error {
 public:
  explicit ModelMismatchError(const std::string& what)
      : Error("model-mismatch", what) {}
};

class IndexError : public Error {
 public:
  explicit IndexError(const std::string& what) : Error("index", what) {}
};

class UndefinedSymbolError : public Error {
 public:
  explicit UndefinedSymbolError(const std::string& what)
      : Error("undefined-symbol", what) {}
};

class NotAFunctionError : public Error {
 public:
  explicit NotAFunctionError(const std::string& what)
      : Error("not-a-function", what) {}
};

class JetNonzeroError : public Error {
 public:
  explicit JetNonzeroError(const std::string& what)
      : Error("jet-nonzero", what) {}
};

class NotFilteredError : public Error {
 public:
  explicit NotFilteredError(const std::string& what)
      : Error("not-filtered", what) {}
};

// Raised when a supplied inverse morphism does not round-trip on generators,
// or when an operation that needs an inverse is given none.
class InverseError : public Error {
 public:
  explicit InverseError(const std::string& what) : Error("inverse", what) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("parse", "at byte " + std::to_string(offset) + ": " + what),
        offset_(offset),
        reason_(what) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t offset_;
  std::string reason_;
};

}  // namespace eulerops
