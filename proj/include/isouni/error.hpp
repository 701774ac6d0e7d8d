#pragma once

#include <stdexcept>
#include <string>

namespace isouni {

enum class ErrorKind {
  kInvalidArgument,
  kParse,
  kNotConnected,
  kMalformedLabel,
  kContractViolation,
  kIo,
  kVerification,
};

/// Base exception for the library. The C API maps `kind()` onto status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorKind::kInvalidArgument, what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::kParse, what) {}
};

class NotConnected : public Error {
 public:
  explicit NotConnected(const std::string& what = "graph not connected")
      : Error(ErrorKind::kNotConnected, what) {}
};

class MalformedLabel : public Error {
 public:
  explicit MalformedLabel(const std::string& what)
      : Error(ErrorKind::kMalformedLabel, what) {}
};

class ContractViolation : public Error {
 public:
  explicit ContractViolation(const std::string& what)
      : Error(ErrorKind::kContractViolation, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::kIo, what) {}
};

}  // namespace isouni
