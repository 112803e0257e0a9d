#pragma once

#include <stdexcept>
#include <string>

namespace tempcal {

/// Broad failure categories. The CLI maps each one to a process exit code.
enum class ErrorKind {
  kUsage,         // missing inputs, e.g. labels required but absent
  kData,          // malformed or out-of-range input data
  kDomain,        // argument outside its mathematical domain (T <= 0, L = 0)
  kOptimization,  // objective could not be minimized
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorKind::kUsage, what) {}
};

class DataError : public Error {
 public:
  explicit DataError(const std::string& what) : Error(ErrorKind::kData, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorKind::kDomain, what) {}
};

class OptimizationError : public Error {
 public:
  explicit OptimizationError(const std::string& what)
      : Error(ErrorKind::kOptimization, what) {}
};

}  // namespace tempcal
