#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace trop {

/// Malformed or inconsistent user input (bad rationals, ragged point lists).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Caller violated a documented precondition.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal invariant failed; indicates a bug, never bad input.
class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

/// Bad configuration of an operation (e.g. series truncation too small).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// The weight matrix is degenerate: some k x k tropical minor has a tied
/// minimum. Carries the offending row/column index sets (0-based).
class GenericityError : public std::runtime_error {
 public:
  GenericityError(const std::string& what, std::vector<int> rows, std::vector<int> cols)
      : std::runtime_error(what), witness_rows(std::move(rows)), witness_cols(std::move(cols)) {}

  std::vector<int> witness_rows;
  std::vector<int> witness_cols;
};

}  // namespace trop
