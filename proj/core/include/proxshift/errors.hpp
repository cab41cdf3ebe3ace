// ProxShift - proximal splitting with strong convexity shifting
// Copyright 2026 ProxShift Contributors
// Licensed under Apache 2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace proxshift {

/// Base class of every structured error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A scalar parameter or problem constant lies outside its admissible domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operands have incompatible shapes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An experiment configuration or serialized payload is malformed.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A requested diagnostic cannot be produced from the available data.
class UnavailableError : public Error {
 public:
  using Error::Error;
};

/// Reading or writing a file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

/// An iterate or objective value became non-finite during a solver run.
class DivergenceError : public Error {
 public:
  DivergenceError(std::string algorithm, std::size_t iteration);

  const std::string& algorithm() const noexcept { return algorithm_; }
  std::size_t iteration() const noexcept { return iteration_; }

 private:
  std::string algorithm_;
  std::size_t iteration_;
};

}  // namespace proxshift
