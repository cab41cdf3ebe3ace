// ProxShift - proximal splitting with strong convexity shifting
// Copyright 2026 ProxShift Contributors
// Licensed under Apache 2.0

#include "proxshift/errors.hpp"

namespace proxshift {

DivergenceError::DivergenceError(std::string algorithm, std::size_t iteration)
    : Error(algorithm + ": non-finite iterate at iteration " +
            std::to_string(iteration)),
      algorithm_(std::move(algorithm)),
      iteration_(iteration) {}

}  // namespace proxshift
