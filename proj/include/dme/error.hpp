// Copyright (c) 2026 the dme authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace dme {

// Bad shapes, bad config, bad input files. CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input data (embedding files, datasets, lexicons, checkpoints).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Shape disagreements between tensors in an operation.
struct DimensionError : std::runtime_error {
    explicit DimensionError(const std::string& msg) : std::runtime_error(msg) {}
};

// NaN/Inf anywhere in a tensor, divergence. CLI maps this to exit code 3.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace dme
