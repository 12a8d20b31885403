// Copyright 2026 The ccr-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace ccr {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// A parameter is outside its documented domain.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A validated type was handed data that breaks one of its invariants.
// Carries the invariant name and the measured residual.
class InvariantViolation : public Error {
public:
    InvariantViolation(std::string invariant, double residual, double tolerance)
        : Error(format(invariant, residual, tolerance)),
          invariant_(std::move(invariant)),
          residual_(residual),
          tolerance_(tolerance) {}

    const std::string& invariant() const noexcept { return invariant_; }
    double residual() const noexcept { return residual_; }
    double tolerance() const noexcept { return tolerance_; }

private:
    static std::string format(const std::string& invariant, double residual, double tolerance) {
        char buf[160];
        std::snprintf(buf, sizeof buf, ": residual %.6g exceeds tolerance %.3g", residual, tolerance);
        return "invariant violated: " + invariant + buf;
    }

    std::string invariant_;
    double residual_;
    double tolerance_;
};

// Malformed input document; the message names the offending field.
class InputError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

// An analytically nonnegative quantity came out negative beyond float noise.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace ccr
