// Copyright 2026 The isingpds Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isingpds {

/// Raised when a caller breaks an operation's precondition (dimension
/// mismatch, malformed classification, invalid configuration value).
class ContractViolation : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

/// A metric whose defining formula has no finite value for the inputs.
class MetricUndefined : public std::domain_error {
 public:
    using std::domain_error::domain_error;
};

/// Instance generation failed (bad family parameters or graph repair gave up).
class GenerationError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

/// Exact enumeration refused because the instance is too large.
class TooLarge : public std::length_error {
 public:
    using std::length_error::length_error;
};

/// Malformed instance file. `line()` is 1-based, 0 when not line-oriented.
class ParseError : public std::runtime_error {
 public:
    ParseError(const std::string& message, std::size_t line = 0)
            : std::runtime_error(line == 0 ? message
                                           : "line " + std::to_string(line) + ": " + message),
              line_(line) {}

    std::size_t line() const noexcept { return line_; }

 private:
    std::size_t line_;
};

}  // namespace isingpds
