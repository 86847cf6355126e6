// Copyright 2026 The qsc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSC_ERRORS_HPP
#define QSC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsc {

/// Base class for all qsc errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A mathematical precondition was violated (non-prime modulus,
/// non-orthogonal rows, singular basis, ...). CLI exit code 2.
struct MathError : Error {
    using Error::Error;
};

/// A configured resource bound (enumeration or table size) was exceeded.
/// CLI exit code 3.
struct BoundError : Error {
    using Error::Error;
};

/// A structured text document failed to parse. CLI exit code 1.
struct ParseError : Error {
    ParseError(const std::string &msg, std::size_t line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line(line) {}
    std::size_t line;
};

}  // namespace qsc

#endif
