/*
   Copyright 2026 The Monogauge Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MONOGAUGE_ERRORS_HPP
#define MONOGAUGE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monogauge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct OrderMismatch : Error {
    using Error::Error;
};

struct NonIntegral : Error {
    using Error::Error;
};

struct Unsupported : Error {
    using Error::Error;
};

struct OutOfRange : Error {
    using Error::Error;
};

struct ChartHitsSingularity : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::string message; // without the location suffix
    std::size_t line;
    std::size_t column;
    ParseError(const std::string& what, std::size_t line_, std::size_t column_)
        : Error(what + " (line " + std::to_string(line_) + ", column " + std::to_string(column_) + ")"),
          message(what),
          line(line_),
          column(column_) {}
};

struct InvariantViolation : Error {
    using Error::Error;
};

struct MissingCoordinates : Error {
    using Error::Error;
};

struct DuplicatePoint : Error {
    using Error::Error;
};

struct NonPolynomial : Error {
    using Error::Error;
};

struct Unresolved : Error {
    using Error::Error;
};

struct SoundnessViolation : Error {
    using Error::Error;
};

} // namespace monogauge

#endif
