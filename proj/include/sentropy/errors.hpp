//
// Copyright 2026 The sentropy Authors
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
//

#ifndef SENTROPY_ERRORS_HPP
#define SENTROPY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sentropy {

/// Base class for every error this library reports. Errors caused by user
/// input derive from Error directly; InternalError marks invariant
/// violations that indicate a bug upstream of the throwing function.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Invalid UTF-8 input; byte_offset() points at the start of the
/// offending sequence.
class EncodingError : public Error {
public:
    EncodingError(const std::string& message, std::size_t byte_offset)
        : Error(message + " at byte offset " + std::to_string(byte_offset)),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const noexcept { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

/// Structurally malformed input file: missing field, wrong type. The
/// message names the offending field path.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Well-formed input that violates a semantic rule (duplicate label,
/// inconsistent counts). The message names the field.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Argument outside a function's mathematical domain.
class DomainError : public Error {
public:
    using Error::Error;
};

class EmptyLexiconError : public Error {
public:
    using Error::Error;
};

class EmptyInputError : public Error {
public:
    using Error::Error;
};

/// Requested a length distribution from a profile built from published
/// counts, which carries no occurrence data.
class DistributionUnavailableError : public Error {
public:
    using Error::Error;
};

class InternalError : public Error {
public:
    using Error::Error;
};

/// A zero-length sentence reached the profiler; upstream should have
/// dropped it.
class EmptySentenceError : public InternalError {
public:
    using InternalError::InternalError;
};

}  // namespace sentropy

#endif  // SENTROPY_ERRORS_HPP
