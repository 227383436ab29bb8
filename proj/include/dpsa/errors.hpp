// Copyright 2026 The dpsa-sim Authors
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

#ifndef DPSA_ERRORS_HPP_
#define DPSA_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace dpsa {

// Base class for all library errors. Protocol ABORT is not an error; it is
// a regular outcome and is modeled as a value (see protocol.hpp).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid parameters, invalid configuration files, invalid presets.
struct ConfigError : Error {
  using Error::Error;
};

// Arithmetic between elements of different prime fields.
struct ContextMismatchError : Error {
  using Error::Error;
};

struct DivisionByZeroError : Error {
  using Error::Error;
};

// Length/dimension mismatches (vector shapes, non-power-of-two NTT input).
struct ShapeError : Error {
  using Error::Error;
};

// Packing width or NTT domain exceeded.
struct CapacityError : Error {
  using Error::Error;
};

// Share sets with incompatible index sets or configs.
struct AlignmentError : Error {
  using Error::Error;
};

struct InsufficientSharesError : Error {
  using Error::Error;
};

// Too few live participants to run a vector-addition round at all.
struct InsufficientParticipationError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

// Malformed file contents; carries the byte offset of the first problem.
struct FileFormatError : Error {
  FileFormatError(const std::string& what, std::uint64_t offset)
      : Error(what + " (byte offset " + std::to_string(offset) + ")"),
        byte_offset(offset) {}
  std::uint64_t byte_offset;
};

// A decoded aggregate lies outside the range any valid sum could reach.
struct OverflowSuspectError : Error {
  using Error::Error;
};

}  // namespace dpsa

#endif  // DPSA_ERRORS_HPP_
