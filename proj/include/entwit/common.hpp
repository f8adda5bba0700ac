// Copyright 2026 The entwit authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENTWIT_COMMON_HPP
#define ENTWIT_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace entwit {

// Error taxonomy shared by all modules. The CLI maps these onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid argument values (out-of-range digits, bad parameters, unknown tags).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Structurally incompatible operands (mismatched dimension vectors).
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Matrix data violating an assumption (negative diagonal, complex diagonal).
class DataError : public Error {
 public:
  using Error::Error;
};

// Requested object exceeds a configured dense-size limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Root bracketing failure in numerical threshold solving.
class BracketError : public Error {
 public:
  using Error::Error;
};

// Largest total dimension D stored as a dense matrix (12 qubits).
inline constexpr std::int64_t kDefaultDenseCap = 4096;

// Largest total dimension D for the doubled-space brute-force oracle.
inline constexpr std::int64_t kDefaultOracleCap = 64;

// Half-width of the BOUNDARY band on criterion margins.
inline constexpr double kDefaultTolerance = 1e-9;

}  // namespace entwit

#endif
