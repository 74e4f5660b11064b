// Copyright 2026 The Authors.
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

// Error types shared across the library. Every failure mode that callers can
// act on gets its own type; everything derives from SubmaxError.

#ifndef SUBMAX_ERRORS_HPP_
#define SUBMAX_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace submax {

class SubmaxError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Width is undefined: the constraint matrix has no nonzero entry.
class AllZeroMatrix : public SubmaxError {
 public:
  using SubmaxError::SubmaxError;
};

// Canonicalization eliminated every column.
class EmptyGroundSet : public SubmaxError {
 public:
  using SubmaxError::SubmaxError;
};

// Large-width update factor requested on an instance whose width is too small.
class WidthConditionViolated : public SubmaxError {
 public:
  using SubmaxError::SubmaxError;
};

// Update factor must exceed 1.
class InvalidLambda : public SubmaxError {
 public:
  using SubmaxError::SubmaxError;
};

// A binary-only solver was handed a matrix with entries outside {0,1}.
class NotBinary : public SubmaxError {
 public:
  using SubmaxError::SubmaxError;
};

// Exhaustive enumeration refused: ground set exceeds the hard limit.
class GroundSetTooLarge : public SubmaxError {
 public:
  using SubmaxError::SubmaxError;
};

// Instance generator was given out-of-range dimensions or parameters.
class InvalidSpec : public SubmaxError {
 public:
  using SubmaxError::SubmaxError;
};

// Instance file does not conform to the documented grammar.
class ParseError : public SubmaxError {
 public:
  using SubmaxError::SubmaxError;
};

}  // namespace submax

#endif  // SUBMAX_ERRORS_HPP_
