// Copyright 2026 The e2estyle Authors.
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

#ifndef E2ESTYLE_ERROR_H_
#define E2ESTYLE_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace e2estyle {

// Base class for every error raised by the toolkit. Validation errors and
// I/O errors are distinguished so the command-line frontend can map them to
// exit codes 1 and 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

// Malformed MR text. Carries the byte offset of the offending item.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string &message, std::size_t offset)
      : ValidationError(message + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Well-formed MR text that violates a structural invariant, e.g. a
// duplicate content slot.
class StructuralError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A corpus row that failed to load. Row numbers are 1-based data rows
// (the header is row 0).
class RowError : public ValidationError {
 public:
  RowError(std::size_t row, const std::string &message)
      : ValidationError("row " + std::to_string(row) + ": " + message),
        row_(row) {}

  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

class ConfigError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Slot value outside the restaurant ontology.
class OntologyError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Placeholder in a delexicalized utterance with no matching MR slot.
class SubstitutionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace e2estyle

#endif  // E2ESTYLE_ERROR_H_
