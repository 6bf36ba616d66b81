// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 triage-reduce contributors

#pragma once

#include <stdexcept>
#include <string>

namespace triage {

// Error taxonomy, mapped to process exit codes by the CLI:
//   UsageError / ParameterError -> 1
//   DataError (and subclasses)  -> 2
//   InternalError               -> 3

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid algorithm parameter (k out of range, ratio target too large, ...).
class ParameterError : public UsageError {
 public:
  using UsageError::UsageError;
};

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input record; message carries the 1-based line number.
class ParseError : public DataError {
 public:
  using DataError::DataError;
};

// Structurally valid input that violates a corpus invariant (duplicate ids, ...).
class IntegrityError : public DataError {
 public:
  using DataError::DataError;
};

// A filtering or reduction step left zero usable rows.
class EmptyCorpusError : public DataError {
 public:
  using DataError::DataError;
};

// Unknown word or developer identifier.
class NotFoundError : public DataError {
 public:
  using DataError::DataError;
};

class IoError : public DataError {
 public:
  using DataError::DataError;
};

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace triage
