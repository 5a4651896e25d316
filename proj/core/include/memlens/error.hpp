// Copyright 2026 the memlens project
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace memlens {

//! Base class for every error memlens raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

//! Invariant or precondition violation in domain data or configuration.
class ValidationError : public Error {
 public:
  using Error::Error;
};

//! Malformed input file or wire payload. Carries the byte offset when known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message, std::size_t byte_offset = 0)
      : Error(message), byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

//! Filesystem failure: missing file, unreadable stream, failed write.
class IoError : public Error {
 public:
  using Error::Error;
};

//! The extractor service answered, but not with the agreed wire format.
//! The offending reply is retained verbatim for audit.
class ProtocolError : public Error {
 public:
  ProtocolError(const std::string& message, std::string raw_response)
      : Error(message), raw_response_(std::move(raw_response)) {}

  const std::string& raw_response() const { return raw_response_; }

 private:
  std::string raw_response_;
};

//! The extractor service could not be reached after all retries.
class ExtractorUnavailableError : public Error {
 public:
  using Error::Error;
};

}  // namespace memlens
