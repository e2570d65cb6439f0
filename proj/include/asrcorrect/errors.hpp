// Copyright 2026 The asrcorrect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ASRCORRECT_ERRORS_HPP_
#define ASRCORRECT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace asrcorrect {

// Base class for every error raised by the library. Callers that only need
// coarse handling can catch this one type.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Tag derivation requires a non-empty hypothesis; the reference may be empty.
class HypothesisEmpty : public Error {
 public:
  using Error::Error;
};

// An edit operation cannot be applied to the token it is attached to, for
// example removing more characters than the token has or joining at index 0.
class InvalidApplication : public Error {
 public:
  using Error::Error;
};

// A serialized tag, record, or field does not parse.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A corpus-level operation received no usable sentences.
class EmptyCorpus : public Error {
 public:
  using Error::Error;
};

// Token and tag sequences that must be parallel have different lengths.
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

// Sentence-level WER needs a non-empty reference.
class EmptyReference : public Error {
 public:
  using Error::Error;
};

// Relative WER reduction is undefined when the baseline WER is zero but the
// corrected WER is not.
class ZeroBaseline : public Error {
 public:
  using Error::Error;
};

// A file or process could not be opened, read, or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// A structured file violates its format (bad header, wrong field count, ...).
class FormatError : public Error {
 public:
  using Error::Error;
};

// An external tagger broke the exchange protocol: token mismatch, missing or
// out-of-range score, or an unparseable tag.
class ProtocolViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace asrcorrect

#endif  // ASRCORRECT_ERRORS_HPP_
