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

#ifndef ASRCORRECT_NORMALIZE_HPP_
#define ASRCORRECT_NORMALIZE_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace asrcorrect {

class KeyValueFile;

// A normalized sentence: tokens are non-empty and contain no whitespace.
struct TokenSequence {
  std::vector<std::string> tokens;

  TokenSequence() = default;
  explicit TokenSequence(std::vector<std::string> t) : tokens(std::move(t)) {}

  bool empty() const { return tokens.empty(); }
  std::size_t size() const { return tokens.size(); }
  const std::string& operator[](std::size_t i) const { return tokens[i]; }

  // Single-space joined surface form.
  std::string join() const;

  bool operator==(const TokenSequence&) const = default;
};

// Plain whitespace split, no other processing. For text that is already
// normalized (artifact files store one normalized sentence per line).
TokenSequence tokens_from_string(std::string_view text);

struct NormalizationConfig {
  bool lowercase = true;
  bool strip_punctuation = true;
  // Compose combining marks into precomposed forms before any other step.
  bool compose_unicode = true;
  // Codepoints removed when strip_punctuation is set. Sorted unique; never
  // contains whitespace. Defaults keep intra-word '-' and '\''.
  std::vector<char32_t> punctuation;
  // Whole-token rewrites applied after tokenization, e.g. "2" -> "two". The
  // replacement may be several words; it is spliced into the token stream.
  std::vector<std::pair<std::string, std::string>> number_map;

  NormalizationConfig();

  static const std::vector<char32_t>& default_punctuation();
};

// Raises FormatError when the config violates its invariants (whitespace in
// the punctuation set, empty or duplicate number_map keys, replacement tokens
// that would not survive normalization).
void validate(const NormalizationConfig& config);

// Parses the [number_map] section and the normalization keys of a config
// file. Missing keys keep their defaults. Raises FormatError on bad values.
NormalizationConfig normalization_config_from(const KeyValueFile& file);

// Total function: any byte sequence in, normalized tokens out. Invalid UTF-8
// decodes to U+FFFD. The result is idempotent: normalizing a join() of the
// output returns the same tokens (given an acyclic number_map).
TokenSequence normalize(std::string_view text, const NormalizationConfig& config);

}  // namespace asrcorrect

#endif  // ASRCORRECT_NORMALIZE_HPP_
