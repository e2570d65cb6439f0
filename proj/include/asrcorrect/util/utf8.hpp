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

#ifndef ASRCORRECT_UTIL_UTF8_HPP_
#define ASRCORRECT_UTIL_UTF8_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace asrcorrect::utf8 {

inline constexpr char32_t kReplacementChar = 0xFFFD;

// Lenient decoder: every invalid byte decodes to U+FFFD, so decoding is total.
std::vector<char32_t> decode(std::string_view text);

void append(std::string& out, char32_t cp);

std::string encode(const std::vector<char32_t>& codepoints);

// Number of codepoints under the lenient decoder.
std::size_t length(std::string_view text);

// Remove `count` leading codepoints. count must be < length(token).
std::string drop_prefix(std::string_view token, std::size_t count);

// Remove `count` trailing codepoints. count must be < length(token).
std::string drop_suffix(std::string_view token, std::size_t count);

// Unicode whitespace: ASCII space/tab/newline family plus the common
// non-ASCII space characters (NBSP, ogham, en/em/thin spaces, ideographic).
bool is_space(char32_t cp);

// Lowercase for ASCII plus Latin-1 Supplement and Latin Extended-A. Other
// codepoints pass through unchanged.
char32_t to_lower(char32_t cp);

// Canonical composition (NFC) for the Latin ranges covered by the built-in
// table: combining marks following a base letter are fused when a precomposed
// form exists. Already-composed input is returned unchanged.
std::vector<char32_t> compose_canonical(const std::vector<char32_t>& codepoints);

}  // namespace asrcorrect::utf8

#endif  // ASRCORRECT_UTIL_UTF8_HPP_
