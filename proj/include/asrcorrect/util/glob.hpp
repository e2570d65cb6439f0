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

#ifndef ASRCORRECT_UTIL_GLOB_HPP_
#define ASRCORRECT_UTIL_GLOB_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

#include "asrcorrect/util/utf8.hpp"

namespace asrcorrect {

// Shell-style wildcard match over codepoints: '*' matches any run (possibly
// empty), '?' matches exactly one codepoint. Case-sensitive.
inline bool glob_match(std::string_view pattern, std::string_view text) {
  const std::vector<char32_t> p = utf8::decode(pattern);
  const std::vector<char32_t> t = utf8::decode(text);
  std::size_t pi = 0;
  std::size_t ti = 0;
  std::size_t star_pi = static_cast<std::size_t>(-1);
  std::size_t star_ti = 0;
  while (ti < t.size()) {
    if (pi < p.size() && (p[pi] == U'?' || p[pi] == t[ti])) {
      ++pi;
      ++ti;
    } else if (pi < p.size() && p[pi] == U'*') {
      star_pi = pi++;
      star_ti = ti;
    } else if (star_pi != static_cast<std::size_t>(-1)) {
      pi = star_pi + 1;
      ti = ++star_ti;
    } else {
      return false;
    }
  }
  while (pi < p.size() && p[pi] == U'*') ++pi;
  return pi == p.size();
}

}  // namespace asrcorrect

#endif  // ASRCORRECT_UTIL_GLOB_HPP_
