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

#ifndef ASRCORRECT_KEYVALUE_HPP_
#define ASRCORRECT_KEYVALUE_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace asrcorrect {

// Line-oriented config format shared by every configurable component:
//
//   # full-line comments and blank lines are ignored
//   key = value
//   [section]
//   raw item line
//   raw item line
//
// Keys before the first section header are top-level. Section bodies are kept
// as raw lines; the consuming module interprets them.
class KeyValueFile {
 public:
  static KeyValueFile parse(std::istream& in);
  static KeyValueFile parse_string(const std::string& text);
  static KeyValueFile load(const std::string& path);

  bool has(const std::string& key) const;
  bool has_section(const std::string& name) const;

  // Typed getters return the fallback when the key is absent and raise
  // FormatError when the present value does not convert.
  std::string get_string(const std::string& key, const std::string& fallback = "") const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  double get_double(const std::string& key, double fallback) const;

  const std::vector<std::string>& section(const std::string& name) const;  // empty if absent

  const std::map<std::string, std::string>& values() const { return values_; }
  const std::map<std::string, std::vector<std::string>>& sections() const { return sections_; }

 private:
  std::map<std::string, std::string> values_;
  std::map<std::string, std::vector<std::string>> sections_;
};

// Whitespace trim helpers used by the parsers in this library.
std::string trim(const std::string& text);
std::vector<std::string> split_fields(const std::string& line);  // on whitespace runs

}  // namespace asrcorrect

#endif  // ASRCORRECT_KEYVALUE_HPP_
