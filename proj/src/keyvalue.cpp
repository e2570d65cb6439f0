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

#include "asrcorrect/keyvalue.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>

#include "asrcorrect/errors.hpp"

namespace asrcorrect {

std::string trim(const std::string& text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return text.substr(begin, end - begin);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream stream(line);
  std::string field;
  while (stream >> field) fields.push_back(field);
  return fields;
}

KeyValueFile KeyValueFile::parse(std::istream& in) {
  KeyValueFile file;
  std::string line;
  std::string current_section;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    if (stripped.front() == '[') {
      if (stripped.back() != ']' || stripped.size() < 3) {
        throw FormatError("line " + std::to_string(line_number) + ": malformed section header: " + stripped);
      }
      current_section = trim(stripped.substr(1, stripped.size() - 2));
      if (current_section.empty()) {
        throw FormatError("line " + std::to_string(line_number) + ": empty section name");
      }
      file.sections_[current_section];  // register even if the body stays empty
      continue;
    }
    if (!current_section.empty()) {
      file.sections_[current_section].push_back(stripped);
      continue;
    }
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw FormatError("line " + std::to_string(line_number) + ": expected key = value, got: " + stripped);
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw FormatError("line " + std::to_string(line_number) + ": empty key");
    }
    file.values_[key] = value;
  }
  return file;
}

KeyValueFile KeyValueFile::parse_string(const std::string& text) {
  std::istringstream stream(text);
  return parse(stream);
}

KeyValueFile KeyValueFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  return parse(in);
}

bool KeyValueFile::has(const std::string& key) const { return values_.count(key) != 0; }

bool KeyValueFile::has_section(const std::string& name) const { return sections_.count(name) != 0; }

std::string KeyValueFile::get_string(const std::string& key, const std::string& fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

bool KeyValueFile::get_bool(const std::string& key, bool fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const std::string& v = it->second;
  if (v == "true" || v == "yes" || v == "1" || v == "on") return true;
  if (v == "false" || v == "no" || v == "0" || v == "off") return false;
  throw FormatError("key '" + key + "': not a boolean: " + v);
}

std::int64_t KeyValueFile::get_int(const std::string& key, std::int64_t fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  try {
    std::size_t consumed = 0;
    const std::int64_t value = std::stoll(it->second, &consumed);
    if (consumed != it->second.size()) throw std::invalid_argument(it->second);
    return value;
  } catch (const std::exception&) {
    throw FormatError("key '" + key + "': not an integer: " + it->second);
  }
}

double KeyValueFile::get_double(const std::string& key, double fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  try {
    std::size_t consumed = 0;
    const double value = std::stod(it->second, &consumed);
    if (consumed != it->second.size()) throw std::invalid_argument(it->second);
    return value;
  } catch (const std::exception&) {
    throw FormatError("key '" + key + "': not a number: " + it->second);
  }
}

const std::vector<std::string>& KeyValueFile::section(const std::string& name) const {
  static const std::vector<std::string> kEmpty;
  auto it = sections_.find(name);
  return it == sections_.end() ? kEmpty : it->second;
}

}  // namespace asrcorrect
