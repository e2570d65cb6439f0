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

#include "asrcorrect/normalize.hpp"

#include <algorithm>
#include <set>

#include "asrcorrect/errors.hpp"
#include "asrcorrect/keyvalue.hpp"
#include "asrcorrect/util/utf8.hpp"

namespace asrcorrect {

namespace {

std::vector<char32_t> build_default_punctuation() {
  std::vector<char32_t> set;
  // ASCII punctuation except '-' and '\'' which carry intra-word meaning.
  for (const char c : std::string_view("!\"#$%&()*+,./:;<=>?@[\\]^_`{|}~")) {
    set.push_back(static_cast<char32_t>(c));
  }
  const char32_t extra[] = {
      0x00A1,  // inverted exclamation
      0x00AB,  // left guillemet
      0x00B7,  // middle dot
      0x00BB,  // right guillemet
      0x00BF,  // inverted question mark
      0x2013,  // en dash
      0x2014,  // em dash
      0x2015,  // horizontal bar
      0x2018, 0x2019, 0x201A,  // single quotes
      0x201C, 0x201D, 0x201E,  // double quotes
      0x2022,  // bullet
      0x2026,  // ellipsis
      0x2039, 0x203A,  // single guillemets
  };
  set.insert(set.end(), std::begin(extra), std::end(extra));
  std::sort(set.begin(), set.end());
  return set;
}

bool in_sorted(const std::vector<char32_t>& set, char32_t cp) {
  return std::binary_search(set.begin(), set.end(), cp);
}

}  // namespace

std::string TokenSequence::join() const {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i != 0) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

TokenSequence tokens_from_string(std::string_view text) {
  TokenSequence seq;
  const auto cps = utf8::decode(text);
  std::string current;
  for (char32_t cp : cps) {
    if (utf8::is_space(cp)) {
      if (!current.empty()) seq.tokens.push_back(std::move(current));
      current.clear();
    } else {
      utf8::append(current, cp);
    }
  }
  if (!current.empty()) seq.tokens.push_back(std::move(current));
  return seq;
}

const std::vector<char32_t>& NormalizationConfig::default_punctuation() {
  static const std::vector<char32_t> kDefault = build_default_punctuation();
  return kDefault;
}

NormalizationConfig::NormalizationConfig() : punctuation(default_punctuation()) {}

void validate(const NormalizationConfig& config) {
  for (char32_t cp : config.punctuation) {
    if (utf8::is_space(cp)) {
      throw FormatError("punctuation set must not contain whitespace");
    }
  }
  std::set<std::string> seen;
  for (const auto& [written, spoken] : config.number_map) {
    if (written.empty()) throw FormatError("number_map: empty written form");
    if (!seen.insert(written).second) {
      throw FormatError("number_map: duplicate written form: " + written);
    }
    for (char32_t cp : utf8::decode(written)) {
      if (utf8::is_space(cp)) {
        throw FormatError("number_map: written form must be a single token: " + written);
      }
    }
    const TokenSequence pieces = tokens_from_string(spoken);
    if (pieces.empty()) {
      throw FormatError("number_map: empty spoken form for: " + written);
    }
  }
}

NormalizationConfig normalization_config_from(const KeyValueFile& file) {
  NormalizationConfig config;
  config.lowercase = file.get_bool("lowercase", config.lowercase);
  config.strip_punctuation = file.get_bool("strip_punctuation", config.strip_punctuation);
  config.compose_unicode = file.get_bool("compose_unicode", config.compose_unicode);
  if (file.has("punctuation")) {
    config.punctuation = utf8::decode(file.get_string("punctuation"));
    std::sort(config.punctuation.begin(), config.punctuation.end());
    config.punctuation.erase(std::unique(config.punctuation.begin(), config.punctuation.end()),
                             config.punctuation.end());
  }
  for (const std::string& line : file.section("number_map")) {
    const auto fields = split_fields(line);
    if (fields.size() < 2) {
      throw FormatError("number_map: expected 'written spoken...', got: " + line);
    }
    std::string spoken = fields[1];
    for (std::size_t i = 2; i < fields.size(); ++i) spoken += " " + fields[i];
    config.number_map.emplace_back(fields[0], spoken);
  }
  validate(config);
  return config;
}

TokenSequence normalize(std::string_view text, const NormalizationConfig& config) {
  auto cps = utf8::decode(text);
  if (config.compose_unicode) cps = utf8::compose_canonical(cps);

  TokenSequence seq;
  std::string current;
  for (char32_t cp : cps) {
    if (config.lowercase) cp = utf8::to_lower(cp);
    if (utf8::is_space(cp)) {
      if (!current.empty()) seq.tokens.push_back(std::move(current));
      current.clear();
      continue;
    }
    // Stripped punctuation is removed outright, never turned into a space, so
    // "don't" with '\'' stripped becomes "dont" rather than two tokens.
    if (config.strip_punctuation && in_sorted(config.punctuation, cp)) continue;
    utf8::append(current, cp);
  }
  if (!current.empty()) seq.tokens.push_back(std::move(current));

  if (config.number_map.empty()) return seq;

  TokenSequence rewritten;
  for (std::string& token : seq.tokens) {
    const auto hit = std::find_if(config.number_map.begin(), config.number_map.end(),
                                  [&](const auto& entry) { return entry.first == token; });
    if (hit == config.number_map.end()) {
      rewritten.tokens.push_back(std::move(token));
      continue;
    }
    for (std::string& piece : tokens_from_string(hit->second).tokens) {
      rewritten.tokens.push_back(std::move(piece));
    }
  }
  return rewritten;
}

}  // namespace asrcorrect
