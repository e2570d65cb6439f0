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

#include "asrcorrect/synthetic.hpp"

#include <cmath>
#include <cstdio>

#include "asrcorrect/util/rng.hpp"
#include "asrcorrect/util/utf8.hpp"

namespace asrcorrect {

namespace {

enum Rule : std::size_t {
  kStripSuffix = 0,
  kAddSuffix,
  kStripPrefix,
  kAddPrefix,
  kSplitSeparator,
  kSplitPlain,
  kSubstitute,
  kDropShort,
  kInsertFiller,
  kRuleCount,
};

bool has_interior_separator(const std::vector<char32_t>& cps) {
  for (std::size_t p = 1; p + 1 < cps.size(); ++p) {
    if (cps[p] == U'-' || cps[p] == U'\'') return true;
  }
  return false;
}

// One injected error. Operates on the current token list so consecutive
// errors compound. Returns false when the drawn rule has no applicable site.
bool inject_error(std::vector<std::string>& tokens, Rule rule, const SyntheticSpec& spec, Rng& rng) {
  std::vector<std::size_t> sites;
  switch (rule) {
    case kStripSuffix: {
      const std::size_t keep = utf8::length(spec.suffix) + 1;
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i].ends_with(spec.suffix) && utf8::length(tokens[i]) > keep) sites.push_back(i);
      }
      if (sites.empty()) return false;
      std::string& token = tokens[sites[rng.index(sites.size())]];
      token.resize(token.size() - spec.suffix.size());
      return true;
    }
    case kAddSuffix: {
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (!tokens[i].ends_with(spec.suffix)) sites.push_back(i);
      }
      if (sites.empty()) return false;
      tokens[sites[rng.index(sites.size())]] += spec.suffix;
      return true;
    }
    case kStripPrefix: {
      const std::size_t keep = utf8::length(spec.prefix) + 1;
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i].starts_with(spec.prefix) && utf8::length(tokens[i]) > keep) sites.push_back(i);
      }
      if (sites.empty()) return false;
      std::string& token = tokens[sites[rng.index(sites.size())]];
      token.erase(0, spec.prefix.size());
      return true;
    }
    case kAddPrefix: {
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (!tokens[i].starts_with(spec.prefix)) sites.push_back(i);
      }
      if (sites.empty()) return false;
      std::string& token = tokens[sites[rng.index(sites.size())]];
      token.insert(0, spec.prefix);
      return true;
    }
    case kSplitSeparator: {
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (has_interior_separator(utf8::decode(tokens[i]))) sites.push_back(i);
      }
      if (sites.empty()) return false;
      const std::size_t at = sites[rng.index(sites.size())];
      const auto cps = utf8::decode(tokens[at]);
      std::size_t cut = 1;
      while (cps[cut] != U'-' && cps[cut] != U'\'') ++cut;
      const std::string left = utf8::encode({cps.begin(), cps.begin() + static_cast<std::ptrdiff_t>(cut)});
      const std::string right = utf8::encode({cps.begin() + static_cast<std::ptrdiff_t>(cut) + 1, cps.end()});
      tokens[at] = left;
      tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(at) + 1, right);
      return true;
    }
    case kSplitPlain: {
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        const auto cps = utf8::decode(tokens[i]);
        if (cps.size() >= spec.split_min_length && !has_interior_separator(cps)) sites.push_back(i);
      }
      if (sites.empty()) return false;
      const std::size_t at = sites[rng.index(sites.size())];
      const auto cps = utf8::decode(tokens[at]);
      // Cut so both halves keep at least two codepoints.
      const std::size_t cut = 2 + rng.index(cps.size() - 3);
      const std::string left = utf8::encode({cps.begin(), cps.begin() + static_cast<std::ptrdiff_t>(cut)});
      const std::string right = utf8::encode({cps.begin() + static_cast<std::ptrdiff_t>(cut), cps.end()});
      tokens[at] = left;
      tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(at) + 1, right);
      return true;
    }
    case kSubstitute: {
      std::vector<std::pair<std::size_t, std::size_t>> hits;  // (token, confusion)
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        for (std::size_t c = 0; c < spec.confusions.size(); ++c) {
          if (tokens[i] == spec.confusions[c].ref_word) hits.emplace_back(i, c);
        }
      }
      if (hits.empty()) return false;
      const auto [i, c] = hits[rng.index(hits.size())];
      tokens[i] = spec.confusions[c].hyp_word;
      return true;
    }
    case kDropShort: {
      if (tokens.size() < 2) return false;
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (utf8::length(tokens[i]) <= spec.drop_max_length) sites.push_back(i);
      }
      if (sites.empty()) return false;
      tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(sites[rng.index(sites.size())]));
      return true;
    }
    case kInsertFiller: {
      if (spec.fillers.empty()) return false;
      const std::size_t gap = rng.index(tokens.size() + 1);
      const std::string& filler = spec.fillers[rng.index(spec.fillers.size())];
      tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(gap), filler);
      return true;
    }
    case kRuleCount:
      break;
  }
  return false;
}

}  // namespace

std::vector<ConfusionEntry> SyntheticSpec::default_confusions() {
  return {
      {"two", "to"},
      {"for", "four"},
      {"right", "write"},
      {"hear", "here"},
  };
}

std::vector<CorrectionPair> generate_synthetic(const std::vector<TokenSequence>& references,
                                               const SyntheticSpec& spec, std::uint64_t seed) {
  const std::vector<double> weights = {
      spec.weight_strip_suffix, spec.weight_add_suffix,  spec.weight_strip_prefix,
      spec.weight_add_prefix,   spec.weight_split_separator, spec.weight_split_plain,
      spec.weight_substitute,   spec.weight_drop_short,  spec.weight_insert_filler,
  };

  Rng rng(seed);
  std::vector<CorrectionPair> pairs;
  pairs.reserve(references.size());
  const double whole = std::floor(spec.error_rate);
  const double fraction = spec.error_rate - whole;
  for (std::size_t s = 0; s < references.size(); ++s) {
    std::size_t errors = static_cast<std::size_t>(whole);
    if (fraction > 0.0 && rng.unit() < fraction) ++errors;

    std::vector<std::string> tokens = references[s].tokens;
    for (std::size_t e = 0; e < errors && !tokens.empty(); ++e) {
      const Rule rule = static_cast<Rule>(rng.weighted(weights));
      inject_error(tokens, rule, spec, rng);
    }

    char id[32];
    std::snprintf(id, sizeof(id), "synth-%06zu", s + 1);
    pairs.push_back(CorrectionPair{TokenSequence{std::move(tokens)}.join(), references[s].join(), id});
  }
  return pairs;
}

std::vector<TokenSequence> generate_reference_corpus(std::size_t count, std::uint64_t seed) {
  static const std::vector<std::string> kVerbs = {
      "play", "open", "find", "call", "show", "start", "stop", "hold", "hear", "queue", "set", "dim",
  };
  static const std::vector<std::string> kDeterminers = {"the", "my", "a", "this"};
  static const std::vector<std::string> kAdjectives = {
      "next", "new", "favorite", "long-term", "last-minute", "upbeat", "heavy", "quiet",
  };
  static const std::vector<std::string> kNouns = {
      "songs", "cats",   "lights",    "alarms", "reminders", "podcasts",
      "timers", "playlists", "messages", "doors",  "photos",    "house",
  };
  static const std::vector<std::string> kTails = {
      "now",     "please",  "tonight",        "tomorrow",       "again",
      "right away", "for two minutes", "in the kitchen", "at home", "don't stop",
  };

  Rng rng(seed);
  std::vector<TokenSequence> sentences;
  sentences.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<std::string> tokens;
    tokens.push_back(kVerbs[rng.index(kVerbs.size())]);
    if (rng.unit() < 0.8) tokens.push_back(kDeterminers[rng.index(kDeterminers.size())]);
    if (rng.unit() < 0.5) tokens.push_back(kAdjectives[rng.index(kAdjectives.size())]);
    tokens.push_back(kNouns[rng.index(kNouns.size())]);
    if (rng.unit() < 0.7) {
      for (std::string& word : tokens_from_string(kTails[rng.index(kTails.size())]).tokens) {
        tokens.push_back(std::move(word));
      }
    }
    sentences.push_back(TokenSequence{std::move(tokens)});
  }
  return sentences;
}

}  // namespace asrcorrect
