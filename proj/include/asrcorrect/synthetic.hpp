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

#ifndef ASRCORRECT_SYNTHETIC_HPP_
#define ASRCORRECT_SYNTHETIC_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "asrcorrect/corpus.hpp"
#include "asrcorrect/normalize.hpp"

namespace asrcorrect {

// A word the recognizer tends to get wrong and what it writes instead.
struct ConfusionEntry {
  std::string ref_word;
  std::string hyp_word;
};

// Error model for corpus synthesis. Each rule is the inverse of a learnable
// correction; weights steer the rule mix and a weight of zero disables the
// rule. error_rate is the target mean number of injected errors per
// sentence; the realized rate can be lower when a drawn rule has no
// applicable site.
struct SyntheticSpec {
  double error_rate = 1.2;

  double weight_strip_suffix = 2.0;     // cats -> cat, fixed by append_s
  double weight_add_suffix = 1.0;       // stop -> stops, fixed by remove_suffix_1
  double weight_strip_prefix = 1.5;     // house -> ouse, fixed by add_prefix_h
  double weight_add_prefix = 1.0;       // old -> hold, fixed by remove_prefix_1
  double weight_split_separator = 2.0;  // long-term -> long term, fixed by join_-
  double weight_split_plain = 2.0;      // playlists -> play lists, fixed by join
  double weight_substitute = 3.0;       // two -> to, fixed by replace_two
  double weight_drop_short = 1.0;       // drops a short word, fixed by a replace fold
  double weight_insert_filler = 1.5;    // adds uh/um, fixed by del

  std::string suffix = "s";
  std::string prefix = "h";
  std::size_t split_min_length = 6;  // codepoints, plain splits only
  std::size_t drop_max_length = 3;   // codepoints

  std::vector<ConfusionEntry> confusions = default_confusions();
  std::vector<std::string> fillers = {"uh", "um", "eh"};

  static std::vector<ConfusionEntry> default_confusions();
};

// Corrupts each reference with the error model. Pair ids are synth-000001,
// synth-000002, ... in input order. Fully determined by (references, spec,
// seed).
std::vector<CorrectionPair> generate_synthetic(const std::vector<TokenSequence>& references,
                                               const SyntheticSpec& spec, std::uint64_t seed);

// Template sentence generator for self-contained demos and stress tests.
// Sentences are already normalized: lowercase, no punctuation besides
// intra-word '-' and '\''.
std::vector<TokenSequence> generate_reference_corpus(std::size_t count, std::uint64_t seed);

}  // namespace asrcorrect

#endif  // ASRCORRECT_SYNTHETIC_HPP_
