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

#ifndef ASRCORRECT_TAGGER_HPP_
#define ASRCORRECT_TAGGER_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "asrcorrect/editops.hpp"
#include "asrcorrect/vocab.hpp"

namespace asrcorrect {

struct ScoredTag {
  EditOp tag;
  double score = 0.0;  // in [0, 1]

  bool operator==(const ScoredTag&) const = default;
};

// Context markers used beyond sentence boundaries.
inline constexpr std::string_view kBoundaryLeft = "<s>";
inline constexpr std::string_view kBoundaryRight = "</s>";

// Frequency tagger. Lookup cascades from (prev, token, next) context cells to
// token-only cells to a (none, 1.0) default. Scores are relative frequencies
// within the matched cell.
struct BaselineModel {
  // Key: prev + '\t' + token + '\t' + next (tokens never contain tabs).
  std::map<std::string, std::map<std::string, std::uint64_t>> context_table;
  std::map<std::string, std::map<std::string, std::uint64_t>> token_table;
  TagVocabulary vocab;
};

// Counts every training token, including none-tagged ones, so a known-good
// context votes for keeping the token.
BaselineModel train_baseline(const std::vector<TaggedSentence>& corpus, TagVocabulary vocab);

// One scored tag per token. Majority tag of the matched cell; ties break
// toward the better vocabulary rank, then the lexicographically smaller tag.
// A join predicted at index 0 is demoted to (none, 1.0).
std::vector<ScoredTag> predict(const BaselineModel& model, const TokenSequence& tokens);

// Model file: a version header, the embedded vocabulary as "voc" lines, then
// "ctx" and "tok" count lines.
void write_model(std::ostream& out, const BaselineModel& model);
BaselineModel read_model(std::istream& in);
void save_model(const std::string& path, const BaselineModel& model);
BaselineModel load_model(const std::string& path);

// External tagger exchange files. Tokens: one sentence per line, tokens
// space-separated. Scored: one "token<TAB>tag<TAB>score" line per token,
// blank line after each sentence.
void write_tokens_file(std::ostream& out, const std::vector<TokenSequence>& sentences);
std::vector<TokenSequence> read_tokens_file(std::istream& in);
void write_scored_file(std::ostream& out, const std::vector<TokenSequence>& sentences,
                       const std::vector<std::vector<ScoredTag>>& scored);
// Validates the reply against the sentences that were sent: same sentence
// count, same tokens in order, parseable tags, scores within [0, 1]. Any
// violation raises ProtocolViolation.
std::vector<std::vector<ScoredTag>> read_scored_file(std::istream& in,
                                                     const std::vector<TokenSequence>& expected);

// Standalone scored file, no expectation to check against. Raises
// FormatError/ParseError on malformed lines and keeps tokens and scores
// paired per sentence.
struct ScoredDataset {
  std::vector<TokenSequence> sentences;
  std::vector<std::vector<ScoredTag>> scored;
};
ScoredDataset read_scored_dataset(std::istream& in);
ScoredDataset load_scored_dataset(const std::string& path);

// Runs `command` through the shell with the tokens file on stdin and reads
// the scored file from its stdout. Raises ProtocolViolation when the command
// fails or replies out of protocol.
std::vector<std::vector<ScoredTag>> run_external_tagger(const std::string& command,
                                                        const std::vector<TokenSequence>& sentences);

}  // namespace asrcorrect

#endif  // ASRCORRECT_TAGGER_HPP_
