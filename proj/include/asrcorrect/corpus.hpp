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

#ifndef ASRCORRECT_CORPUS_HPP_
#define ASRCORRECT_CORPUS_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace asrcorrect {

// One recognizer output with its ground-truth transcript. Sentences are
// stored as surface strings; normalization happens downstream.
struct CorrectionPair {
  std::string hypothesis;
  std::string reference;
  std::string id;  // empty means not assigned yet

  bool operator==(const CorrectionPair&) const = default;
};

struct IngestStats {
  std::size_t read = 0;     // records parsed successfully
  std::size_t skipped = 0;  // malformed records dropped in lenient mode
};

// JSONL corpus: one object per line with "hypothesis" and "reference" string
// fields and an optional "id". TSV corpus: exactly hypothesis<TAB>reference;
// a second tab makes the line malformed. The format is chosen by extension
// (.jsonl/.json vs anything else). In strict mode a malformed record raises
// FormatError; otherwise it is skipped and counted. An unreadable path raises
// IoError; a corpus with no valid records raises EmptyCorpus.
std::vector<CorrectionPair> read_pairs(const std::string& path, bool strict,
                                       IngestStats* stats = nullptr);
std::vector<CorrectionPair> read_pairs_jsonl(std::istream& in, bool strict,
                                             IngestStats* stats = nullptr);
std::vector<CorrectionPair> read_pairs_tsv(std::istream& in, bool strict,
                                           IngestStats* stats = nullptr);

void write_pairs_jsonl(std::ostream& out, const std::vector<CorrectionPair>& pairs);
void save_pairs_jsonl(const std::string& path, const std::vector<CorrectionPair>& pairs);

}  // namespace asrcorrect

#endif  // ASRCORRECT_CORPUS_HPP_
