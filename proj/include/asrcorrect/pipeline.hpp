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

#ifndef ASRCORRECT_PIPELINE_HPP_
#define ASRCORRECT_PIPELINE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "asrcorrect/corpus.hpp"
#include "asrcorrect/corrector.hpp"
#include "asrcorrect/editops.hpp"
#include "asrcorrect/eval.hpp"
#include "asrcorrect/normalize.hpp"
#include "asrcorrect/tagger.hpp"
#include "asrcorrect/vocab.hpp"

namespace asrcorrect {

inline constexpr std::uint64_t kDefaultSeed = 20220101;

struct SplitSpec {
  double train_weight = 8.0;
  double dev_weight = 1.0;
  double test_weight = 1.0;
  std::uint64_t seed = kDefaultSeed;
};

// Parses "8:1:1"-style ratios. Raises FormatError on anything else.
SplitSpec parse_ratio(const std::string& text, std::uint64_t seed = kDefaultSeed);

struct SplitResult {
  std::vector<CorrectionPair> train;
  std::vector<CorrectionPair> dev;
  std::vector<CorrectionPair> test;
};

// Shuffles deterministically with the spec seed, then cuts by largest
// remainder apportionment of the weights. With at least three pairs, dev and
// test get at least one pair each when their weight is positive, borrowing
// from the largest split if needed.
SplitResult split_pairs(std::vector<CorrectionPair> pairs, const SplitSpec& spec);

struct PrepareStats {
  std::size_t dropped_empty_hypothesis = 0;
};

// Normalizes both sides of each pair and assigns pair-%06zu ids to pairs
// without one. Pairs whose hypothesis normalizes to nothing are dropped and
// counted; an empty reference is kept (it still trains deletion tags).
std::vector<CorrectionPair> prepare_pairs(const std::vector<CorrectionPair>& raw,
                                          const NormalizationConfig& config,
                                          PrepareStats* stats = nullptr);

// Derives the tagged form of each prepared pair, in input order. Pairs with
// an empty (unprepared) hypothesis are skipped.
std::vector<TaggedSentence> derive_dataset(const std::vector<CorrectionPair>& prepared,
                                           const DeriveOptions& options = {}, std::size_t jobs = 1);

struct RunConfig {
  std::string input_path;
  std::string output_dir;
  SplitSpec split;
  std::size_t cutoff = kDefaultCutoff;
  std::size_t min_count = kDefaultMinCount;
  CorrectionPolicy policy;
  NormalizationConfig normalization;
  DeriveOptions derive;
  // "baseline", "oracle" (ground-truth masked tags, the coverage ceiling),
  // or "external:<shell command>".
  std::string tagger = "baseline";
  bool strict = false;
  bool write_trace = false;
  std::size_t jobs = 1;
};

// Full pipeline: ingest, prepare, split, derive, vocabulary, mask, train,
// tag the test split, correct, evaluate. Writes every stage artifact into
// output_dir (prepared/train/dev/test corpora, tagged datasets, vocab.tsv,
// model.tsv, scored tags, corrected text, report.json/report.txt) and
// returns the evaluation report.
EvalReport run_end_to_end(const RunConfig& config);

}  // namespace asrcorrect

#endif  // ASRCORRECT_PIPELINE_HPP_
