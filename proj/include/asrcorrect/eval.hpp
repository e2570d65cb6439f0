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

#ifndef ASRCORRECT_EVAL_HPP_
#define ASRCORRECT_EVAL_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "asrcorrect/normalize.hpp"

namespace asrcorrect {

struct SentenceScore {
  std::size_t substitutions = 0;
  std::size_t deletions = 0;   // reference words missing from the hypothesis
  std::size_t insertions = 0;  // extra hypothesis words
  std::size_t reference_length = 0;

  std::size_t errors() const { return substitutions + deletions + insertions; }
  double wer_percent() const {
    return 100.0 * static_cast<double>(errors()) / static_cast<double>(reference_length);
  }

  bool operator==(const SentenceScore&) const = default;
};

// Minimal word edit distance with unit costs. The error split follows a fixed
// backtrace preference, substitution over deletion over insertion, so counts
// are deterministic even when several minimal paths exist. Raises
// EmptyReference when ref has no tokens.
SentenceScore wer(const TokenSequence& ref, const TokenSequence& hyp);

// 100 * (wer_asr - wer_corrected) / wer_asr. Raises ZeroBaseline when
// wer_asr is zero, except for the identity case where both are zero, which
// reports 0. Negative when correction made things worse.
double relative_wer_reduction(double wer_asr, double wer_corrected);

struct EvalTriple {
  TokenSequence reference;
  TokenSequence hypothesis;  // raw recognizer output
  TokenSequence corrected;
};

struct EvalReport {
  double wer_asr = 0.0;
  double wer_corrected = 0.0;
  double wrr_asr = 0.0;        // 100 - wer
  double wrr_corrected = 0.0;
  double wrr_gain = 0.0;       // wrr_corrected - wrr_asr, in points
  double relative_reduction = 0.0;
  std::size_t sentence_count = 0;
  std::size_t token_count = 0;     // total reference tokens
  std::size_t skipped_count = 0;   // empty-reference triples left out
};

// Corpus metrics are micro-averaged: error and token counts are summed over
// sentences before dividing. Triples with an empty reference are excluded
// and counted in skipped_count. Raises EmptyCorpus when nothing remains.
EvalReport evaluate_corpus(const std::vector<EvalTriple>& triples);

// Fixed-key JSON object for report files.
std::string report_to_json(const EvalReport& report);

// Human-readable summary table.
std::string report_to_table(const EvalReport& report);

}  // namespace asrcorrect

#endif  // ASRCORRECT_EVAL_HPP_
