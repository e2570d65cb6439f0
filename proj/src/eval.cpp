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

#include "asrcorrect/eval.hpp"

#include <algorithm>
#include <cstdio>

#include "asrcorrect/errors.hpp"

#include "json.hpp"

namespace asrcorrect {

SentenceScore wer(const TokenSequence& ref, const TokenSequence& hyp) {
  if (ref.empty()) throw EmptyReference("wer: reference has no tokens");

  const std::size_t r = ref.size();
  const std::size_t h = hyp.size();
  // distance[i][j]: edit distance between ref[0,i) and hyp[0,j).
  std::vector<std::vector<std::size_t>> distance(r + 1, std::vector<std::size_t>(h + 1, 0));
  for (std::size_t i = 0; i <= r; ++i) distance[i][0] = i;
  for (std::size_t j = 0; j <= h; ++j) distance[0][j] = j;
  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t j = 1; j <= h; ++j) {
      const std::size_t sub_cost = ref[i - 1] == hyp[j - 1] ? 0 : 1;
      distance[i][j] = std::min({distance[i - 1][j - 1] + sub_cost,  // match or substitute
                                 distance[i - 1][j] + 1,             // deletion
                                 distance[i][j - 1] + 1});           // insertion
    }
  }

  // Backtrace preference: substitution (diagonal) first, then deletion, then
  // insertion, so tied minimal paths always produce the same split.
  SentenceScore score;
  score.reference_length = r;
  std::size_t i = r;
  std::size_t j = h;
  while (i > 0 || j > 0) {
    const std::size_t here = distance[i][j];
    if (i > 0 && j > 0) {
      const std::size_t sub_cost = ref[i - 1] == hyp[j - 1] ? 0 : 1;
      if (distance[i - 1][j - 1] + sub_cost == here) {
        score.substitutions += sub_cost;
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && distance[i - 1][j] + 1 == here) {
      ++score.deletions;
      --i;
      continue;
    }
    ++score.insertions;
    --j;
  }
  return score;
}

double relative_wer_reduction(double wer_asr, double wer_corrected) {
  if (wer_asr == 0.0) {
    if (wer_corrected == 0.0) return 0.0;
    throw ZeroBaseline("relative_wer_reduction: baseline WER is zero");
  }
  return 100.0 * (wer_asr - wer_corrected) / wer_asr;
}

EvalReport evaluate_corpus(const std::vector<EvalTriple>& triples) {
  EvalReport report;
  std::size_t asr_errors = 0;
  std::size_t corrected_errors = 0;
  for (const EvalTriple& triple : triples) {
    if (triple.reference.empty()) {
      ++report.skipped_count;
      continue;
    }
    asr_errors += wer(triple.reference, triple.hypothesis).errors();
    corrected_errors += wer(triple.reference, triple.corrected).errors();
    ++report.sentence_count;
    report.token_count += triple.reference.size();
  }
  if (report.sentence_count == 0) {
    throw EmptyCorpus("evaluate_corpus: no triple has a non-empty reference");
  }
  const auto tokens = static_cast<double>(report.token_count);
  report.wer_asr = 100.0 * static_cast<double>(asr_errors) / tokens;
  report.wer_corrected = 100.0 * static_cast<double>(corrected_errors) / tokens;
  report.wrr_asr = 100.0 - report.wer_asr;
  report.wrr_corrected = 100.0 - report.wer_corrected;
  report.wrr_gain = report.wrr_corrected - report.wrr_asr;
  report.relative_reduction = relative_wer_reduction(report.wer_asr, report.wer_corrected);
  return report;
}

std::string report_to_json(const EvalReport& report) {
  nlohmann::json j;
  j["wer_asr"] = report.wer_asr;
  j["wer_corrected"] = report.wer_corrected;
  j["wrr_asr"] = report.wrr_asr;
  j["wrr_corrected"] = report.wrr_corrected;
  j["wrr_gain"] = report.wrr_gain;
  j["relative_wer_reduction"] = report.relative_reduction;
  j["sentence_count"] = report.sentence_count;
  j["token_count"] = report.token_count;
  j["skipped_count"] = report.skipped_count;
  return j.dump(2) + "\n";
}

std::string report_to_table(const EvalReport& report) {
  char buffer[512];
  std::snprintf(buffer, sizeof(buffer),
                "sentences          %10zu\n"
                "reference tokens   %10zu\n"
                "skipped (no ref)   %10zu\n"
                "WER  asr           %10.2f %%\n"
                "WER  corrected     %10.2f %%\n"
                "WRR  asr           %10.2f %%\n"
                "WRR  corrected     %10.2f %%\n"
                "WRR  gain          %+10.2f points\n"
                "WER  reduction     %+10.2f %% relative\n",
                report.sentence_count, report.token_count, report.skipped_count, report.wer_asr,
                report.wer_corrected, report.wrr_asr, report.wrr_corrected, report.wrr_gain,
                report.relative_reduction);
  return std::string(buffer);
}

}  // namespace asrcorrect
