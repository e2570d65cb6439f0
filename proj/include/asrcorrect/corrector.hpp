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

#ifndef ASRCORRECT_CORRECTOR_HPP_
#define ASRCORRECT_CORRECTOR_HPP_

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "asrcorrect/tagger.hpp"

namespace asrcorrect {

// One guard matches when both globs hit: the serialized tag against
// op_pattern and the token against token_pattern.
struct GuardRule {
  std::string op_pattern;
  std::string token_pattern;

  bool operator==(const GuardRule&) const = default;
};

struct CorrectionPolicy {
  // Proposals scoring below the threshold are skipped. 0.0 applies
  // everything; anything above 1.0 applies nothing.
  double score_threshold = 0.0;
  // Globs over serialized tags, e.g. "replace_*" or "join*".
  std::vector<std::string> disabled_ops;
  std::vector<GuardRule> guard_rules;
};

// Policy file: "score_threshold = <x>" plus [disabled_ops] (one glob per
// line) and [guard_rules] ("op_glob token_glob" per line) sections.
CorrectionPolicy policy_from_file(const std::string& path);
CorrectionPolicy parse_policy(std::istream& in);

enum class CorrectionAction {
  Applied,
  SkippedThreshold,    // score below the policy threshold
  SkippedRule,         // disabled op or guard rule
  SkippedUnsupported,  // tagger proposed the unsupported placeholder
  SkippedInvalid,      // op cannot apply to this token at this position
};

const char* to_string(CorrectionAction action);

struct TraceRecord {
  std::string token;
  EditOp proposed;
  double score = 0.0;
  CorrectionAction action = CorrectionAction::Applied;

  bool operator==(const TraceRecord&) const = default;
};

struct CorrectionTrace {
  std::vector<TraceRecord> records;  // one per input token

  std::size_t applied_count() const;
};

// Applies the proposed tags under the policy. Edits come in runs (maximal
// stretches of adjacent non-none proposals): when any member of a run is
// skipped for any reason, the entire run is skipped, because partial
// application of an overlapping rewrite can corrupt the sentence. none
// proposals are untouched by policy and never demote anything.
//
// Raises LengthMismatch when tokens and proposals differ in length. With a
// threshold above 1.0 the output always equals the input.
std::pair<TokenSequence, CorrectionTrace> correct(const TokenSequence& tokens,
                                                  const std::vector<ScoredTag>& proposals,
                                                  const CorrectionPolicy& policy);

}  // namespace asrcorrect

#endif  // ASRCORRECT_CORRECTOR_HPP_
