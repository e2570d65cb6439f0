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

#include "asrcorrect/corrector.hpp"

#include <algorithm>
#include <fstream>
#include <istream>

#include "asrcorrect/errors.hpp"
#include "asrcorrect/keyvalue.hpp"
#include "asrcorrect/util/glob.hpp"
#include "asrcorrect/util/utf8.hpp"

namespace asrcorrect {

namespace {

constexpr std::size_t kNpos = static_cast<std::size_t>(-1);

// An op that structurally cannot apply at this position, before looking at
// the rest of the sentence.
bool statically_invalid(const EditOp& tag, const std::string& token, std::size_t index) {
  if (tag.kind == EditKind::RemoveSuffix || tag.kind == EditKind::RemovePrefix) {
    return tag.count >= utf8::length(token);
  }
  if (tag.is_join()) return index == 0;
  return false;
}

bool matches_any_disabled(const std::vector<std::string>& disabled, const std::string& serialized) {
  return std::any_of(disabled.begin(), disabled.end(),
                     [&](const std::string& pattern) { return glob_match(pattern, serialized); });
}

bool matches_any_guard(const std::vector<GuardRule>& guards, const std::string& serialized,
                       const std::string& token) {
  return std::any_of(guards.begin(), guards.end(), [&](const GuardRule& rule) {
    return glob_match(rule.op_pattern, serialized) && glob_match(rule.token_pattern, token);
  });
}

// Demotes every still-applied member of a run that contains a skip. The
// propagated reason is the leftmost skip in the run. Returns whether any
// action changed.
bool propagate_runs(const std::vector<ScoredTag>& proposals, std::vector<CorrectionAction>& actions) {
  bool changed = false;
  const std::size_t n = proposals.size();
  std::size_t i = 0;
  while (i < n) {
    if (proposals[i].tag.is_none()) {
      ++i;
      continue;
    }
    std::size_t end = i;
    CorrectionAction reason = CorrectionAction::Applied;
    while (end < n && !proposals[end].tag.is_none()) {
      if (reason == CorrectionAction::Applied && actions[end] != CorrectionAction::Applied) {
        reason = actions[end];
      }
      ++end;
    }
    if (reason != CorrectionAction::Applied) {
      for (std::size_t k = i; k < end; ++k) {
        if (actions[k] == CorrectionAction::Applied) {
          actions[k] = reason;
          changed = true;
        }
      }
    }
    i = end;
  }
  return changed;
}

}  // namespace

const char* to_string(CorrectionAction action) {
  switch (action) {
    case CorrectionAction::Applied: return "applied";
    case CorrectionAction::SkippedThreshold: return "skipped_threshold";
    case CorrectionAction::SkippedRule: return "skipped_rule";
    case CorrectionAction::SkippedUnsupported: return "skipped_unsupported";
    case CorrectionAction::SkippedInvalid: return "skipped_invalid";
  }
  return "applied";
}

std::size_t CorrectionTrace::applied_count() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const TraceRecord& r) {
        return r.action == CorrectionAction::Applied && !r.proposed.is_none();
      }));
}

CorrectionPolicy parse_policy(std::istream& in) {
  const KeyValueFile file = KeyValueFile::parse(in);
  CorrectionPolicy policy;
  policy.score_threshold = file.get_double("score_threshold", policy.score_threshold);
  for (const std::string& line : file.section("disabled_ops")) {
    policy.disabled_ops.push_back(line);
  }
  for (const std::string& line : file.section("guard_rules")) {
    GuardRule rule;
    const auto tab = line.find('\t');
    if (tab != std::string::npos) {
      rule.op_pattern = trim(line.substr(0, tab));
      rule.token_pattern = trim(line.substr(tab + 1));
    } else {
      const auto fields = split_fields(line);
      if (fields.size() != 2) {
        throw FormatError("guard_rules: expected 'op_glob token_glob', got: " + line);
      }
      rule.op_pattern = fields[0];
      rule.token_pattern = fields[1];
    }
    if (rule.op_pattern.empty() || rule.token_pattern.empty()) {
      throw FormatError("guard_rules: empty pattern in: " + line);
    }
    policy.guard_rules.push_back(std::move(rule));
  }
  return policy;
}

CorrectionPolicy policy_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open policy file: " + path);
  return parse_policy(in);
}

std::pair<TokenSequence, CorrectionTrace> correct(const TokenSequence& tokens,
                                                  const std::vector<ScoredTag>& proposals,
                                                  const CorrectionPolicy& policy) {
  if (tokens.size() != proposals.size()) {
    throw LengthMismatch("correct: " + std::to_string(tokens.size()) + " tokens vs " +
                         std::to_string(proposals.size()) + " proposals");
  }
  const std::size_t n = tokens.size();
  std::vector<CorrectionAction> actions(n, CorrectionAction::Applied);

  for (std::size_t i = 0; i < n; ++i) {
    const EditOp& tag = proposals[i].tag;
    if (tag.is_none()) continue;
    if (tag.is_unsupported()) {
      actions[i] = CorrectionAction::SkippedUnsupported;
      continue;
    }
    if (proposals[i].score < policy.score_threshold) {
      actions[i] = CorrectionAction::SkippedThreshold;
      continue;
    }
    const std::string serialized = format_tag(tag);
    if (matches_any_disabled(policy.disabled_ops, serialized) ||
        matches_any_guard(policy.guard_rules, serialized, tokens[i])) {
      actions[i] = CorrectionAction::SkippedRule;
      continue;
    }
    if (statically_invalid(tag, tokens[i], i)) {
      actions[i] = CorrectionAction::SkippedInvalid;
    }
  }

  // A join can become inapplicable only because earlier ops changed the
  // output (deletes emptying the buffer), so demotions can cascade; iterate
  // until a full application succeeds. Each round demotes at least one op, so
  // this terminates.
  std::vector<std::string> output;
  std::vector<EditOp> effective(n);
  while (true) {
    propagate_runs(proposals, actions);
    for (std::size_t i = 0; i < n; ++i) {
      effective[i] = actions[i] == CorrectionAction::Applied ? proposals[i].tag : EditOp::none();
    }
    const std::size_t failed = detail::apply_ops(tokens.tokens, effective, output);
    if (failed == kNpos) break;
    actions[failed] = CorrectionAction::SkippedInvalid;
  }

  CorrectionTrace trace;
  trace.records.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    trace.records.push_back(TraceRecord{tokens[i], proposals[i].tag, proposals[i].score, actions[i]});
  }
  return {TokenSequence{std::move(output)}, std::move(trace)};
}

}  // namespace asrcorrect
