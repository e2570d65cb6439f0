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

#ifndef ASRCORRECT_EDITOPS_HPP_
#define ASRCORRECT_EDITOPS_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "asrcorrect/normalize.hpp"

namespace asrcorrect {

// Word-level edit operations. Applying the operation attached to each token
// of a hypothesis reconstructs the reference sentence.
enum class EditKind {
  None,          // keep the token
  Unsupported,   // keep the token; stands for an op outside the vocabulary
  Del,           // drop the token
  Append,        // append a suffix string
  AddPrefix,     // prepend a prefix string
  RemoveSuffix,  // drop N trailing codepoints
  RemovePrefix,  // drop N leading codepoints
  Join,          // merge with the previous output token
  JoinSep,       // merge with the previous output token using a separator
  Replace,       // substitute one or more words
};

struct EditOp {
  EditKind kind = EditKind::None;
  std::string payload;    // Append / AddPrefix / Replace
  std::size_t count = 0;  // RemoveSuffix / RemovePrefix, in codepoints
  std::string separator;  // JoinSep, a single codepoint

  bool operator==(const EditOp&) const = default;

  bool is_none() const { return kind == EditKind::None; }
  bool is_unsupported() const { return kind == EditKind::Unsupported; }
  bool is_join() const { return kind == EditKind::Join || kind == EditKind::JoinSep; }

  // Factories validate their argument and raise std::invalid_argument on
  // misuse (whitespace in a payload, zero count, multi-codepoint separator).
  static EditOp none();
  static EditOp unsupported();
  static EditOp del();
  static EditOp join();
  static EditOp append(std::string suffix);
  static EditOp add_prefix(std::string prefix);
  static EditOp remove_suffix(std::size_t count);
  static EditOp remove_prefix(std::size_t count);
  static EditOp join_sep(std::string separator);
  static EditOp replace(std::string words);
};

// Canonical serialized form, e.g. "append_s", "remove_suffix_2", "join_-",
// "replace_long term". parse_tag(format_tag(op)) == op for every valid op.
std::string format_tag(const EditOp& op);
EditOp parse_tag(std::string_view text);  // raises ParseError

struct TaggedSentence {
  TokenSequence tokens;
  std::vector<EditOp> tags;  // parallel to tokens

  bool operator==(const TaggedSentence&) const = default;
};

struct DeriveOptions {
  // Separators tried, in order, after direct concatenation when detecting
  // joined pairs. Each entry is a single codepoint.
  std::vector<std::string> join_separators = {"-", "'"};
};

// Cheapest single-token edit turning hyp into ref: identity, then suffix and
// prefix edits (longer-token side checked first), then whole-word replace.
EditOp derive_token_op(const std::string& hyp, const std::string& ref);

// Tags for one replace span. hyp_span and ref_span are both non-empty.
std::vector<EditOp> derive_span_tags(const std::vector<std::string>& hyp_span,
                                     const std::vector<std::string>& ref_span,
                                     const DeriveOptions& options = {});

// Tags for a full sentence pair. The hypothesis must be non-empty (raises
// HypothesisEmpty); the reference may be empty, yielding all-del tags.
// Round trip: apply_tags(derive_tags(hyp, ref)) reconstructs ref exactly.
TaggedSentence derive_tags(const TokenSequence& hyp, const TokenSequence& ref,
                           const DeriveOptions& options = {});

// Applies tags left to right. Raises LengthMismatch when tokens and tags
// differ in length and InvalidApplication when an op cannot be applied
// (count >= token length, join with no previous output token).
TokenSequence apply_tags(const TaggedSentence& sentence);

namespace detail {
// Shared application core: fills `out` and returns the index of the first
// inapplicable op, or npos when every op applied. No exceptions.
std::size_t apply_ops(const std::vector<std::string>& tokens, const std::vector<EditOp>& ops,
                      std::vector<std::string>& out);
}  // namespace detail

// Tagged dataset: one "token<TAB>tag" line per token, a blank line after
// each sentence. Readers accept \r\n and skip leading blank lines.
void write_tagged_dataset(std::ostream& out, const std::vector<TaggedSentence>& sentences);
std::vector<TaggedSentence> read_tagged_dataset(std::istream& in);
void save_tagged_dataset(const std::string& path, const std::vector<TaggedSentence>& sentences);
std::vector<TaggedSentence> load_tagged_dataset(const std::string& path);

}  // namespace asrcorrect

#endif  // ASRCORRECT_EDITOPS_HPP_
