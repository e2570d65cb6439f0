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

#include "asrcorrect/editops.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "asrcorrect/align.hpp"
#include "asrcorrect/errors.hpp"
#include "asrcorrect/util/utf8.hpp"

namespace asrcorrect {

namespace {

constexpr std::size_t kNpos = static_cast<std::size_t>(-1);

bool has_whitespace(std::string_view text) {
  for (char32_t cp : utf8::decode(text)) {
    if (utf8::is_space(cp)) return true;
  }
  return false;
}

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

// A replace payload is one or more words separated by single spaces: no
// leading, trailing, or doubled separators, and no other whitespace.
bool valid_replace_payload(std::string_view payload) {
  if (payload.empty()) return false;
  const auto cps = utf8::decode(payload);
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (cps[i] == U' ') {
      if (i == 0 || i + 1 == cps.size() || cps[i + 1] == U' ') return false;
    } else if (utf8::is_space(cps[i])) {
      return false;
    }
  }
  return true;
}

std::vector<std::string> split_payload(const std::string& payload) {
  std::vector<std::string> words;
  std::string current;
  for (char c : payload) {
    if (c == ' ') {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

bool all_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// The reference-side text a tagged token contributes, used when folding
// inserted words into a neighboring tag.
std::string correction_target(const std::string& token, const EditOp& op) {
  switch (op.kind) {
    case EditKind::None:
    case EditKind::Unsupported:
      return token;
    case EditKind::Del:
      return std::string();
    case EditKind::Append:
      return token + op.payload;
    case EditKind::AddPrefix:
      return op.payload + token;
    case EditKind::RemoveSuffix:
      return utf8::drop_suffix(token, op.count);
    case EditKind::RemovePrefix:
      return utf8::drop_prefix(token, op.count);
    case EditKind::Replace:
      return op.payload;
    case EditKind::Join:
    case EditKind::JoinSep:
      break;
  }
  // Join tags only arise inside replace spans, which are never fold targets.
  throw std::logic_error("correction_target: join tag cannot absorb an insertion");
}

std::string join_words(const std::vector<std::string>& words, std::size_t begin, std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (i != begin) out.push_back(' ');
    out += words[i];
  }
  return out;
}

}  // namespace

EditOp EditOp::none() { return EditOp{}; }

EditOp EditOp::unsupported() { return EditOp{EditKind::Unsupported, "", 0, ""}; }

EditOp EditOp::del() { return EditOp{EditKind::Del, "", 0, ""}; }

EditOp EditOp::join() { return EditOp{EditKind::Join, "", 0, ""}; }

EditOp EditOp::append(std::string suffix) {
  require(!suffix.empty() && !has_whitespace(suffix), "append: suffix must be non-empty without whitespace");
  return EditOp{EditKind::Append, std::move(suffix), 0, ""};
}

EditOp EditOp::add_prefix(std::string prefix) {
  require(!prefix.empty() && !has_whitespace(prefix), "add_prefix: prefix must be non-empty without whitespace");
  return EditOp{EditKind::AddPrefix, std::move(prefix), 0, ""};
}

EditOp EditOp::remove_suffix(std::size_t count) {
  require(count > 0, "remove_suffix: count must be positive");
  return EditOp{EditKind::RemoveSuffix, "", count, ""};
}

EditOp EditOp::remove_prefix(std::size_t count) {
  require(count > 0, "remove_prefix: count must be positive");
  return EditOp{EditKind::RemovePrefix, "", count, ""};
}

EditOp EditOp::join_sep(std::string separator) {
  require(utf8::length(separator) == 1 && !has_whitespace(separator),
          "join_sep: separator must be a single non-whitespace codepoint");
  return EditOp{EditKind::JoinSep, "", 0, std::move(separator)};
}

EditOp EditOp::replace(std::string words) {
  require(valid_replace_payload(words), "replace: payload must be space-separated non-empty words");
  return EditOp{EditKind::Replace, std::move(words), 0, ""};
}

std::string format_tag(const EditOp& op) {
  switch (op.kind) {
    case EditKind::None: return "none";
    case EditKind::Unsupported: return "unsupported";
    case EditKind::Del: return "del";
    case EditKind::Append: return "append_" + op.payload;
    case EditKind::AddPrefix: return "add_prefix_" + op.payload;
    case EditKind::RemoveSuffix: return "remove_suffix_" + std::to_string(op.count);
    case EditKind::RemovePrefix: return "remove_prefix_" + std::to_string(op.count);
    case EditKind::Join: return "join";
    case EditKind::JoinSep: return "join_" + op.separator;
    case EditKind::Replace: return "replace_" + op.payload;
  }
  return "none";
}

EditOp parse_tag(std::string_view text) {
  struct Form {
    std::string_view prefix;
    EditKind kind;
  };
  // Longest prefix wins; "join_" is listed before its prefix "join".
  static constexpr Form kForms[] = {
      {"remove_suffix_", EditKind::RemoveSuffix},
      {"remove_prefix_", EditKind::RemovePrefix},
      {"add_prefix_", EditKind::AddPrefix},
      {"unsupported", EditKind::Unsupported},
      {"replace_", EditKind::Replace},
      {"append_", EditKind::Append},
      {"join_", EditKind::JoinSep},
      {"none", EditKind::None},
      {"join", EditKind::Join},
      {"del", EditKind::Del},
  };
  for (const Form& form : kForms) {
    if (!text.starts_with(form.prefix)) continue;
    const std::string rest(text.substr(form.prefix.size()));
    try {
      switch (form.kind) {
        case EditKind::None:
        case EditKind::Unsupported:
        case EditKind::Del:
        case EditKind::Join:
          if (!rest.empty()) break;  // e.g. "delete" is not a tag
          return EditOp{form.kind, "", 0, ""};
        case EditKind::Append:
          return EditOp::append(rest);
        case EditKind::AddPrefix:
          return EditOp::add_prefix(rest);
        case EditKind::RemoveSuffix:
        case EditKind::RemovePrefix: {
          if (!all_digits(rest) || rest.size() > 9 || (rest.size() > 1 && rest[0] == '0')) break;
          const auto count = static_cast<std::size_t>(std::stoul(rest));
          if (count == 0) break;
          return form.kind == EditKind::RemoveSuffix ? EditOp::remove_suffix(count)
                                                     : EditOp::remove_prefix(count);
        }
        case EditKind::JoinSep:
          return EditOp::join_sep(rest);
        case EditKind::Replace:
          return EditOp::replace(rest);
      }
    } catch (const std::invalid_argument&) {
      // Fall through to the shared error below.
    }
    break;
  }
  throw ParseError("invalid tag: '" + std::string(text) + "'");
}

EditOp derive_token_op(const std::string& hyp, const std::string& ref) {
  if (hyp == ref) return EditOp::none();
  if (ref.size() > hyp.size() && ref.starts_with(hyp)) {
    return EditOp::append(ref.substr(hyp.size()));
  }
  if (hyp.size() > ref.size() && hyp.starts_with(ref)) {
    return EditOp::remove_suffix(utf8::length(std::string_view(hyp).substr(ref.size())));
  }
  if (ref.size() > hyp.size() && ref.ends_with(hyp)) {
    return EditOp::add_prefix(ref.substr(0, ref.size() - hyp.size()));
  }
  if (hyp.size() > ref.size() && hyp.ends_with(ref)) {
    return EditOp::remove_prefix(utf8::length(std::string_view(hyp).substr(0, hyp.size() - ref.size())));
  }
  return EditOp::replace(ref);
}

std::vector<EditOp> derive_span_tags(const std::vector<std::string>& hyp_span,
                                     const std::vector<std::string>& ref_span,
                                     const DeriveOptions& options) {
  const std::size_t h = hyp_span.size();
  const std::size_t r = ref_span.size();
  if (h == 0 || r == 0) throw std::invalid_argument("derive_span_tags: spans must be non-empty");

  std::vector<EditOp> tags;
  tags.reserve(h);

  if (h == r) {
    for (std::size_t i = 0; i < h; ++i) tags.push_back(derive_token_op(hyp_span[i], ref_span[i]));
    return tags;
  }

  if (h == r + 1) {
    // Leftmost adjacent pair that concatenates (directly first, then with
    // each configured separator) to its reference token; remaining positions
    // pair off one-to-one.
    for (std::size_t k = 0; k + 1 < h; ++k) {
      std::string separator;
      bool found = hyp_span[k] + hyp_span[k + 1] == ref_span[k];
      if (!found) {
        for (const std::string& sep : options.join_separators) {
          if (hyp_span[k] + sep + hyp_span[k + 1] == ref_span[k]) {
            separator = sep;
            found = true;
            break;
          }
        }
      }
      if (!found) continue;
      for (std::size_t i = 0; i < k; ++i) tags.push_back(derive_token_op(hyp_span[i], ref_span[i]));
      tags.push_back(EditOp::none());
      tags.push_back(separator.empty() ? EditOp::join() : EditOp::join_sep(separator));
      for (std::size_t i = k + 2; i < h; ++i) tags.push_back(derive_token_op(hyp_span[i], ref_span[i - 1]));
      return tags;
    }
  }

  // Fallback: the first token absorbs the whole reference span, the rest of
  // the hypothesis span is deleted.
  tags.push_back(EditOp::replace(join_words(ref_span, 0, r)));
  for (std::size_t i = 1; i < h; ++i) tags.push_back(EditOp::del());
  return tags;
}

TaggedSentence derive_tags(const TokenSequence& hyp, const TokenSequence& ref,
                           const DeriveOptions& options) {
  if (hyp.empty()) throw HypothesisEmpty("derive_tags: hypothesis has no tokens");

  const auto ops = opcodes(hyp.tokens, ref.tokens);
  std::vector<EditOp> tags(hyp.size());

  for (const Opcode& op : ops) {
    switch (op.kind) {
      case OpcodeKind::Equal:
        for (std::size_t i = op.a_start; i < op.a_end; ++i) tags[i] = EditOp::none();
        break;
      case OpcodeKind::Delete:
        for (std::size_t i = op.a_start; i < op.a_end; ++i) tags[i] = EditOp::del();
        break;
      case OpcodeKind::Replace: {
        const std::vector<std::string> hyp_span(hyp.tokens.begin() + static_cast<std::ptrdiff_t>(op.a_start),
                                                hyp.tokens.begin() + static_cast<std::ptrdiff_t>(op.a_end));
        const std::vector<std::string> ref_span(ref.tokens.begin() + static_cast<std::ptrdiff_t>(op.b_start),
                                                ref.tokens.begin() + static_cast<std::ptrdiff_t>(op.b_end));
        const auto span_tags = derive_span_tags(hyp_span, ref_span, options);
        for (std::size_t i = 0; i < span_tags.size(); ++i) tags[op.a_start + i] = span_tags[i];
        break;
      }
      case OpcodeKind::Insert:
        break;  // resolved below, once neighbor tags exist
    }
  }

  // Inserted reference words have no hypothesis token; they fold into the
  // preceding token's tag, or the following token's when inserting at the
  // front. The fold composes with whatever correction that neighbor already
  // carries, so repeated folds accumulate.
  for (const Opcode& op : ops) {
    if (op.kind != OpcodeKind::Insert) continue;
    const std::string words = join_words(ref.tokens, op.b_start, op.b_end);
    const std::size_t idx = op.a_start == 0 ? 0 : op.a_start - 1;
    const std::string target = correction_target(hyp.tokens[idx], tags[idx]);
    std::string payload;
    if (op.a_start == 0) {
      payload = target.empty() ? words : words + " " + target;
    } else {
      payload = target.empty() ? words : target + " " + words;
    }
    tags[idx] = EditOp::replace(payload);
  }

  return TaggedSentence{hyp, std::move(tags)};
}

namespace detail {

std::size_t apply_ops(const std::vector<std::string>& tokens, const std::vector<EditOp>& ops,
                      std::vector<std::string>& out) {
  out.clear();
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& token = tokens[i];
    const EditOp& op = ops[i];
    switch (op.kind) {
      case EditKind::None:
      case EditKind::Unsupported:
        out.push_back(token);
        break;
      case EditKind::Del:
        break;
      case EditKind::Append:
        out.push_back(token + op.payload);
        break;
      case EditKind::AddPrefix:
        out.push_back(op.payload + token);
        break;
      case EditKind::RemoveSuffix:
      case EditKind::RemovePrefix: {
        if (op.count >= utf8::length(token)) return i;
        out.push_back(op.kind == EditKind::RemoveSuffix ? utf8::drop_suffix(token, op.count)
                                                        : utf8::drop_prefix(token, op.count));
        break;
      }
      case EditKind::Replace: {
        auto words = split_payload(op.payload);
        if (words.empty()) return i;
        for (std::string& word : words) out.push_back(std::move(word));
        break;
      }
      case EditKind::Join:
      case EditKind::JoinSep: {
        if (out.empty()) return i;
        std::string merged = std::move(out.back());
        out.pop_back();
        if (op.kind == EditKind::JoinSep) merged += op.separator;
        merged += token;
        out.push_back(std::move(merged));
        break;
      }
    }
  }
  return kNpos;
}

}  // namespace detail

TokenSequence apply_tags(const TaggedSentence& sentence) {
  if (sentence.tokens.size() != sentence.tags.size()) {
    throw LengthMismatch("apply_tags: " + std::to_string(sentence.tokens.size()) + " tokens vs " +
                         std::to_string(sentence.tags.size()) + " tags");
  }
  std::vector<std::string> out;
  const std::size_t failed = detail::apply_ops(sentence.tokens.tokens, sentence.tags, out);
  if (failed != kNpos) {
    throw InvalidApplication("cannot apply '" + format_tag(sentence.tags[failed]) + "' to token '" +
                             sentence.tokens[failed] + "' at index " + std::to_string(failed));
  }
  return TokenSequence{std::move(out)};
}

void write_tagged_dataset(std::ostream& out, const std::vector<TaggedSentence>& sentences) {
  for (const TaggedSentence& sentence : sentences) {
    if (sentence.tokens.size() != sentence.tags.size()) {
      throw LengthMismatch("write_tagged_dataset: tokens and tags differ in length");
    }
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
      out << sentence.tokens[i] << '\t' << format_tag(sentence.tags[i]) << '\n';
    }
    out << '\n';
  }
}

std::vector<TaggedSentence> read_tagged_dataset(std::istream& in) {
  std::vector<TaggedSentence> sentences;
  TaggedSentence current;
  std::string line;
  std::size_t line_number = 0;
  auto flush = [&] {
    if (current.tokens.empty()) return;
    sentences.push_back(std::move(current));
    current = TaggedSentence{};
  };
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw FormatError("line " + std::to_string(line_number) + ": expected token<TAB>tag");
    }
    const std::string token = line.substr(0, tab);
    if (has_whitespace(token)) {
      throw FormatError("line " + std::to_string(line_number) + ": token contains whitespace");
    }
    EditOp tag;
    try {
      tag = parse_tag(line.substr(tab + 1));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_number) + ": " + e.what());
    }
    if (tag.is_join() && current.tokens.empty()) {
      throw FormatError("line " + std::to_string(line_number) + ": join tag at sentence start");
    }
    current.tokens.tokens.push_back(token);
    current.tags.push_back(std::move(tag));
  }
  flush();
  return sentences;
}

void save_tagged_dataset(const std::string& path, const std::vector<TaggedSentence>& sentences) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write: " + path);
  write_tagged_dataset(out, sentences);
  if (!out) throw IoError("write failed: " + path);
}

std::vector<TaggedSentence> load_tagged_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  return read_tagged_dataset(in);
}

}  // namespace asrcorrect
