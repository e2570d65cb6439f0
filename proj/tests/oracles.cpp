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

#include "oracles.hpp"

#include <map>
#include <utility>

namespace oracle {

using asrcorrect::EditKind;
using asrcorrect::EditOp;
using asrcorrect::MatchBlock;
using asrcorrect::Opcode;
using asrcorrect::OpcodeKind;

MatchBlock brute_longest_block(const std::vector<std::string>& a, const std::vector<std::string>& b,
                               std::size_t a_lo, std::size_t a_hi, std::size_t b_lo,
                               std::size_t b_hi) {
  MatchBlock best{a_lo, b_lo, 0};
  for (std::size_t i = a_lo; i < a_hi; ++i) {
    for (std::size_t j = b_lo; j < b_hi; ++j) {
      std::size_t k = 0;
      while (i + k < a_hi && j + k < b_hi && a[i + k] == b[j + k]) ++k;
      const bool better = k > best.size || (k == best.size && k > 0 && i < best.a_start) ||
                          (k == best.size && k > 0 && i == best.a_start && j < best.b_start);
      if (better) best = MatchBlock{i, j, k};
    }
  }
  return best;
}

namespace {

void collect_blocks(const std::vector<std::string>& a, const std::vector<std::string>& b,
                    std::size_t a_lo, std::size_t a_hi, std::size_t b_lo, std::size_t b_hi,
                    std::vector<MatchBlock>& out) {
  const MatchBlock block = brute_longest_block(a, b, a_lo, a_hi, b_lo, b_hi);
  if (block.size == 0) return;
  collect_blocks(a, b, a_lo, block.a_start, b_lo, block.b_start, out);
  out.push_back(block);
  collect_blocks(a, b, block.a_start + block.size, a_hi, block.b_start + block.size, b_hi, out);
}

}  // namespace

std::vector<MatchBlock> brute_matching_blocks(const std::vector<std::string>& a,
                                              const std::vector<std::string>& b) {
  std::vector<MatchBlock> raw;
  collect_blocks(a, b, 0, a.size(), 0, b.size(), raw);

  std::vector<MatchBlock> merged;
  for (const MatchBlock& block : raw) {
    if (!merged.empty() && merged.back().a_start + merged.back().size == block.a_start &&
        merged.back().b_start + merged.back().size == block.b_start) {
      merged.back().size += block.size;
    } else {
      merged.push_back(block);
    }
  }
  merged.push_back(MatchBlock{a.size(), b.size(), 0});
  return merged;
}

std::vector<Opcode> brute_opcodes(const std::vector<std::string>& a,
                                  const std::vector<std::string>& b) {
  std::vector<Opcode> out;
  std::size_t ai = 0;
  std::size_t bi = 0;
  for (const MatchBlock& block : brute_matching_blocks(a, b)) {
    if (ai < block.a_start && bi < block.b_start) {
      out.push_back(Opcode{OpcodeKind::Replace, ai, block.a_start, bi, block.b_start});
    } else if (ai < block.a_start) {
      out.push_back(Opcode{OpcodeKind::Delete, ai, block.a_start, bi, bi});
    } else if (bi < block.b_start) {
      out.push_back(Opcode{OpcodeKind::Insert, ai, ai, bi, block.b_start});
    }
    ai = block.a_start + block.size;
    bi = block.b_start + block.size;
    if (block.size > 0) {
      out.push_back(Opcode{OpcodeKind::Equal, block.a_start, ai, block.b_start, bi});
    }
  }
  return out;
}

namespace {

std::size_t distance_memo(const std::vector<std::string>& ref, const std::vector<std::string>& hyp,
                          std::size_t i, std::size_t j,
                          std::map<std::pair<std::size_t, std::size_t>, std::size_t>& memo) {
  if (i == 0) return j;
  if (j == 0) return i;
  const auto key = std::make_pair(i, j);
  const auto found = memo.find(key);
  if (found != memo.end()) return found->second;
  const std::size_t subst =
      distance_memo(ref, hyp, i - 1, j - 1, memo) + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
  const std::size_t del = distance_memo(ref, hyp, i - 1, j, memo) + 1;
  const std::size_t ins = distance_memo(ref, hyp, i, j - 1, memo) + 1;
  std::size_t best = subst;
  if (del < best) best = del;
  if (ins < best) best = ins;
  memo[key] = best;
  return best;
}

// Codepoint boundaries without decoding: a byte starts a codepoint unless it
// is a continuation byte.
bool is_continuation(unsigned char byte) { return (byte & 0xC0) == 0x80; }

std::size_t codepoint_count(const std::string& text) {
  std::size_t count = 0;
  for (unsigned char byte : text) {
    if (!is_continuation(byte)) ++count;
  }
  return count;
}

std::string drop_front_codepoints(const std::string& text, std::size_t count) {
  std::size_t offset = 0;
  std::size_t seen = 0;
  while (offset < text.size()) {
    if (!is_continuation(static_cast<unsigned char>(text[offset]))) {
      if (seen == count) break;
      ++seen;
    }
    ++offset;
  }
  return text.substr(offset);
}

std::string drop_back_codepoints(const std::string& text, std::size_t count) {
  std::size_t offset = text.size();
  std::size_t dropped = 0;
  while (offset > 0 && dropped < count) {
    --offset;
    if (!is_continuation(static_cast<unsigned char>(text[offset]))) ++dropped;
  }
  return text.substr(0, offset);
}

std::vector<std::string> split_on_spaces(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == ' ') {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

}  // namespace

std::size_t edit_distance(const std::vector<std::string>& ref, const std::vector<std::string>& hyp) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
  return distance_memo(ref, hyp, ref.size(), hyp.size(), memo);
}

std::optional<std::vector<std::string>> apply_tags_reference(
    const std::vector<std::string>& tokens, const std::vector<EditOp>& tags) {
  if (tokens.size() != tags.size()) return std::nullopt;

  struct Piece {
    bool drop = false;
    bool join = false;
    std::string separator;
    std::vector<std::string> words;
  };

  std::vector<Piece> pieces;
  pieces.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& token = tokens[i];
    const EditOp& tag = tags[i];
    Piece piece;
    switch (tag.kind) {
      case EditKind::None:
      case EditKind::Unsupported:
        piece.words = {token};
        break;
      case EditKind::Del:
        piece.drop = true;
        break;
      case EditKind::Append:
        piece.words = {token + tag.payload};
        break;
      case EditKind::AddPrefix:
        piece.words = {tag.payload + token};
        break;
      case EditKind::RemoveSuffix:
        if (tag.count >= codepoint_count(token)) return std::nullopt;
        piece.words = {drop_back_codepoints(token, tag.count)};
        break;
      case EditKind::RemovePrefix:
        if (tag.count >= codepoint_count(token)) return std::nullopt;
        piece.words = {drop_front_codepoints(token, tag.count)};
        break;
      case EditKind::Join:
        piece.join = true;
        piece.words = {token};
        break;
      case EditKind::JoinSep:
        piece.join = true;
        piece.separator = tag.separator;
        piece.words = {token};
        break;
      case EditKind::Replace:
        piece.words = split_on_spaces(tag.payload);
        break;
    }
    pieces.push_back(std::move(piece));
  }

  std::vector<std::string> out;
  for (const Piece& piece : pieces) {
    if (piece.drop) continue;
    if (piece.join) {
      if (out.empty()) return std::nullopt;
      out.back() += piece.separator + piece.words.front();
      continue;
    }
    for (const std::string& word : piece.words) out.push_back(word);
  }
  return out;
}

std::vector<std::string> random_tokens(std::mt19937_64& rng, std::size_t max_len,
                                       const std::vector<std::string>& alphabet) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::vector<std::string> out(len_dist(rng));
  for (std::string& token : out) token = alphabet[pick(rng)];
  return out;
}

const std::vector<std::string>& mixed_alphabet() {
  static const std::vector<std::string> alphabet = {
      "a",     "b",      "cat",  "cats",      "play",   "plays", "song",
      "songs", "don't",  "dont", "long-term", "long",   "term",  "caf\xC3\xA9",
      "cafe",  "stra\xC3\x9F""e", "uh",   "the",       "rem",    "inders"};
  return alphabet;
}

}  // namespace oracle
