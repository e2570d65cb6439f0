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

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "asrcorrect/editops.hpp"
#include "asrcorrect/errors.hpp"
#include "oracles.hpp"

using namespace asrcorrect;

namespace {

using Tokens = std::vector<std::string>;

std::vector<std::string> tag_strings(const TaggedSentence& sentence) {
  std::vector<std::string> out;
  for (const EditOp& tag : sentence.tags) out.push_back(format_tag(tag));
  return out;
}

TaggedSentence sentence_from(const Tokens& tokens, const std::vector<std::string>& tags) {
  TaggedSentence out;
  out.tokens = TokenSequence{tokens};
  for (const std::string& tag : tags) out.tags.push_back(parse_tag(tag));
  return out;
}

}  // namespace

TEST_CASE("derive_token_op rule cascade") {
  CHECK(format_tag(derive_token_op("cat", "cat")) == "none");
  CHECK(format_tag(derive_token_op("cat", "cats")) == "append_s");
  CHECK(format_tag(derive_token_op("cats", "cat")) == "remove_suffix_1");
  CHECK(format_tag(derive_token_op("owl", "howl")) == "add_prefix_h");
  CHECK(format_tag(derive_token_op("howl", "owl")) == "remove_prefix_1");
  CHECK(format_tag(derive_token_op("cat", "hat")) == "replace_hat");
  // Counts are codepoints, not bytes.
  CHECK(format_tag(derive_token_op("caf\xC3\xA9", "caf")) == "remove_suffix_1");
  CHECK(format_tag(derive_token_op("caf", "caf\xC3\xA9")) == "append_\xC3\xA9");
}

TEST_CASE("derive_token_op never replaces when a one-end edit exists") {
  const std::vector<std::string> alphabet = {"a", "b"};
  std::vector<std::string> words;
  for (std::size_t len = 1; len <= 3; ++len) {
    const std::size_t total = static_cast<std::size_t>(1) << len;
    for (std::size_t bits = 0; bits < total; ++bits) {
      std::string word;
      for (std::size_t i = 0; i < len; ++i) word += alphabet[(bits >> i) & 1];
      words.push_back(word);
    }
  }
  for (const std::string& hyp : words) {
    for (const std::string& ref : words) {
      const EditOp op = derive_token_op(hyp, ref);
      const bool one_end = hyp == ref || ref.starts_with(hyp) || hyp.starts_with(ref) ||
                           ref.ends_with(hyp) || hyp.ends_with(ref);
      CAPTURE(hyp);
      CAPTURE(ref);
      CHECK((op.kind == EditKind::Replace) == !one_end);
    }
  }
}

TEST_CASE("derive_span_tags handles pairwise, join, and fallback shapes") {
  {
    const auto tags = derive_span_tags({"cat"}, {"cats"});
    REQUIRE(tags.size() == 1);
    CHECK(format_tag(tags[0]) == "append_s");
  }
  {
    const auto tags = derive_span_tags({"howl"}, {"owl"});
    REQUIRE(tags.size() == 1);
    CHECK(format_tag(tags[0]) == "remove_prefix_1");
  }
  {
    const auto tags = derive_span_tags({"a", "b", "c"}, {"x"});
    REQUIRE(tags.size() == 3);
    CHECK(format_tag(tags[0]) == "replace_x");
    CHECK(format_tag(tags[1]) == "del");
    CHECK(format_tag(tags[2]) == "del");
  }
  {
    // One more hypothesis token than reference: the adjacent pair joins.
    const auto tags = derive_span_tags({"not", "book", "store"}, {"note", "bookstore"});
    REQUIRE(tags.size() == 3);
    CHECK(format_tag(tags[0]) == "append_e");
    CHECK(format_tag(tags[1]) == "none");
    CHECK(format_tag(tags[2]) == "join");
  }
}

TEST_CASE("derive_tags covers the documented tag classes") {
  {
    const TaggedSentence tagged = derive_tags(TokenSequence{{"book", "store"}},
                                              TokenSequence{{"bookstore"}});
    CHECK(tag_strings(tagged) == std::vector<std::string>{"none", "join"});
  }
  {
    const TaggedSentence tagged = derive_tags(TokenSequence{{"long", "term"}},
                                              TokenSequence{{"long-term"}});
    CHECK(tag_strings(tagged) == std::vector<std::string>{"none", "join_-"});
  }
  {
    const TaggedSentence tagged = derive_tags(TokenSequence{{"don", "t"}},
                                              TokenSequence{{"don't"}});
    CHECK(tag_strings(tagged) == std::vector<std::string>{"none", "join_'"});
  }
  {
    const TokenSequence same{{"one", "two", "three"}};
    const TaggedSentence tagged = derive_tags(same, same);
    CHECK(tag_strings(tagged) == std::vector<std::string>{"none", "none", "none"});
  }
  {
    // Insert after the last token folds into the preceding token's target.
    const TaggedSentence tagged = derive_tags(TokenSequence{{"play", "cat"}},
                                              TokenSequence{{"play", "cats", "now"}});
    CHECK(tag_strings(tagged) == std::vector<std::string>{"none", "replace_cats now"});
  }
  {
    // Insert at position 0 folds into the following token.
    const TaggedSentence tagged = derive_tags(TokenSequence{{"cat"}},
                                              TokenSequence{{"the", "cat"}});
    CHECK(tag_strings(tagged) == std::vector<std::string>{"replace_the cat"});
  }
  {
    // Deletions tag each dropped token.
    const TaggedSentence tagged = derive_tags(TokenSequence{{"uh", "play", "uh"}},
                                              TokenSequence{{"play"}});
    CHECK(tag_strings(tagged) == std::vector<std::string>{"del", "none", "del"});
  }
}

TEST_CASE("derive_tags requires a non-empty hypothesis") {
  CHECK_THROWS_AS(derive_tags(TokenSequence{}, TokenSequence{{"x"}}), HypothesisEmpty);
  // Empty reference is legal: everything is deleted.
  const TaggedSentence tagged = derive_tags(TokenSequence{{"a", "b"}}, TokenSequence{});
  CHECK(tag_strings(tagged) == std::vector<std::string>{"del", "del"});
  CHECK(apply_tags(tagged).empty());
}

TEST_CASE("apply_tags performs each operation class") {
  CHECK(apply_tags(sentence_from({"a"}, {"del"})).tokens.empty());
  CHECK(apply_tags(sentence_from({"book", "store"}, {"none", "join"})).tokens ==
        Tokens{"bookstore"});
  CHECK(apply_tags(sentence_from({"long", "term"}, {"none", "join_-"})).tokens ==
        Tokens{"long-term"});
  CHECK(apply_tags(sentence_from({"cat", "dog"}, {"none", "none"})).tokens ==
        Tokens{"cat", "dog"});
  CHECK(apply_tags(sentence_from({"cat"}, {"append_s"})).tokens == Tokens{"cats"});
  CHECK(apply_tags(sentence_from({"owl"}, {"add_prefix_h"})).tokens == Tokens{"howl"});
  CHECK(apply_tags(sentence_from({"cats"}, {"remove_suffix_1"})).tokens == Tokens{"cat"});
  CHECK(apply_tags(sentence_from({"howl"}, {"remove_prefix_1"})).tokens == Tokens{"owl"});
  CHECK(apply_tags(sentence_from({"cat"}, {"replace_cats now"})).tokens ==
        Tokens{"cats", "now"});
  // unsupported copies the token through unchanged.
  CHECK(apply_tags(sentence_from({"cat"}, {"unsupported"})).tokens == Tokens{"cat"});
}

TEST_CASE("apply_tags raises on precondition violations") {
  CHECK_THROWS_AS(apply_tags(sentence_from({"cat"}, {"remove_suffix_3"})), InvalidApplication);
  CHECK_THROWS_AS(apply_tags(sentence_from({"cat"}, {"remove_prefix_4"})), InvalidApplication);
  // A join whose predecessor was deleted hits an empty output buffer.
  CHECK_THROWS_AS(apply_tags(sentence_from({"a", "b"}, {"del", "join"})), InvalidApplication);
  CHECK_THROWS_AS(apply_tags(TaggedSentence{TokenSequence{{"a", "b"}}, {parse_tag("none")}}),
                  LengthMismatch);
}

TEST_CASE("tag serialization round-trips every kind") {
  const std::vector<std::string> forms = {
      "none",           "unsupported",     "del",          "join",
      "join_-",         "join_'",          "append_s",     "append_\xC3\xA9",
      "add_prefix_h",   "remove_suffix_1", "remove_suffix_12",
      "remove_prefix_3", "replace_hat",    "replace_cats now"};
  for (const std::string& form : forms) {
    CAPTURE(form);
    CHECK(format_tag(parse_tag(form)) == form);
  }
}

TEST_CASE("parse_tag rejects malformed forms") {
  const std::vector<std::string> bad = {
      "", "bogus", "remove_suffix_0", "remove_suffix_", "remove_suffix_x",
      "remove_suffix_007", "remove_prefix_-1", "append_", "add_prefix_", "replace_",
      "nonesuch", "Join", "DEL"};
  for (const std::string& form : bad) {
    CAPTURE(form);
    CHECK_THROWS_AS(parse_tag(form), ParseError);
  }
}

TEST_CASE("round-trip: apply_tags after derive_tags reconstructs the reference") {
  std::mt19937_64 rng(31337);
  const auto& alphabet = oracle::mixed_alphabet();
  for (int round = 0; round < 3000; ++round) {
    Tokens hyp = oracle::random_tokens(rng, 8, alphabet);
    if (hyp.empty()) hyp.push_back(alphabet[round % alphabet.size()]);
    const Tokens ref = oracle::random_tokens(rng, 8, alphabet);
    CAPTURE(round);

    const TaggedSentence tagged = derive_tags(TokenSequence{hyp}, TokenSequence{ref});
    REQUIRE(tagged.tags.size() == hyp.size());

    // No join at index 0, and every tag survives serialization.
    if (!tagged.tags.empty()) CHECK_FALSE(tagged.tags[0].is_join());
    for (const EditOp& tag : tagged.tags) CHECK(parse_tag(format_tag(tag)) == tag);

    CHECK(apply_tags(tagged).tokens == ref);

    // The independent applier agrees.
    const auto reference_applied = oracle::apply_tags_reference(hyp, tagged.tags);
    REQUIRE(reference_applied.has_value());
    CHECK(*reference_applied == ref);
  }
}

TEST_CASE("tagged dataset file round-trip") {
  std::mt19937_64 rng(4242);
  const auto& alphabet = oracle::mixed_alphabet();
  std::vector<TaggedSentence> sentences;
  for (int i = 0; i < 50; ++i) {
    Tokens hyp = oracle::random_tokens(rng, 6, alphabet);
    if (hyp.empty()) hyp.push_back("pad");
    const Tokens ref = oracle::random_tokens(rng, 6, alphabet);
    sentences.push_back(derive_tags(TokenSequence{hyp}, TokenSequence{ref}));
  }
  std::stringstream buffer;
  write_tagged_dataset(buffer, sentences);
  const auto reread = read_tagged_dataset(buffer);
  REQUIRE(reread.size() == sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    CHECK(reread[i].tokens.tokens == sentences[i].tokens.tokens);
    CHECK(reread[i].tags == sentences[i].tags);
  }
}

TEST_CASE("tagged dataset reader rejects malformed input") {
  {
    std::stringstream buffer("token only line\n\n");
    CHECK_THROWS_AS(read_tagged_dataset(buffer), FormatError);
  }
  {
    // Invalid tag content keeps its parse error type, with line context.
    std::stringstream buffer("tok\tnonesuch\n\n");
    CHECK_THROWS_AS(read_tagged_dataset(buffer), ParseError);
  }
  {
    // join at sentence start violates the TaggedSentence invariant.
    std::stringstream buffer("tok\tjoin\n\n");
    CHECK_THROWS_AS(read_tagged_dataset(buffer), FormatError);
  }
}
