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

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "asrcorrect/editops.hpp"
#include "asrcorrect/errors.hpp"
#include "asrcorrect/vocab.hpp"

using namespace asrcorrect;

namespace {

// Builds a corpus holding `count` occurrences of each tag, one token per
// sentence (tokens are irrelevant to counting).
std::vector<TaggedSentence> corpus_with_counts(const std::vector<std::pair<std::string, int>>& spec) {
  std::vector<TaggedSentence> corpus;
  for (const auto& [tag, count] : spec) {
    for (int i = 0; i < count; ++i) {
      TaggedSentence sentence;
      sentence.tokens = TokenSequence{{"tok"}};
      sentence.tags.push_back(parse_tag(tag));
      corpus.push_back(sentence);
    }
  }
  return corpus;
}

TaggedSentence tagged(const std::vector<std::string>& tokens,
                      const std::vector<std::string>& tags) {
  TaggedSentence out;
  out.tokens = TokenSequence{tokens};
  for (const std::string& tag : tags) out.tags.push_back(parse_tag(tag));
  return out;
}

std::vector<std::string> tags_of(const TaggedSentence& sentence) {
  std::vector<std::string> out;
  for (const EditOp& tag : sentence.tags) out.push_back(format_tag(tag));
  return out;
}

}  // namespace

TEST_CASE("build_vocabulary keeps frequent tags and drops singletons") {
  const auto corpus =
      corpus_with_counts({{"append_s", 40}, {"del", 10}, {"replace_xyz", 1}});
  const TagVocabulary vocab = build_vocabulary(corpus, 150, 2);
  CHECK(vocab.size() == 4);  // none, unsupported, append_s, del
  CHECK(vocab.contains("none"));
  CHECK(vocab.contains("unsupported"));
  CHECK(vocab.contains("append_s"));
  CHECK(vocab.contains("del"));
  CHECK_FALSE(vocab.contains("replace_xyz"));
  // Entries are ordered by count, structural tags included.
  REQUIRE(vocab.entries().size() == 4);
  CHECK(vocab.entries()[0].tag == "append_s");
  CHECK(vocab.entries()[0].count == 40);
  CHECK(vocab.entries()[1].tag == "del");
  CHECK(vocab.entries()[1].count == 10);
}

TEST_CASE("build_vocabulary on an all-none corpus is structural only") {
  const auto corpus = corpus_with_counts({{"none", 25}});
  const TagVocabulary vocab = build_vocabulary(corpus, 150, 2);
  CHECK(vocab.size() == 2);
  CHECK(vocab.contains("none"));
  CHECK(vocab.contains("unsupported"));
}

TEST_CASE("build_vocabulary cutoff keeps exactly the most frequent tags") {
  std::vector<std::pair<std::string, int>> spec;
  for (int i = 0; i < 200; ++i) {
    // Unique payloads; counts 2..201 so every tag clears min_count.
    spec.push_back({"replace_w" + std::to_string(i), i + 2});
  }
  const auto corpus = corpus_with_counts(spec);
  const TagVocabulary vocab = build_vocabulary(corpus, 150, 2);
  // 150 non-structural plus none and unsupported.
  CHECK(vocab.size() == 152);
  // Every kept tag outranks every dropped tag: the 50 least frequent (counts
  // 2..51, payload indexes 0..49) are gone.
  for (int i = 0; i < 50; ++i) CHECK_FALSE(vocab.contains("replace_w" + std::to_string(i)));
  for (int i = 50; i < 200; ++i) CHECK(vocab.contains("replace_w" + std::to_string(i)));
}

TEST_CASE("build_vocabulary breaks count ties lexicographically") {
  const auto corpus = corpus_with_counts({{"del", 3}, {"append_s", 3}, {"append_a", 3}});
  const TagVocabulary vocab = build_vocabulary(corpus, 2, 2);
  CHECK(vocab.contains("append_a"));
  CHECK(vocab.contains("append_s"));
  CHECK_FALSE(vocab.contains("del"));
}

TEST_CASE("build_vocabulary requires a corpus") {
  CHECK_THROWS_AS(build_vocabulary({}, 150, 2), EmptyCorpus);
}

TEST_CASE("count_tags counts everything except none") {
  const auto counts = count_tags({tagged({"a", "b", "c", "d"},
                                         {"none", "del", "del", "append_s"})});
  CHECK(counts.size() == 2);
  CHECK(counts.at("del") == 2);
  CHECK(counts.at("append_s") == 1);
  CHECK(counts.find("none") == counts.end());
}

TEST_CASE("singleton_fraction is the share of distinct tags seen once") {
  std::map<std::string, std::uint64_t> counts{{"del", 5}, {"append_s", 1}, {"join", 1},
                                              {"replace_x", 2}};
  CHECK(singleton_fraction(counts) == doctest::Approx(0.5));
  CHECK(singleton_fraction({}) == doctest::Approx(0.0));
}

TEST_CASE("mask_unsupported replaces out-of-vocabulary tags") {
  const TagVocabulary vocab =
      build_vocabulary(corpus_with_counts({{"del", 5}, {"append_s", 5}}), 150, 2);
  const TaggedSentence masked =
      mask_unsupported(tagged({"a", "b", "c"}, {"none", "replace_rare", "none"}), vocab);
  CHECK(tags_of(masked) == std::vector<std::string>{"none", "unsupported", "none"});
}

TEST_CASE("mask_unsupported widens over the whole non-none run") {
  const TagVocabulary vocab =
      build_vocabulary(corpus_with_counts({{"del", 5}, {"append_s", 5}}), 150, 2);
  const TaggedSentence masked = mask_unsupported(
      tagged({"a", "b", "c", "d"}, {"del", "replace_rare", "append_s", "none"}), vocab);
  CHECK(tags_of(masked) ==
        std::vector<std::string>{"unsupported", "unsupported", "unsupported", "none"});
  // Runs are bounded by none: a separate clean run is untouched.
  const TaggedSentence split_runs = mask_unsupported(
      tagged({"a", "b", "c"}, {"del", "none", "replace_rare"}), vocab);
  CHECK(tags_of(split_runs) == std::vector<std::string>{"del", "none", "unsupported"});
}

TEST_CASE("mask_unsupported leaves in-vocabulary sentences unchanged") {
  const TagVocabulary vocab =
      build_vocabulary(corpus_with_counts({{"del", 5}, {"append_s", 5}}), 150, 2);
  const TaggedSentence sentence = tagged({"a", "b", "c"}, {"del", "append_s", "none"});
  CHECK(tags_of(mask_unsupported(sentence, vocab)) == tags_of(sentence));
}

TEST_CASE("mask_unsupported is idempotent and monotone") {
  const TagVocabulary vocab =
      build_vocabulary(corpus_with_counts({{"del", 5}, {"append_s", 5}}), 150, 2);
  const std::vector<TaggedSentence> cases = {
      tagged({"a", "b", "c", "d"}, {"del", "replace_rare", "append_s", "none"}),
      tagged({"a", "b"}, {"replace_rare", "replace_also_rare"}),
      tagged({"a", "b", "c"}, {"none", "none", "none"}),
      tagged({"a", "b", "c"}, {"unsupported", "del", "none"}),
  };
  for (const TaggedSentence& sentence : cases) {
    const TaggedSentence once = mask_unsupported(sentence, vocab);
    const TaggedSentence twice = mask_unsupported(once, vocab);
    CHECK(tags_of(once) == tags_of(twice));
    for (std::size_t i = 0; i < sentence.tags.size(); ++i) {
      if (sentence.tags[i].is_none()) CHECK(once.tags[i].is_none());
      if (once.tags[i].is_unsupported()) CHECK_FALSE(twice.tags[i].is_none());
    }
  }
}

TEST_CASE("vocabulary file round-trip") {
  const TagVocabulary vocab = build_vocabulary(
      corpus_with_counts({{"append_s", 40}, {"del", 10}, {"join", 3}}), 150, 2);
  std::stringstream buffer;
  write_vocabulary(buffer, vocab);
  const TagVocabulary reread = read_vocabulary(buffer);
  CHECK(reread.cutoff() == vocab.cutoff());
  CHECK(reread.min_count() == vocab.min_count());
  REQUIRE(reread.entries().size() == vocab.entries().size());
  for (std::size_t i = 0; i < vocab.entries().size(); ++i) {
    CHECK(reread.entries()[i].tag == vocab.entries()[i].tag);
    CHECK(reread.entries()[i].count == vocab.entries()[i].count);
  }
}

TEST_CASE("vocabulary reader validates entries") {
  {
    std::stringstream buffer("no header\n");
    CHECK_THROWS_AS(read_vocabulary(buffer), FormatError);
  }
  {
    // Invalid tag content keeps its parse error type.
    std::stringstream buffer("#cutoff=150 min_count=2\nnonesuch\t5\n");
    CHECK_THROWS_AS(read_vocabulary(buffer), ParseError);
  }
}

TEST_CASE("rank reflects vocabulary order") {
  const TagVocabulary vocab = build_vocabulary(
      corpus_with_counts({{"append_s", 40}, {"del", 10}}), 150, 2);
  CHECK(vocab.rank("append_s") < vocab.rank("del"));
  CHECK(vocab.rank("nonesuch") == TagVocabulary::npos);
}
