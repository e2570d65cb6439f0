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

#include "asrcorrect/vocab.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "asrcorrect/errors.hpp"

namespace asrcorrect {

namespace {

constexpr std::string_view kNoneTag = "none";
constexpr std::string_view kUnsupportedTag = "unsupported";

bool is_structural(std::string_view tag) { return tag == kNoneTag || tag == kUnsupportedTag; }

void sort_entries(std::vector<TagVocabulary::Entry>& entries) {
  std::sort(entries.begin(), entries.end(),
            [](const TagVocabulary::Entry& a, const TagVocabulary::Entry& b) {
              return a.count != b.count ? a.count > b.count : a.tag < b.tag;
            });
}

}  // namespace

TagVocabulary::TagVocabulary(std::vector<Entry> entries, std::size_t cutoff, std::size_t min_count)
    : entries_(std::move(entries)), cutoff_(cutoff), min_count_(min_count) {
  // Structural tags are members even if the builder or file omitted them.
  for (const std::string_view tag : {kNoneTag, kUnsupportedTag}) {
    const bool present = std::any_of(entries_.begin(), entries_.end(),
                                     [&](const Entry& e) { return e.tag == tag; });
    if (!present) entries_.push_back(Entry{std::string(tag), 0});
  }
  sort_entries(entries_);
  for (std::size_t i = 0; i < entries_.size(); ++i) ranks_[entries_[i].tag] = i;
  if (ranks_.size() != entries_.size()) throw FormatError("vocabulary contains a duplicate tag");
}

bool TagVocabulary::contains(std::string_view tag) const {
  if (is_structural(tag)) return true;
  return ranks_.find(tag) != ranks_.end();
}

std::size_t TagVocabulary::rank(std::string_view tag) const {
  const auto it = ranks_.find(tag);
  return it == ranks_.end() ? npos : it->second;
}

std::map<std::string, std::uint64_t> count_tags(const std::vector<TaggedSentence>& corpus) {
  std::map<std::string, std::uint64_t> counts;
  for (const TaggedSentence& sentence : corpus) {
    for (const EditOp& tag : sentence.tags) {
      if (tag.is_none()) continue;
      ++counts[format_tag(tag)];
    }
  }
  return counts;
}

double singleton_fraction(const std::map<std::string, std::uint64_t>& counts) {
  if (counts.empty()) return 0.0;
  std::size_t singletons = 0;
  for (const auto& [tag, count] : counts) {
    if (count == 1) ++singletons;
  }
  return static_cast<double>(singletons) / static_cast<double>(counts.size());
}

TagVocabulary build_vocabulary(const std::vector<TaggedSentence>& corpus, std::size_t cutoff,
                               std::size_t min_count) {
  if (corpus.empty()) throw EmptyCorpus("build_vocabulary: corpus is empty");
  const auto counts = count_tags(corpus);

  std::vector<TagVocabulary::Entry> candidates;
  std::uint64_t unsupported_count = 0;
  for (const auto& [tag, count] : counts) {
    if (tag == kUnsupportedTag) {
      unsupported_count = count;
      continue;
    }
    if (count >= min_count) candidates.push_back({tag, count});
  }
  sort_entries(candidates);
  if (candidates.size() > cutoff) candidates.resize(cutoff);

  candidates.push_back({std::string(kNoneTag), 0});
  candidates.push_back({std::string(kUnsupportedTag), unsupported_count});
  return TagVocabulary(std::move(candidates), cutoff, min_count);
}

TaggedSentence mask_unsupported(const TaggedSentence& sentence, const TagVocabulary& vocab) {
  if (sentence.tokens.size() != sentence.tags.size()) {
    throw LengthMismatch("mask_unsupported: tokens and tags differ in length");
  }
  TaggedSentence masked = sentence;
  for (EditOp& tag : masked.tags) {
    if (!tag.is_none() && !vocab.contains(tag)) tag = EditOp::unsupported();
  }
  // Widen each unsupported tag across its maximal run of non-none neighbors.
  const std::size_t n = masked.tags.size();
  std::size_t i = 0;
  while (i < n) {
    if (masked.tags[i].is_none()) {
      ++i;
      continue;
    }
    std::size_t end = i;
    bool tainted = false;
    while (end < n && !masked.tags[end].is_none()) {
      tainted = tainted || masked.tags[end].is_unsupported();
      ++end;
    }
    if (tainted) {
      for (std::size_t k = i; k < end; ++k) masked.tags[k] = EditOp::unsupported();
    }
    i = end;
  }
  return masked;
}

void write_vocabulary(std::ostream& out, const TagVocabulary& vocab) {
  out << "#cutoff=" << vocab.cutoff() << " min_count=" << vocab.min_count() << '\n';
  for (const auto& entry : vocab.entries()) {
    out << entry.tag << '\t' << entry.count << '\n';
  }
}

TagVocabulary read_vocabulary(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("vocabulary file is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::size_t cutoff = 0;
  std::size_t min_count = 0;
  {
    std::istringstream header(line);
    std::string cutoff_field;
    std::string min_field;
    header >> cutoff_field >> min_field;
    const std::string_view cutoff_prefix = "#cutoff=";
    const std::string_view min_prefix = "min_count=";
    if (!cutoff_field.starts_with(cutoff_prefix) || !min_field.starts_with(min_prefix)) {
      throw FormatError("vocabulary header must be '#cutoff=<K> min_count=<m>', got: " + line);
    }
    try {
      cutoff = std::stoul(cutoff_field.substr(cutoff_prefix.size()));
      min_count = std::stoul(min_field.substr(min_prefix.size()));
    } catch (const std::exception&) {
      throw FormatError("vocabulary header has non-numeric fields: " + line);
    }
  }

  std::vector<TagVocabulary::Entry> entries;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw FormatError("line " + std::to_string(line_number) + ": expected tag<TAB>count");
    }
    TagVocabulary::Entry entry;
    entry.tag = line.substr(0, tab);
    try {
      entry.count = std::stoull(line.substr(tab + 1));
    } catch (const std::exception&) {
      throw FormatError("line " + std::to_string(line_number) + ": bad count");
    }
    // Every entry must be a valid tag; this keeps the closed world closed.
    if (!is_structural(entry.tag)) parse_tag(entry.tag);
    entries.push_back(std::move(entry));
  }
  return TagVocabulary(std::move(entries), cutoff, min_count);
}

void save_vocabulary(const std::string& path, const TagVocabulary& vocab) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write: " + path);
  write_vocabulary(out, vocab);
  if (!out) throw IoError("write failed: " + path);
}

TagVocabulary load_vocabulary(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  return read_vocabulary(in);
}

}  // namespace asrcorrect
