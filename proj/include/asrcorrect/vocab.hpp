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

#ifndef ASRCORRECT_VOCAB_HPP_
#define ASRCORRECT_VOCAB_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "asrcorrect/editops.hpp"

namespace asrcorrect {

inline constexpr std::size_t kDefaultCutoff = 150;
inline constexpr std::size_t kDefaultMinCount = 2;

// Closed tag set a tagger may emit. "none" and "unsupported" are structural:
// always members, never charged against the cutoff budget.
class TagVocabulary {
 public:
  struct Entry {
    std::string tag;
    std::uint64_t count = 0;

    bool operator==(const Entry&) const = default;
  };

  TagVocabulary() = default;
  TagVocabulary(std::vector<Entry> entries, std::size_t cutoff, std::size_t min_count);

  bool contains(std::string_view tag) const;
  bool contains(const EditOp& op) const { return contains(format_tag(op)); }

  // Position in the frequency ordering (structural tags included); used to
  // break prediction ties toward the more frequent tag. npos when absent.
  std::size_t rank(std::string_view tag) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // Entries sorted by count descending, then tag ascending.
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t cutoff() const { return cutoff_; }
  std::size_t min_count() const { return min_count_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<Entry> entries_;
  std::map<std::string, std::size_t, std::less<>> ranks_;
  std::size_t cutoff_ = kDefaultCutoff;
  std::size_t min_count_ = kDefaultMinCount;
};

// Occurrences of every serialized tag except "none" across the corpus.
std::map<std::string, std::uint64_t> count_tags(const std::vector<TaggedSentence>& corpus);

// Fraction of distinct counted tags that occur exactly once.
double singleton_fraction(const std::map<std::string, std::uint64_t>& counts);

// Keeps the `cutoff` most frequent non-structural tags with count >=
// min_count (ties broken by tag text ascending) and adds the structural
// tags on top.
TagVocabulary build_vocabulary(const std::vector<TaggedSentence>& corpus,
                               std::size_t cutoff = kDefaultCutoff,
                               std::size_t min_count = kDefaultMinCount);

// Replaces out-of-vocabulary tags with "unsupported", then widens every
// "unsupported" to cover its whole contiguous run of non-none tags: a run
// that is only partially learnable is not learnable at all.
TaggedSentence mask_unsupported(const TaggedSentence& sentence, const TagVocabulary& vocab);

// Vocabulary file: "#cutoff=<K> min_count=<m>" header, then "tag<TAB>count"
// lines in entry order.
void write_vocabulary(std::ostream& out, const TagVocabulary& vocab);
TagVocabulary read_vocabulary(std::istream& in);
void save_vocabulary(const std::string& path, const TagVocabulary& vocab);
TagVocabulary load_vocabulary(const std::string& path);

}  // namespace asrcorrect

#endif  // ASRCORRECT_VOCAB_HPP_
