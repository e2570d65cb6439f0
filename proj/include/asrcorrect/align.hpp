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

#ifndef ASRCORRECT_ALIGN_HPP_
#define ASRCORRECT_ALIGN_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

namespace asrcorrect {

// Gestalt pattern matching: sequences are aligned by recursively taking the
// longest common block and descending into the gaps on both sides. Ties on
// block length resolve to the smallest start in `a`, then the smallest start
// in `b`, which makes the decomposition fully deterministic.

struct MatchBlock {
  std::size_t a_start = 0;
  std::size_t b_start = 0;
  std::size_t size = 0;

  bool operator==(const MatchBlock&) const = default;
};

enum class OpcodeKind { Equal, Replace, Delete, Insert };

struct Opcode {
  OpcodeKind kind = OpcodeKind::Equal;
  std::size_t a_start = 0;
  std::size_t a_end = 0;
  std::size_t b_start = 0;
  std::size_t b_end = 0;

  bool operator==(const Opcode&) const = default;
};

inline const char* to_string(OpcodeKind kind) {
  switch (kind) {
    case OpcodeKind::Equal: return "equal";
    case OpcodeKind::Replace: return "replace";
    case OpcodeKind::Delete: return "delete";
    case OpcodeKind::Insert: return "insert";
  }
  return "equal";
}

namespace detail {

// Longest common block of a[a_lo, a_hi) and b[b_lo, b_hi). The scan walks `a`
// left to right and, per element, the positions of that element in `b` in
// ascending order, keeping the first block that beats the current best. A
// strictly-greater test therefore lands on the smallest a_start and, within
// that, the smallest b_start. Size 0 means the windows share no element.
template <typename T>
MatchBlock longest_block_in_window(const std::vector<T>& a, const std::vector<T>& b,
                                   std::size_t a_lo, std::size_t a_hi,
                                   std::size_t b_lo, std::size_t b_hi) {
  std::map<T, std::vector<std::size_t>> b_positions;
  for (std::size_t j = b_lo; j < b_hi; ++j) b_positions[b[j]].push_back(j);

  MatchBlock best{a_lo, b_lo, 0};
  // lengths[j] = length of the common block ending at (previous i, j).
  std::unordered_map<std::size_t, std::size_t> lengths;
  std::unordered_map<std::size_t, std::size_t> next;
  for (std::size_t i = a_lo; i < a_hi; ++i) {
    next.clear();
    const auto hit = b_positions.find(a[i]);
    if (hit != b_positions.end()) {
      for (std::size_t j : hit->second) {
        std::size_t k = 1;
        if (j > b_lo) {
          const auto prev = lengths.find(j - 1);
          if (prev != lengths.end()) k = prev->second + 1;
        }
        next[j] = k;
        if (k > best.size) best = MatchBlock{i + 1 - k, j + 1 - k, k};
      }
    }
    std::swap(lengths, next);
  }
  return best;
}

}  // namespace detail

template <typename T>
MatchBlock longest_matching_block(const std::vector<T>& a, const std::vector<T>& b,
                                  std::size_t a_lo, std::size_t a_hi, std::size_t b_lo,
                                  std::size_t b_hi) {
  return detail::longest_block_in_window(a, b, a_lo, a_hi, b_lo, b_hi);
}

template <typename T>
MatchBlock longest_matching_block(const std::vector<T>& a, const std::vector<T>& b) {
  return detail::longest_block_in_window(a, b, 0, a.size(), 0, b.size());
}

// All maximal common blocks in order, adjacent blocks merged, terminated by
// the sentinel {a.size(), b.size(), 0}. The sentinel is the only block with
// size 0.
template <typename T>
std::vector<MatchBlock> matching_blocks(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<MatchBlock> found;
  std::vector<std::array<std::size_t, 4>> windows{{0, a.size(), 0, b.size()}};
  while (!windows.empty()) {
    const auto [a_lo, a_hi, b_lo, b_hi] = windows.back();
    windows.pop_back();
    const MatchBlock block = detail::longest_block_in_window(a, b, a_lo, a_hi, b_lo, b_hi);
    if (block.size == 0) continue;
    found.push_back(block);
    windows.push_back({a_lo, block.a_start, b_lo, block.b_start});
    windows.push_back({block.a_start + block.size, a_hi, block.b_start + block.size, b_hi});
  }
  std::sort(found.begin(), found.end(), [](const MatchBlock& x, const MatchBlock& y) {
    return x.a_start != y.a_start ? x.a_start < y.a_start : x.b_start < y.b_start;
  });

  std::vector<MatchBlock> merged;
  for (const MatchBlock& block : found) {
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

// Edit script from a to b. Opcodes tile both sequences in order, and no two
// adjacent opcodes share a kind: equal blocks are maximal and every gap
// between them is exactly one replace, delete, or insert.
template <typename T>
std::vector<Opcode> opcodes(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<Opcode> ops;
  std::size_t i = 0;
  std::size_t j = 0;
  for (const MatchBlock& block : matching_blocks(a, b)) {
    if (i < block.a_start && j < block.b_start) {
      ops.push_back({OpcodeKind::Replace, i, block.a_start, j, block.b_start});
    } else if (i < block.a_start) {
      ops.push_back({OpcodeKind::Delete, i, block.a_start, j, j});
    } else if (j < block.b_start) {
      ops.push_back({OpcodeKind::Insert, i, i, j, block.b_start});
    }
    if (block.size > 0) {
      ops.push_back({OpcodeKind::Equal, block.a_start, block.a_start + block.size,
                     block.b_start, block.b_start + block.size});
    }
    i = block.a_start + block.size;
    j = block.b_start + block.size;
  }
  return ops;
}

}  // namespace asrcorrect

#endif  // ASRCORRECT_ALIGN_HPP_
