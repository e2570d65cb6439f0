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

#include "asrcorrect/corpus.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "asrcorrect/errors.hpp"

#include "json.hpp"

namespace asrcorrect {

namespace {

bool ends_with_any(const std::string& path, std::initializer_list<const char*> suffixes) {
  for (const char* suffix : suffixes) {
    const std::string_view s(suffix);
    if (path.size() >= s.size() && std::string_view(path).substr(path.size() - s.size()) == s) {
      return true;
    }
  }
  return false;
}

[[noreturn]] void fail_record(std::size_t line_number, const std::string& what) {
  throw FormatError("record at line " + std::to_string(line_number) + ": " + what);
}

void finish(std::vector<CorrectionPair>& pairs, IngestStats* stats, const IngestStats& local) {
  if (stats != nullptr) *stats = local;
  if (pairs.empty()) throw EmptyCorpus("corpus has no valid records");
}

}  // namespace

std::vector<CorrectionPair> read_pairs_jsonl(std::istream& in, bool strict, IngestStats* stats) {
  std::vector<CorrectionPair> pairs;
  IngestStats local;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    CorrectionPair pair;
    try {
      const auto record = nlohmann::json::parse(line);
      if (!record.is_object() || !record.contains("hypothesis") || !record.contains("reference") ||
          !record["hypothesis"].is_string() || !record["reference"].is_string()) {
        throw FormatError("expected an object with string 'hypothesis' and 'reference'");
      }
      pair.hypothesis = record["hypothesis"].get<std::string>();
      pair.reference = record["reference"].get<std::string>();
      if (record.contains("id")) {
        if (!record["id"].is_string()) throw FormatError("'id' must be a string");
        pair.id = record["id"].get<std::string>();
      }
    } catch (const std::exception& e) {
      if (strict) fail_record(line_number, e.what());
      ++local.skipped;
      continue;
    }
    ++local.read;
    pairs.push_back(std::move(pair));
  }
  finish(pairs, stats, local);
  return pairs;
}

std::vector<CorrectionPair> read_pairs_tsv(std::istream& in, bool strict, IngestStats* stats) {
  std::vector<CorrectionPair> pairs;
  IngestStats local;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab1 = line.find('\t');
    const auto tab2 = tab1 == std::string::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab1 == std::string::npos || tab2 != std::string::npos) {
      if (strict) fail_record(line_number, "expected exactly hypothesis<TAB>reference");
      ++local.skipped;
      continue;
    }
    CorrectionPair pair;
    pair.hypothesis = line.substr(0, tab1);
    pair.reference = line.substr(tab1 + 1);
    ++local.read;
    pairs.push_back(std::move(pair));
  }
  finish(pairs, stats, local);
  return pairs;
}

std::vector<CorrectionPair> read_pairs(const std::string& path, bool strict, IngestStats* stats) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus: " + path);
  if (ends_with_any(path, {".jsonl", ".json", ".ndjson"})) {
    return read_pairs_jsonl(in, strict, stats);
  }
  return read_pairs_tsv(in, strict, stats);
}

void write_pairs_jsonl(std::ostream& out, const std::vector<CorrectionPair>& pairs) {
  for (const CorrectionPair& pair : pairs) {
    nlohmann::json record;
    record["hypothesis"] = pair.hypothesis;
    if (!pair.id.empty()) record["id"] = pair.id;
    record["reference"] = pair.reference;
    out << record.dump() << '\n';
  }
}

void save_pairs_jsonl(const std::string& path, const std::vector<CorrectionPair>& pairs) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write: " + path);
  write_pairs_jsonl(out, pairs);
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace asrcorrect
