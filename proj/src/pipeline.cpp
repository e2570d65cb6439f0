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

#include "asrcorrect/pipeline.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "asrcorrect/errors.hpp"
#include "asrcorrect/util/parallel.hpp"
#include "asrcorrect/util/rng.hpp"

#include "json.hpp"

namespace asrcorrect {

namespace {

namespace fs = std::filesystem;

std::string artifact_path(const std::string& dir, const char* name) {
  return (fs::path(dir) / name).string();
}

void write_lines(const std::string& path, const std::vector<std::string>& lines) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write: " + path);
  for (const std::string& line : lines) out << line << '\n';
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace

SplitSpec parse_ratio(const std::string& text, std::uint64_t seed) {
  std::array<double, 3> weights{};
  std::size_t field = 0;
  std::size_t start = 0;
  bool at_end = false;
  while (field < 3 && !at_end) {
    const auto colon = text.find(':', start);
    const std::string piece =
        colon == std::string::npos ? text.substr(start) : text.substr(start, colon - start);
    try {
      std::size_t consumed = 0;
      weights[field] = std::stod(piece, &consumed);
      if (consumed != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw FormatError("ratio: bad field '" + piece + "' in '" + text + "'");
    }
    ++field;
    at_end = colon == std::string::npos;
    if (!at_end) start = colon + 1;
  }
  if (field != 3 || !at_end) {
    throw FormatError("ratio must have three fields, e.g. 8:1:1, got: " + text);
  }
  for (double w : weights) {
    if (w < 0.0 || !std::isfinite(w)) throw FormatError("ratio weights must be non-negative: " + text);
  }
  if (weights[0] + weights[1] + weights[2] <= 0.0) {
    throw FormatError("ratio weights must not all be zero: " + text);
  }
  SplitSpec spec;
  spec.train_weight = weights[0];
  spec.dev_weight = weights[1];
  spec.test_weight = weights[2];
  spec.seed = seed;
  return spec;
}

SplitResult split_pairs(std::vector<CorrectionPair> pairs, const SplitSpec& spec) {
  const std::array<double, 3> weights = {spec.train_weight, spec.dev_weight, spec.test_weight};
  for (double w : weights) {
    if (w < 0.0 || !std::isfinite(w)) throw FormatError("split weights must be non-negative");
  }
  const double total = weights[0] + weights[1] + weights[2];
  if (total <= 0.0) throw FormatError("split weights must not all be zero");

  Rng rng(spec.seed);
  rng.shuffle(pairs);

  const std::size_t n = pairs.size();
  std::array<std::size_t, 3> counts{};
  std::array<double, 3> fractions{};
  std::size_t assigned = 0;
  for (std::size_t b = 0; b < 3; ++b) {
    const double exact = static_cast<double>(n) * weights[b] / total;
    counts[b] = static_cast<std::size_t>(std::floor(exact));
    fractions[b] = exact - std::floor(exact);
    assigned += counts[b];
  }
  // Largest remainder gets the leftover, ties toward the earlier bucket.
  std::array<std::size_t, 3> order = {0, 1, 2};
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return fractions[a] != fractions[b] ? fractions[a] > fractions[b] : a < b;
  });
  for (std::size_t k = 0; assigned < n; ++k, ++assigned) counts[order[k]] += 1;

  // Dev and test must not end up empty when they have weight and there is
  // enough data; borrow from the currently largest bucket.
  if (n >= 3) {
    for (std::size_t b : {std::size_t{1}, std::size_t{2}}) {
      if (weights[b] > 0.0 && counts[b] == 0) {
        std::size_t largest = 0;
        for (std::size_t c = 1; c < 3; ++c) {
          if (counts[c] > counts[largest]) largest = c;
        }
        counts[largest] -= 1;
        counts[b] += 1;
      }
    }
  }

  SplitResult result;
  auto cursor = pairs.begin();
  result.train.assign(cursor, cursor + static_cast<std::ptrdiff_t>(counts[0]));
  cursor += static_cast<std::ptrdiff_t>(counts[0]);
  result.dev.assign(cursor, cursor + static_cast<std::ptrdiff_t>(counts[1]));
  cursor += static_cast<std::ptrdiff_t>(counts[1]);
  result.test.assign(cursor, cursor + static_cast<std::ptrdiff_t>(counts[2]));
  return result;
}

std::vector<CorrectionPair> prepare_pairs(const std::vector<CorrectionPair>& raw,
                                          const NormalizationConfig& config, PrepareStats* stats) {
  PrepareStats local;
  std::vector<CorrectionPair> prepared;
  prepared.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const TokenSequence hyp = normalize(raw[i].hypothesis, config);
    if (hyp.empty()) {
      ++local.dropped_empty_hypothesis;
      continue;
    }
    const TokenSequence ref = normalize(raw[i].reference, config);
    CorrectionPair pair;
    pair.hypothesis = hyp.join();
    pair.reference = ref.join();
    if (raw[i].id.empty()) {
      char id[32];
      std::snprintf(id, sizeof(id), "pair-%06zu", i + 1);
      pair.id = id;
    } else {
      pair.id = raw[i].id;
    }
    prepared.push_back(std::move(pair));
  }
  if (stats != nullptr) *stats = local;
  return prepared;
}

std::vector<TaggedSentence> derive_dataset(const std::vector<CorrectionPair>& prepared,
                                           const DeriveOptions& options, std::size_t jobs) {
  std::vector<const CorrectionPair*> usable;
  usable.reserve(prepared.size());
  for (const CorrectionPair& pair : prepared) {
    if (!pair.hypothesis.empty()) usable.push_back(&pair);
  }
  std::vector<TaggedSentence> tagged(usable.size());
  parallel_for(usable.size(), jobs, [&](std::size_t i) {
    tagged[i] = derive_tags(tokens_from_string(usable[i]->hypothesis),
                            tokens_from_string(usable[i]->reference), options);
  });
  return tagged;
}

EvalReport run_end_to_end(const RunConfig& config) {
  if (config.output_dir.empty()) throw IoError("run: output directory not set");
  fs::create_directories(config.output_dir);

  // Ingest and prepare.
  IngestStats ingest_stats;
  const auto raw = read_pairs(config.input_path, config.strict, &ingest_stats);
  PrepareStats prepare_stats;
  const auto prepared = prepare_pairs(raw, config.normalization, &prepare_stats);
  if (prepared.empty()) {
    throw EmptyCorpus("run: every record was dropped during preparation");
  }
  if (ingest_stats.skipped > 0 || prepare_stats.dropped_empty_hypothesis > 0) {
    std::cerr << "run: skipped " << ingest_stats.skipped << " malformed and dropped "
              << prepare_stats.dropped_empty_hypothesis << " empty-hypothesis records\n";
  }
  save_pairs_jsonl(artifact_path(config.output_dir, "prepared.jsonl"), prepared);

  // Split.
  const SplitResult split = split_pairs(prepared, config.split);
  save_pairs_jsonl(artifact_path(config.output_dir, "train.jsonl"), split.train);
  save_pairs_jsonl(artifact_path(config.output_dir, "dev.jsonl"), split.dev);
  save_pairs_jsonl(artifact_path(config.output_dir, "test.jsonl"), split.test);
  if (split.train.empty() || split.test.empty()) {
    throw EmptyCorpus("run: the split left train or test empty");
  }

  // Derive and mask the training tags, build the vocabulary in between.
  const auto train_tagged = derive_dataset(split.train, config.derive, config.jobs);
  save_tagged_dataset(artifact_path(config.output_dir, "train.tags.tsv"), train_tagged);

  const TagVocabulary vocab = build_vocabulary(train_tagged, config.cutoff, config.min_count);
  save_vocabulary(artifact_path(config.output_dir, "vocab.tsv"), vocab);

  std::vector<TaggedSentence> masked(train_tagged.size());
  parallel_for(train_tagged.size(), config.jobs,
               [&](std::size_t i) { masked[i] = mask_unsupported(train_tagged[i], vocab); });
  save_tagged_dataset(artifact_path(config.output_dir, "train.masked.tsv"), masked);

  // Train.
  const BaselineModel model = train_baseline(masked, vocab);
  save_model(artifact_path(config.output_dir, "model.tsv"), model);

  // Tag the test split.
  std::vector<TokenSequence> test_hyp;
  std::vector<TokenSequence> test_ref;
  test_hyp.reserve(split.test.size());
  test_ref.reserve(split.test.size());
  for (const CorrectionPair& pair : split.test) {
    test_hyp.push_back(tokens_from_string(pair.hypothesis));
    test_ref.push_back(tokens_from_string(pair.reference));
  }
  {
    std::ofstream out(artifact_path(config.output_dir, "test.tokens.txt"));
    if (!out) throw IoError("cannot write test tokens");
    write_tokens_file(out, test_hyp);
  }

  std::vector<std::vector<ScoredTag>> scored(test_hyp.size());
  if (config.tagger == "baseline") {
    parallel_for(test_hyp.size(), config.jobs,
                 [&](std::size_t i) { scored[i] = predict(model, test_hyp[i]); });
  } else if (config.tagger == "oracle") {
    // Ground-truth tags restricted to the learned vocabulary: the best any
    // tagger with this vocabulary could do.
    parallel_for(test_hyp.size(), config.jobs, [&](std::size_t i) {
      const TaggedSentence truth =
          mask_unsupported(derive_tags(test_hyp[i], test_ref[i], config.derive), vocab);
      scored[i].reserve(truth.tags.size());
      for (const EditOp& tag : truth.tags) scored[i].push_back(ScoredTag{tag, 1.0});
    });
  } else if (config.tagger.starts_with("external:")) {
    scored = run_external_tagger(config.tagger.substr(9), test_hyp);
  } else {
    throw FormatError("run: unknown tagger '" + config.tagger +
                      "' (expected baseline, oracle, or external:<command>)");
  }
  {
    std::ofstream out(artifact_path(config.output_dir, "test.scored.tsv"));
    if (!out) throw IoError("cannot write scored tags");
    write_scored_file(out, test_hyp, scored);
  }

  // Correct.
  std::vector<TokenSequence> corrected(test_hyp.size());
  std::vector<CorrectionTrace> traces(test_hyp.size());
  parallel_for(test_hyp.size(), config.jobs, [&](std::size_t i) {
    auto [tokens, trace] = correct(test_hyp[i], scored[i], config.policy);
    corrected[i] = std::move(tokens);
    traces[i] = std::move(trace);
  });
  {
    std::vector<std::string> lines;
    lines.reserve(corrected.size());
    for (const TokenSequence& sentence : corrected) lines.push_back(sentence.join());
    write_lines(artifact_path(config.output_dir, "test.corrected.txt"), lines);
  }
  if (config.write_trace) {
    std::ofstream out(artifact_path(config.output_dir, "test.trace.jsonl"));
    if (!out) throw IoError("cannot write trace");
    for (std::size_t s = 0; s < traces.size(); ++s) {
      for (std::size_t i = 0; i < traces[s].records.size(); ++i) {
        const TraceRecord& record = traces[s].records[i];
        nlohmann::json j;
        j["sentence"] = s;
        j["index"] = i;
        j["token"] = record.token;
        j["tag"] = format_tag(record.proposed);
        j["score"] = record.score;
        j["action"] = to_string(record.action);
        out << j.dump() << '\n';
      }
    }
  }

  // Evaluate.
  std::vector<EvalTriple> triples;
  triples.reserve(test_hyp.size());
  for (std::size_t i = 0; i < test_hyp.size(); ++i) {
    triples.push_back(EvalTriple{test_ref[i], test_hyp[i], corrected[i]});
  }
  const EvalReport report = evaluate_corpus(triples);
  {
    std::ofstream out(artifact_path(config.output_dir, "report.json"));
    if (!out) throw IoError("cannot write report.json");
    out << report_to_json(report);
  }
  {
    std::ofstream out(artifact_path(config.output_dir, "report.txt"));
    if (!out) throw IoError("cannot write report.txt");
    out << report_to_table(report);
  }
  return report;
}

}  // namespace asrcorrect
