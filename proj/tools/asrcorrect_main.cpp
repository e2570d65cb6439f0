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
//
// Command line front end. Subcommands mirror the pipeline stages so any
// stage can be rerun or swapped in isolation; `run` chains all of them.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "asrcorrect/corpus.hpp"
#include "asrcorrect/corrector.hpp"
#include "asrcorrect/editops.hpp"
#include "asrcorrect/errors.hpp"
#include "asrcorrect/eval.hpp"
#include "asrcorrect/keyvalue.hpp"
#include "asrcorrect/normalize.hpp"
#include "asrcorrect/pipeline.hpp"
#include "asrcorrect/synthetic.hpp"
#include "asrcorrect/tagger.hpp"
#include "asrcorrect/util/parallel.hpp"
#include "asrcorrect/vocab.hpp"

#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using namespace asrcorrect;

std::string join_path(const std::string& dir, const char* name) {
  return (fs::path(dir) / name).string();
}

void ensure_dir(const std::string& dir) {
  if (dir.empty()) throw IoError("output directory not set");
  fs::create_directories(dir);
}

bool has_extension(const std::string& path, std::initializer_list<const char*> exts) {
  const std::string ext = fs::path(path).extension().string();
  for (const char* candidate : exts) {
    if (ext == candidate) return true;
  }
  return false;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

NormalizationConfig normalization_from_path(const std::string& config_path) {
  if (config_path.empty()) return NormalizationConfig{};
  return normalization_config_from(KeyValueFile::load(config_path));
}

DeriveOptions derive_options_from(const KeyValueFile& file) {
  DeriveOptions options;
  if (file.has("join_separators")) {
    options.join_separators.clear();
    const std::string raw = file.get_string("join_separators");
    std::string current;
    for (char c : raw) {
      if ((static_cast<unsigned char>(c) & 0xC0) != 0x80 && !current.empty()) {
        options.join_separators.push_back(current);
        current.clear();
      }
      current.push_back(c);
    }
    if (!current.empty()) options.join_separators.push_back(current);
  }
  return options;
}

// Pairs (.jsonl) are normalized and tag-derived; a .tsv is read back as an
// already tagged dataset.
std::vector<TaggedSentence> tagged_from_input(const std::string& input, const std::string& config_path,
                                              bool strict, std::size_t jobs,
                                              std::vector<CorrectionPair>* prepared_out = nullptr) {
  if (has_extension(input, {".tsv", ".tags"})) {
    return load_tagged_dataset(input);
  }
  const auto raw = read_pairs(input, strict);
  NormalizationConfig norm;
  DeriveOptions derive;
  if (!config_path.empty()) {
    const KeyValueFile file = KeyValueFile::load(config_path);
    norm = normalization_config_from(file);
    derive = derive_options_from(file);
  }
  const auto prepared = prepare_pairs(raw, norm);
  if (prepared.empty()) throw EmptyCorpus("no usable pairs after preparation");
  if (prepared_out != nullptr) *prepared_out = prepared;
  return derive_dataset(prepared, derive, jobs);
}

struct CommonFlags {
  std::string input;
  std::string output_dir;
  std::string config;
  bool strict = false;
  std::size_t jobs = 1;
};

int command_prepare(const CommonFlags& common) {
  ensure_dir(common.output_dir);
  IngestStats ingest;
  const auto raw = read_pairs(common.input, common.strict, &ingest);
  PrepareStats stats;
  const auto prepared = prepare_pairs(raw, normalization_from_path(common.config), &stats);
  if (prepared.empty()) throw EmptyCorpus("no usable pairs after preparation");
  save_pairs_jsonl(join_path(common.output_dir, "prepared.jsonl"), prepared);
  std::cout << "read " << ingest.read << " records, skipped " << ingest.skipped
            << " malformed, dropped " << stats.dropped_empty_hypothesis
            << " empty hypotheses, wrote " << prepared.size() << " pairs\n";
  return 0;
}

int command_split(const CommonFlags& common, const std::string& ratio, std::uint64_t seed) {
  ensure_dir(common.output_dir);
  const auto pairs = read_pairs(common.input, /*strict=*/true);
  const SplitSpec spec = parse_ratio(ratio, seed);
  const SplitResult split = split_pairs(pairs, spec);
  save_pairs_jsonl(join_path(common.output_dir, "train.jsonl"), split.train);
  save_pairs_jsonl(join_path(common.output_dir, "dev.jsonl"), split.dev);
  save_pairs_jsonl(join_path(common.output_dir, "test.jsonl"), split.test);
  std::cout << "train " << split.train.size() << ", dev " << split.dev.size() << ", test "
            << split.test.size() << '\n';
  return 0;
}

int command_vocab(const CommonFlags& common, std::size_t cutoff, std::size_t min_count) {
  ensure_dir(common.output_dir);
  std::vector<CorrectionPair> prepared;
  const auto tagged = tagged_from_input(common.input, common.config, common.strict, common.jobs, &prepared);
  if (!prepared.empty()) {
    save_tagged_dataset(join_path(common.output_dir, "tags.tsv"), tagged);
  }
  const TagVocabulary vocab = build_vocabulary(tagged, cutoff, min_count);
  save_vocabulary(join_path(common.output_dir, "vocab.tsv"), vocab);
  const auto counts = count_tags(tagged);
  std::cout << "distinct tags " << counts.size() << ", singleton fraction "
            << singleton_fraction(counts) << ", vocabulary size " << vocab.size() << '\n';
  return 0;
}

int command_train(const CommonFlags& common, const std::string& vocab_path) {
  ensure_dir(common.output_dir);
  const auto tagged = tagged_from_input(common.input, common.config, common.strict, common.jobs);
  const TagVocabulary vocab = load_vocabulary(vocab_path);
  std::vector<TaggedSentence> masked(tagged.size());
  parallel_for(tagged.size(), common.jobs,
               [&](std::size_t i) { masked[i] = mask_unsupported(tagged[i], vocab); });
  save_tagged_dataset(join_path(common.output_dir, "masked.tsv"), masked);
  const BaselineModel model = train_baseline(masked, vocab);
  save_model(join_path(common.output_dir, "model.tsv"), model);
  std::cout << "context cells " << model.context_table.size() << ", token cells "
            << model.token_table.size() << '\n';
  return 0;
}

int command_tag(const CommonFlags& common, const std::string& model_path, const std::string& tagger) {
  ensure_dir(common.output_dir);
  std::vector<TokenSequence> sentences;
  if (has_extension(common.input, {".jsonl", ".json", ".ndjson"})) {
    for (const CorrectionPair& pair : read_pairs(common.input, common.strict)) {
      sentences.push_back(tokens_from_string(pair.hypothesis));
    }
  } else {
    std::ifstream in(common.input);
    if (!in) throw IoError("cannot open: " + common.input);
    sentences = read_tokens_file(in);
  }

  std::vector<std::vector<ScoredTag>> scored(sentences.size());
  if (tagger == "baseline") {
    if (model_path.empty()) throw FormatError("tag: --model is required with the baseline tagger");
    const BaselineModel model = load_model(model_path);
    parallel_for(sentences.size(), common.jobs,
                 [&](std::size_t i) { scored[i] = predict(model, sentences[i]); });
  } else if (tagger.starts_with("external:")) {
    scored = run_external_tagger(tagger.substr(9), sentences);
  } else {
    throw FormatError("tag: unknown tagger '" + tagger + "' (expected baseline or external:<command>)");
  }

  std::ofstream out(join_path(common.output_dir, "scored.tsv"));
  if (!out) throw IoError("cannot write scored.tsv");
  write_scored_file(out, sentences, scored);
  std::cout << "tagged " << sentences.size() << " sentences\n";
  return 0;
}

int command_correct(const CommonFlags& common, const std::string& policy_path, double threshold,
                    bool threshold_set, bool trace) {
  ensure_dir(common.output_dir);
  const ScoredDataset data = load_scored_dataset(common.input);
  CorrectionPolicy policy;
  if (!policy_path.empty()) policy = policy_from_file(policy_path);
  if (threshold_set) policy.score_threshold = threshold;

  std::vector<TokenSequence> corrected(data.sentences.size());
  std::vector<CorrectionTrace> traces(data.sentences.size());
  parallel_for(data.sentences.size(), common.jobs, [&](std::size_t i) {
    auto [tokens, sentence_trace] = correct(data.sentences[i], data.scored[i], policy);
    corrected[i] = std::move(tokens);
    traces[i] = std::move(sentence_trace);
  });

  {
    std::ofstream out(join_path(common.output_dir, "corrected.txt"));
    if (!out) throw IoError("cannot write corrected.txt");
    for (const TokenSequence& sentence : corrected) out << sentence.join() << '\n';
  }
  std::size_t applied = 0;
  for (const CorrectionTrace& t : traces) applied += t.applied_count();
  if (trace) {
    std::ofstream out(join_path(common.output_dir, "trace.jsonl"));
    if (!out) throw IoError("cannot write trace.jsonl");
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
  std::cout << "corrected " << corrected.size() << " sentences, applied " << applied << " edits\n";
  return 0;
}

int command_eval(const CommonFlags& common, const std::string& refs_path, const std::string& hyps_path,
                 const std::string& corrected_path) {
  ensure_dir(common.output_dir);
  std::vector<EvalTriple> triples;
  if (!common.input.empty()) {
    const auto pairs = read_pairs(common.input, /*strict=*/true);
    const auto corrected_lines = read_lines(corrected_path);
    if (pairs.size() != corrected_lines.size()) {
      throw LengthMismatch("eval: " + std::to_string(pairs.size()) + " pairs vs " +
                           std::to_string(corrected_lines.size()) + " corrected lines");
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      triples.push_back(EvalTriple{tokens_from_string(pairs[i].reference),
                                   tokens_from_string(pairs[i].hypothesis),
                                   tokens_from_string(corrected_lines[i])});
    }
  } else {
    const auto refs = read_lines(refs_path);
    const auto hyps = read_lines(hyps_path);
    const auto corr = read_lines(corrected_path);
    if (refs.size() != hyps.size() || refs.size() != corr.size()) {
      throw LengthMismatch("eval: line counts differ (refs " + std::to_string(refs.size()) +
                           ", hyps " + std::to_string(hyps.size()) + ", corrected " +
                           std::to_string(corr.size()) + ")");
    }
    for (std::size_t i = 0; i < refs.size(); ++i) {
      triples.push_back(EvalTriple{tokens_from_string(refs[i]), tokens_from_string(hyps[i]),
                                   tokens_from_string(corr[i])});
    }
  }
  const EvalReport report = evaluate_corpus(triples);
  {
    std::ofstream out(join_path(common.output_dir, "report.json"));
    if (!out) throw IoError("cannot write report.json");
    out << report_to_json(report);
  }
  {
    std::ofstream out(join_path(common.output_dir, "report.txt"));
    if (!out) throw IoError("cannot write report.txt");
    out << report_to_table(report);
  }
  std::cout << report_to_table(report);
  return 0;
}

int command_synth(const CommonFlags& common, const std::string& refs_path, std::size_t sentences,
                  double error_rate, std::uint64_t seed) {
  ensure_dir(common.output_dir);
  std::vector<TokenSequence> references;
  if (!refs_path.empty()) {
    for (const std::string& line : read_lines(refs_path)) {
      const TokenSequence tokens = tokens_from_string(line);
      if (!tokens.empty()) references.push_back(tokens);
    }
    if (references.empty()) throw EmptyCorpus("synth: reference file has no sentences");
  } else {
    references = generate_reference_corpus(sentences, seed);
    std::ofstream out(join_path(common.output_dir, "references.txt"));
    if (!out) throw IoError("cannot write references.txt");
    for (const TokenSequence& sentence : references) out << sentence.join() << '\n';
  }
  SyntheticSpec spec;
  spec.error_rate = error_rate;
  const auto pairs = generate_synthetic(references, spec, seed);
  save_pairs_jsonl(join_path(common.output_dir, "synthetic.jsonl"), pairs);
  std::cout << "wrote " << pairs.size() << " synthetic pairs\n";
  return 0;
}

struct RunFlags {
  CommonFlags common;
  std::string ratio = "8:1:1";
  std::uint64_t seed = kDefaultSeed;
  std::size_t cutoff = kDefaultCutoff;
  std::size_t min_count = kDefaultMinCount;
  double threshold = 0.0;
  std::string policy;
  std::string tagger = "baseline";
  bool trace = false;
};

int command_run(const RunFlags& flags, const CLI::App* cmd) {
  RunConfig config;

  // Config file first, explicit flags override below.
  if (!flags.common.config.empty()) {
    const KeyValueFile file = KeyValueFile::load(flags.common.config);
    config.input_path = file.get_string("input", config.input_path);
    config.output_dir = file.get_string("output_dir", config.output_dir);
    config.split = parse_ratio(file.get_string("ratio", "8:1:1"),
                               static_cast<std::uint64_t>(file.get_int("seed", kDefaultSeed)));
    config.cutoff = static_cast<std::size_t>(file.get_int("cutoff", static_cast<std::int64_t>(kDefaultCutoff)));
    config.min_count =
        static_cast<std::size_t>(file.get_int("min_count", static_cast<std::int64_t>(kDefaultMinCount)));
    config.tagger = file.get_string("tagger", config.tagger);
    config.strict = file.get_bool("strict", config.strict);
    config.write_trace = file.get_bool("trace", config.write_trace);
    config.jobs = static_cast<std::size_t>(file.get_int("jobs", 1));
    const std::string policy_path = file.get_string("policy", "");
    if (!policy_path.empty()) config.policy = policy_from_file(policy_path);
    config.policy.score_threshold = file.get_double("threshold", config.policy.score_threshold);
    config.normalization = normalization_config_from(file);
    config.derive = derive_options_from(file);
  }

  auto given = [&](const char* name) { return cmd->count(name) > 0; };
  if (given("--input")) config.input_path = flags.common.input;
  if (given("--output-dir")) config.output_dir = flags.common.output_dir;
  if (given("--ratio") || flags.common.config.empty()) {
    config.split = parse_ratio(flags.ratio, config.split.seed);
  }
  if (given("--seed") || flags.common.config.empty()) config.split.seed = flags.seed;
  if (given("--cutoff")) config.cutoff = flags.cutoff;
  if (given("--min-count")) config.min_count = flags.min_count;
  if (given("--tagger")) config.tagger = flags.tagger;
  if (given("--strict")) config.strict = true;
  if (given("--trace")) config.write_trace = true;
  if (given("--jobs")) config.jobs = flags.common.jobs;
  if (given("--policy")) config.policy = policy_from_file(flags.policy);
  if (given("--threshold")) config.policy.score_threshold = flags.threshold;

  if (config.input_path.empty()) throw FormatError("run: no input corpus given");
  if (config.output_dir.empty()) throw FormatError("run: no output directory given");

  const auto started = std::chrono::steady_clock::now();
  const EvalReport report = run_end_to_end(config);
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
  std::cout << report_to_table(report);
  std::cout << "elapsed            " << elapsed.count() << " ms\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word-level edit correction for speech recognizer output"};
  app.require_subcommand(1);

  CommonFlags common;
  // prepare
  auto* prepare_cmd = app.add_subcommand("prepare", "Normalize a raw corpus into prepared pairs");
  prepare_cmd->add_option("--input", common.input, "Corpus file (.jsonl or .tsv)")->required();
  prepare_cmd->add_option("--output-dir", common.output_dir, "Artifact directory")->required();
  prepare_cmd->add_option("--config", common.config, "Normalization config file");
  prepare_cmd->add_flag("--strict", common.strict, "Fail on malformed records");

  // split
  std::string ratio = "8:1:1";
  std::uint64_t seed = kDefaultSeed;
  auto* split_cmd = app.add_subcommand("split", "Shuffle and split prepared pairs");
  split_cmd->add_option("--input", common.input, "Prepared pairs (.jsonl)")->required();
  split_cmd->add_option("--output-dir", common.output_dir, "Artifact directory")->required();
  split_cmd->add_option("--ratio", ratio, "train:dev:test weights");
  split_cmd->add_option("--seed", seed, "Shuffle seed");

  // vocab
  std::size_t cutoff = kDefaultCutoff;
  std::size_t min_count = kDefaultMinCount;
  auto* vocab_cmd = app.add_subcommand("vocab", "Build the tag vocabulary");
  vocab_cmd->add_option("--input", common.input, "Pairs (.jsonl) or tagged dataset (.tsv)")->required();
  vocab_cmd->add_option("--output-dir", common.output_dir, "Artifact directory")->required();
  vocab_cmd->add_option("--cutoff", cutoff, "Maximum learnable tags");
  vocab_cmd->add_option("--min-count", min_count, "Minimum occurrences to keep a tag");
  vocab_cmd->add_option("--config", common.config, "Normalization config file");
  vocab_cmd->add_flag("--strict", common.strict, "Fail on malformed records");
  vocab_cmd->add_option("--jobs", common.jobs, "Worker threads");

  // train
  std::string vocab_path;
  auto* train_cmd = app.add_subcommand("train", "Train the baseline tagger");
  train_cmd->add_option("--input", common.input, "Pairs (.jsonl) or tagged dataset (.tsv)")->required();
  train_cmd->add_option("--vocab", vocab_path, "Vocabulary file")->required();
  train_cmd->add_option("--output-dir", common.output_dir, "Artifact directory")->required();
  train_cmd->add_option("--config", common.config, "Normalization config file");
  train_cmd->add_flag("--strict", common.strict, "Fail on malformed records");
  train_cmd->add_option("--jobs", common.jobs, "Worker threads");

  // tag
  std::string model_path;
  std::string tagger = "baseline";
  auto* tag_cmd = app.add_subcommand("tag", "Propose scored tags for sentences");
  tag_cmd->add_option("--input", common.input, "Pairs (.jsonl) or token lines (.txt)")->required();
  tag_cmd->add_option("--output-dir", common.output_dir, "Artifact directory")->required();
  tag_cmd->add_option("--model", model_path, "Baseline model file");
  tag_cmd->add_option("--tagger", tagger, "baseline or external:<command>");
  tag_cmd->add_flag("--strict", common.strict, "Fail on malformed records");
  tag_cmd->add_option("--jobs", common.jobs, "Worker threads");

  // correct
  std::string policy_path;
  double threshold = 0.0;
  bool trace = false;
  auto* correct_cmd = app.add_subcommand("correct", "Apply scored tags under a policy");
  correct_cmd->add_option("--input", common.input, "Scored tags (.tsv)")->required();
  correct_cmd->add_option("--output-dir", common.output_dir, "Artifact directory")->required();
  correct_cmd->add_option("--policy", policy_path, "Policy file");
  auto* threshold_opt = correct_cmd->add_option("--threshold", threshold, "Score threshold");
  correct_cmd->add_flag("--trace", trace, "Write per-token decisions");
  correct_cmd->add_option("--jobs", common.jobs, "Worker threads");

  // eval
  std::string refs_path;
  std::string hyps_path;
  std::string corrected_path;
  auto* eval_cmd = app.add_subcommand("eval", "Score corrected output against references");
  eval_cmd->add_option("--input", common.input, "Pairs (.jsonl) holding refs and hyps");
  eval_cmd->add_option("--refs", refs_path, "Reference sentences, one per line");
  eval_cmd->add_option("--hyps", hyps_path, "Recognizer sentences, one per line");
  eval_cmd->add_option("--corrected", corrected_path, "Corrected sentences, one per line")->required();
  eval_cmd->add_option("--output-dir", common.output_dir, "Artifact directory")->required();

  // synth
  std::string synth_refs;
  std::size_t synth_sentences = 1000;
  double error_rate = 1.2;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic correction corpus");
  synth_cmd->add_option("--refs", synth_refs, "Reference sentences, one per line");
  synth_cmd->add_option("--sentences", synth_sentences, "Generate this many references");
  synth_cmd->add_option("--error-rate", error_rate, "Mean injected errors per sentence");
  synth_cmd->add_option("--seed", seed, "Generator seed");
  synth_cmd->add_option("--output-dir", common.output_dir, "Artifact directory")->required();

  // run
  RunFlags run_flags;
  auto* run_cmd = app.add_subcommand("run", "Full pipeline: prepare through eval");
  run_cmd->add_option("--input", run_flags.common.input, "Corpus file (.jsonl or .tsv)");
  run_cmd->add_option("--output-dir", run_flags.common.output_dir, "Artifact directory");
  run_cmd->add_option("--config", run_flags.common.config, "Run config file");
  run_cmd->add_option("--ratio", run_flags.ratio, "train:dev:test weights");
  run_cmd->add_option("--seed", run_flags.seed, "Shuffle seed");
  run_cmd->add_option("--cutoff", run_flags.cutoff, "Maximum learnable tags");
  run_cmd->add_option("--min-count", run_flags.min_count, "Minimum occurrences to keep a tag");
  run_cmd->add_option("--threshold", run_flags.threshold, "Score threshold");
  run_cmd->add_option("--policy", run_flags.policy, "Policy file");
  run_cmd->add_option("--tagger", run_flags.tagger, "baseline, oracle, or external:<command>");
  run_cmd->add_flag("--strict", run_flags.common.strict, "Fail on malformed records");
  run_cmd->add_flag("--trace", run_flags.trace, "Write per-token decisions");
  run_cmd->add_option("--jobs", run_flags.common.jobs, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (prepare_cmd->parsed()) return command_prepare(common);
    if (split_cmd->parsed()) return command_split(common, ratio, seed);
    if (vocab_cmd->parsed()) return command_vocab(common, cutoff, min_count);
    if (train_cmd->parsed()) return command_train(common, vocab_path);
    if (tag_cmd->parsed()) return command_tag(common, model_path, tagger);
    if (correct_cmd->parsed()) {
      return command_correct(common, policy_path, threshold, threshold_opt->count() > 0, trace);
    }
    if (eval_cmd->parsed()) {
      if (common.input.empty() && (refs_path.empty() || hyps_path.empty())) {
        throw FormatError("eval: give either --input pairs or both --refs and --hyps");
      }
      return command_eval(common, refs_path, hyps_path, corrected_path);
    }
    if (synth_cmd->parsed()) {
      return command_synth(common, synth_refs, synth_sentences, error_rate, seed);
    }
    if (run_cmd->parsed()) return command_run(run_flags, run_cmd);
  } catch (const ProtocolViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
