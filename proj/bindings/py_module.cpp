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
// Python bindings. Tags cross the boundary as canonical strings and token
// sequences as lists of str; vocabulary and model objects stay opaque.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "asrcorrect/align.hpp"
#include "asrcorrect/corrector.hpp"
#include "asrcorrect/editops.hpp"
#include "asrcorrect/errors.hpp"
#include "asrcorrect/eval.hpp"
#include "asrcorrect/normalize.hpp"
#include "asrcorrect/synthetic.hpp"
#include "asrcorrect/tagger.hpp"
#include "asrcorrect/vocab.hpp"

namespace py = pybind11;
using namespace asrcorrect;

namespace {

TokenSequence to_sequence(const std::vector<std::string>& tokens) {
  return TokenSequence{tokens};
}

TaggedSentence to_tagged(const std::vector<std::string>& tokens,
                         const std::vector<std::string>& tags) {
  if (tokens.size() != tags.size()) {
    throw LengthMismatch("tokens and tags differ in length");
  }
  TaggedSentence sentence;
  sentence.tokens = to_sequence(tokens);
  for (const std::string& tag : tags) sentence.tags.push_back(parse_tag(tag));
  return sentence;
}

std::vector<std::string> tags_to_strings(const std::vector<EditOp>& tags) {
  std::vector<std::string> out;
  out.reserve(tags.size());
  for (const EditOp& tag : tags) out.push_back(format_tag(tag));
  return out;
}

std::vector<TaggedSentence> corpus_from_python(
    const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>& corpus) {
  std::vector<TaggedSentence> out;
  out.reserve(corpus.size());
  for (const auto& [tokens, tags] : corpus) out.push_back(to_tagged(tokens, tags));
  return out;
}

py::dict report_to_dict(const EvalReport& report) {
  py::dict d;
  d["wer_asr"] = report.wer_asr;
  d["wer_corrected"] = report.wer_corrected;
  d["wrr_asr"] = report.wrr_asr;
  d["wrr_corrected"] = report.wrr_corrected;
  d["wrr_gain"] = report.wrr_gain;
  d["relative_wer_reduction"] = report.relative_reduction;
  d["sentence_count"] = report.sentence_count;
  d["token_count"] = report.token_count;
  d["skipped_count"] = report.skipped_count;
  return d;
}

}  // namespace

PYBIND11_MODULE(_asrcorrect, m) {
  m.doc() = "Word-level edit correction for speech recognizer output";

  py::register_exception<Error>(m, "Error");

  m.def(
      "normalize",
      [](const std::string& text, bool lowercase, bool strip_punctuation) {
        NormalizationConfig config;
        config.lowercase = lowercase;
        config.strip_punctuation = strip_punctuation;
        return normalize(text, config).tokens;
      },
      py::arg("text"), py::arg("lowercase") = true, py::arg("strip_punctuation") = true,
      "Normalize raw text into a token list");

  m.def(
      "matching_blocks",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
        for (const MatchBlock& block : matching_blocks(a, b)) {
          out.emplace_back(block.a_start, block.b_start, block.size);
        }
        return out;
      },
      py::arg("a"), py::arg("b"), "Gestalt matching blocks including the terminal sentinel");

  m.def(
      "opcodes",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        std::vector<std::tuple<std::string, std::size_t, std::size_t, std::size_t, std::size_t>> out;
        for (const Opcode& op : opcodes(a, b)) {
          out.emplace_back(to_string(op.kind), op.a_start, op.a_end, op.b_start, op.b_end);
        }
        return out;
      },
      py::arg("a"), py::arg("b"), "Edit script tiling both sequences");

  m.def(
      "derive_tags",
      [](const std::vector<std::string>& hypothesis, const std::vector<std::string>& reference) {
        const TaggedSentence tagged = derive_tags(to_sequence(hypothesis), to_sequence(reference));
        return tags_to_strings(tagged.tags);
      },
      py::arg("hypothesis"), py::arg("reference"),
      "Derive one edit tag per hypothesis token that rewrites it into the reference");

  m.def(
      "apply_tags",
      [](const std::vector<std::string>& tokens, const std::vector<std::string>& tags) {
        return apply_tags(to_tagged(tokens, tags)).tokens;
      },
      py::arg("tokens"), py::arg("tags"), "Apply one edit tag per token");

  m.def(
      "parse_tag", [](const std::string& tag) { return format_tag(parse_tag(tag)); }, py::arg("tag"),
      "Validate a tag string and return its canonical form");

  py::class_<TagVocabulary>(m, "TagVocabulary")
      .def_property_readonly("cutoff", &TagVocabulary::cutoff)
      .def_property_readonly("min_count", &TagVocabulary::min_count)
      .def("__len__", &TagVocabulary::size)
      .def(
          "__contains__",
          [](const TagVocabulary& vocab, const std::string& tag) {
            return vocab.contains(parse_tag(tag));
          },
          py::arg("tag"))
      .def("tags", [](const TagVocabulary& vocab) {
        std::vector<std::string> out;
        for (const auto& entry : vocab.entries()) out.push_back(entry.tag);
        return out;
      });

  m.def(
      "build_vocabulary",
      [](const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>& corpus,
         std::size_t cutoff, std::size_t min_count) {
        return build_vocabulary(corpus_from_python(corpus), cutoff, min_count);
      },
      py::arg("corpus"), py::arg("cutoff") = kDefaultCutoff, py::arg("min_count") = kDefaultMinCount,
      "Build a tag vocabulary from (tokens, tags) sentence pairs");

  m.def(
      "mask_unsupported",
      [](const std::vector<std::string>& tokens, const std::vector<std::string>& tags,
         const TagVocabulary& vocab) {
        return tags_to_strings(mask_unsupported(to_tagged(tokens, tags), vocab).tags);
      },
      py::arg("tokens"), py::arg("tags"), py::arg("vocab"),
      "Replace out-of-vocabulary tags and widen over their correction runs");

  py::class_<BaselineModel>(m, "BaselineModel")
      .def(
          "predict",
          [](const BaselineModel& model, const std::vector<std::string>& tokens) {
            std::vector<std::pair<std::string, double>> out;
            for (const ScoredTag& scored : predict(model, to_sequence(tokens))) {
              out.emplace_back(format_tag(scored.tag), scored.score);
            }
            return out;
          },
          py::arg("tokens"), "Propose one (tag, score) per token")
      .def("save", [](const BaselineModel& model, const std::string& path) { save_model(path, model); },
           py::arg("path"));

  m.def(
      "train_baseline",
      [](const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>& corpus,
         const TagVocabulary& vocab) { return train_baseline(corpus_from_python(corpus), vocab); },
      py::arg("corpus"), py::arg("vocab"), "Train the frequency baseline tagger");

  m.def("load_model", &load_model, py::arg("path"));
  m.def("load_vocabulary", &load_vocabulary, py::arg("path"));
  m.def(
      "save_vocabulary",
      [](const std::string& path, const TagVocabulary& vocab) { save_vocabulary(path, vocab); },
      py::arg("path"), py::arg("vocab"));

  m.def(
      "correct",
      [](const std::vector<std::string>& tokens,
         const std::vector<std::pair<std::string, double>>& scored_tags, double threshold,
         const std::vector<std::string>& disabled_ops) {
        if (tokens.size() != scored_tags.size()) {
          throw LengthMismatch("tokens and scored tags differ in length");
        }
        std::vector<ScoredTag> scored;
        for (const auto& [tag, score] : scored_tags) scored.push_back({parse_tag(tag), score});
        CorrectionPolicy policy;
        policy.score_threshold = threshold;
        policy.disabled_ops = disabled_ops;
        auto [corrected, trace] = correct(to_sequence(tokens), scored, policy);
        std::vector<std::string> actions;
        for (const TraceRecord& record : trace.records) actions.push_back(to_string(record.action));
        return std::make_pair(corrected.tokens, actions);
      },
      py::arg("tokens"), py::arg("scored_tags"), py::arg("threshold") = 0.0,
      py::arg("disabled_ops") = std::vector<std::string>{},
      "Apply scored tags under a policy; returns (corrected tokens, per-token actions)");

  m.def(
      "wer",
      [](const std::vector<std::string>& reference, const std::vector<std::string>& hypothesis) {
        const SentenceScore score = wer(to_sequence(reference), to_sequence(hypothesis));
        py::dict d;
        d["substitutions"] = score.substitutions;
        d["deletions"] = score.deletions;
        d["insertions"] = score.insertions;
        d["reference_length"] = score.reference_length;
        d["wer_percent"] = score.wer_percent();
        return d;
      },
      py::arg("reference"), py::arg("hypothesis"), "Word error rate breakdown for one sentence");

  m.def("relative_wer_reduction", &relative_wer_reduction, py::arg("wer_asr"),
        py::arg("wer_corrected"), "Relative reduction in percent");

  m.def(
      "evaluate",
      [](const std::vector<std::tuple<std::vector<std::string>, std::vector<std::string>,
                                      std::vector<std::string>>>& triples) {
        std::vector<EvalTriple> converted;
        converted.reserve(triples.size());
        for (const auto& [ref, hyp, corrected] : triples) {
          converted.push_back(
              EvalTriple{to_sequence(ref), to_sequence(hyp), to_sequence(corrected)});
        }
        return report_to_dict(evaluate_corpus(converted));
      },
      py::arg("triples"), "Corpus metrics from (reference, hypothesis, corrected) triples");

  m.def(
      "generate_synthetic",
      [](const std::vector<std::vector<std::string>>& references, double error_rate,
         std::uint64_t seed) {
        std::vector<TokenSequence> converted;
        converted.reserve(references.size());
        for (const auto& tokens : references) converted.push_back(to_sequence(tokens));
        SyntheticSpec spec;
        spec.error_rate = error_rate;
        std::vector<std::pair<std::string, std::string>> out;
        for (const CorrectionPair& pair : generate_synthetic(converted, spec, seed)) {
          out.emplace_back(pair.hypothesis, pair.reference);
        }
        return out;
      },
      py::arg("references"), py::arg("error_rate") = 1.2, py::arg("seed") = 1,
      "Corrupt reference sentences; returns (hypothesis, reference) string pairs");

  m.def(
      "generate_references",
      [](std::size_t count, std::uint64_t seed) {
        std::vector<std::vector<std::string>> out;
        for (const TokenSequence& sentence : generate_reference_corpus(count, seed)) {
          out.push_back(sentence.tokens);
        }
        return out;
      },
      py::arg("count"), py::arg("seed") = 1, "Template reference sentences for demos");
}
