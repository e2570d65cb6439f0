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

#include "asrcorrect/tagger.hpp"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "asrcorrect/errors.hpp"

namespace asrcorrect {

namespace {

std::string context_key(const std::vector<std::string>& tokens, std::size_t i) {
  const std::string_view prev = i > 0 ? std::string_view(tokens[i - 1]) : kBoundaryLeft;
  const std::string_view next = i + 1 < tokens.size() ? std::string_view(tokens[i + 1]) : kBoundaryRight;
  std::string key;
  key.reserve(prev.size() + tokens[i].size() + next.size() + 2);
  key.append(prev);
  key.push_back('\t');
  key.append(tokens[i]);
  key.push_back('\t');
  key.append(next);
  return key;
}

// Majority tag of a cell with its relative frequency. Ties break toward the
// better (smaller) vocabulary rank, then the lexicographically smaller tag;
// the map iterates tags in ascending order, so on a full tie the first one
// seen already is the smaller.
ScoredTag pick_from_cell(const std::map<std::string, std::uint64_t>& cell, const TagVocabulary& vocab) {
  std::uint64_t total = 0;
  const std::string* best_tag = nullptr;
  std::uint64_t best_count = 0;
  std::size_t best_rank = TagVocabulary::npos;
  for (const auto& [tag, count] : cell) {
    total += count;
    const std::size_t rank = vocab.rank(tag);
    const bool wins = best_tag == nullptr || count > best_count ||
                      (count == best_count && rank < best_rank);
    if (wins) {
      best_tag = &tag;
      best_count = count;
      best_rank = rank;
    }
  }
  return ScoredTag{parse_tag(*best_tag), static_cast<double>(best_count) / static_cast<double>(total)};
}

void format_score(std::ostream& out, double score) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6f", score);
  out << buffer;
}

// Removes its path on scope exit; keeps run_external_tagger exception-safe.
struct TempFile {
  std::string path;

  explicit TempFile(const char* tag) {
    std::string tmpl = (std::filesystem::temp_directory_path() / "asrcorrect-").string();
    tmpl += tag;
    tmpl += "-XXXXXX";
    std::vector<char> buffer(tmpl.begin(), tmpl.end());
    buffer.push_back('\0');
    const int fd = ::mkstemp(buffer.data());
    if (fd < 0) throw IoError("cannot create temporary file: " + tmpl);
    ::close(fd);
    path.assign(buffer.data());
  }
  ~TempFile() {
    std::error_code ignored;
    std::filesystem::remove(path, ignored);
  }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
};

}  // namespace

BaselineModel train_baseline(const std::vector<TaggedSentence>& corpus, TagVocabulary vocab) {
  if (corpus.empty()) throw EmptyCorpus("train_baseline: corpus is empty");
  BaselineModel model;
  model.vocab = std::move(vocab);
  for (const TaggedSentence& sentence : corpus) {
    if (sentence.tokens.size() != sentence.tags.size()) {
      throw LengthMismatch("train_baseline: tokens and tags differ in length");
    }
    const auto& tokens = sentence.tokens.tokens;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      // Out-of-vocabulary tags in unmasked input fall back to unsupported so
      // the model can never learn to emit a tag outside its vocabulary.
      std::string tag = format_tag(sentence.tags[i]);
      if (!model.vocab.contains(tag)) tag = "unsupported";
      ++model.context_table[context_key(tokens, i)][tag];
      ++model.token_table[tokens[i]][tag];
    }
  }
  return model;
}

std::vector<ScoredTag> predict(const BaselineModel& model, const TokenSequence& tokens) {
  std::vector<ScoredTag> out;
  out.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    ScoredTag scored{EditOp::none(), 1.0};
    const auto ctx = model.context_table.find(context_key(tokens.tokens, i));
    if (ctx != model.context_table.end() && !ctx->second.empty()) {
      scored = pick_from_cell(ctx->second, model.vocab);
    } else {
      const auto tok = model.token_table.find(tokens[i]);
      if (tok != model.token_table.end() && !tok->second.empty()) {
        scored = pick_from_cell(tok->second, model.vocab);
      }
    }
    if (i == 0 && scored.tag.is_join()) scored = ScoredTag{EditOp::none(), 1.0};
    out.push_back(std::move(scored));
  }
  return out;
}

void write_model(std::ostream& out, const BaselineModel& model) {
  out << "#asrcorrect-model v1\n";
  out << "#cutoff=" << model.vocab.cutoff() << " min_count=" << model.vocab.min_count() << '\n';
  for (const auto& entry : model.vocab.entries()) {
    out << "voc\t" << entry.tag << '\t' << entry.count << '\n';
  }
  for (const auto& [key, cell] : model.context_table) {
    for (const auto& [tag, count] : cell) {
      out << "ctx\t" << key << '\t' << tag << '\t' << count << '\n';
    }
  }
  for (const auto& [token, cell] : model.token_table) {
    for (const auto& [tag, count] : cell) {
      out << "tok\t" << token << '\t' << tag << '\t' << count << '\n';
    }
  }
}

BaselineModel read_model(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("model file is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "#asrcorrect-model v1") {
    throw FormatError("unrecognized model header: " + line);
  }
  if (!std::getline(in, line)) throw FormatError("model file is missing its vocabulary header");
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
      throw FormatError("bad model vocabulary header: " + line);
    }
    try {
      cutoff = std::stoul(cutoff_field.substr(cutoff_prefix.size()));
      min_count = std::stoul(min_field.substr(min_prefix.size()));
    } catch (const std::exception&) {
      throw FormatError("bad model vocabulary header: " + line);
    }
  }

  std::vector<TagVocabulary::Entry> entries;
  BaselineModel model;
  std::size_t line_number = 2;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const auto tab = line.find('\t', start);
      if (tab == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    const std::string where = "line " + std::to_string(line_number);
    try {
      if (fields[0] == "voc" && fields.size() == 3) {
        entries.push_back({fields[1], std::stoull(fields[2])});
      } else if (fields[0] == "ctx" && fields.size() == 6) {
        const std::string key = fields[1] + '\t' + fields[2] + '\t' + fields[3];
        model.context_table[key][fields[4]] += std::stoull(fields[5]);
      } else if (fields[0] == "tok" && fields.size() == 4) {
        model.token_table[fields[1]][fields[2]] += std::stoull(fields[3]);
      } else {
        throw FormatError(where + ": unrecognized model record");
      }
    } catch (const FormatError&) {
      throw;
    } catch (const std::exception&) {
      throw FormatError(where + ": bad count field");
    }
  }
  model.vocab = TagVocabulary(std::move(entries), cutoff, min_count);
  return model;
}

void save_model(const std::string& path, const BaselineModel& model) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write: " + path);
  write_model(out, model);
  if (!out) throw IoError("write failed: " + path);
}

BaselineModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  return read_model(in);
}

void write_tokens_file(std::ostream& out, const std::vector<TokenSequence>& sentences) {
  for (const TokenSequence& sentence : sentences) {
    out << sentence.join() << '\n';
  }
}

std::vector<TokenSequence> read_tokens_file(std::istream& in) {
  std::vector<TokenSequence> sentences;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    sentences.push_back(tokens_from_string(line));
  }
  return sentences;
}

void write_scored_file(std::ostream& out, const std::vector<TokenSequence>& sentences,
                       const std::vector<std::vector<ScoredTag>>& scored) {
  if (sentences.size() != scored.size()) {
    throw LengthMismatch("write_scored_file: sentence and score counts differ");
  }
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    if (sentences[s].size() != scored[s].size()) {
      throw LengthMismatch("write_scored_file: sentence " + std::to_string(s) +
                           " has mismatched token and score counts");
    }
    for (std::size_t i = 0; i < scored[s].size(); ++i) {
      out << sentences[s][i] << '\t' << format_tag(scored[s][i].tag) << '\t';
      format_score(out, scored[s][i].score);
      out << '\n';
    }
    out << '\n';
  }
}

std::vector<std::vector<ScoredTag>> read_scored_file(std::istream& in,
                                                     const std::vector<TokenSequence>& expected) {
  std::vector<std::vector<ScoredTag>> sentences;
  std::vector<ScoredTag> current;
  std::vector<std::string> current_tokens;
  std::string line;
  std::size_t line_number = 0;

  auto violation = [&](const std::string& what) {
    return ProtocolViolation("scored line " + std::to_string(line_number) + ": " + what);
  };
  auto flush = [&] {
    if (current_tokens.empty()) return;
    const std::size_t s = sentences.size();
    if (s >= expected.size()) {
      throw ProtocolViolation("scored reply has more sentences than were sent");
    }
    if (current_tokens != expected[s].tokens) {
      throw ProtocolViolation("scored reply sentence " + std::to_string(s) +
                              " does not echo the tokens that were sent");
    }
    sentences.push_back(std::move(current));
    current.clear();
    current_tokens.clear();
  };

  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    const auto tab1 = line.find('\t');
    const auto tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
    if (tab1 == std::string::npos || tab2 == std::string::npos) {
      throw violation("expected token<TAB>tag<TAB>score");
    }
    const std::string token = line.substr(0, tab1);
    const std::string tag_text = line.substr(tab1 + 1, tab2 - tab1 - 1);
    const std::string score_text = line.substr(tab2 + 1);
    ScoredTag scored;
    try {
      scored.tag = parse_tag(tag_text);
    } catch (const ParseError& e) {
      throw violation(e.what());
    }
    try {
      std::size_t consumed = 0;
      scored.score = std::stod(score_text, &consumed);
      if (consumed != score_text.size()) throw std::invalid_argument(score_text);
    } catch (const std::exception&) {
      throw violation("bad score: " + score_text);
    }
    if (!(scored.score >= 0.0 && scored.score <= 1.0)) {
      throw violation("score outside [0, 1]: " + score_text);
    }
    current_tokens.push_back(token);
    current.push_back(std::move(scored));
  }
  flush();
  if (sentences.size() != expected.size()) {
    throw ProtocolViolation("scored reply has " + std::to_string(sentences.size()) +
                            " sentences, expected " + std::to_string(expected.size()));
  }
  return sentences;
}

ScoredDataset read_scored_dataset(std::istream& in) {
  ScoredDataset data;
  TokenSequence tokens;
  std::vector<ScoredTag> scored;
  std::string line;
  std::size_t line_number = 0;
  auto flush = [&] {
    if (tokens.empty()) return;
    data.sentences.push_back(std::move(tokens));
    data.scored.push_back(std::move(scored));
    tokens = TokenSequence{};
    scored.clear();
  };
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    const std::string where = "line " + std::to_string(line_number);
    const auto tab1 = line.find('\t');
    const auto tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
    if (tab1 == std::string::npos || tab1 == 0 || tab2 == std::string::npos) {
      throw FormatError(where + ": expected token<TAB>tag<TAB>score");
    }
    ScoredTag entry;
    try {
      entry.tag = parse_tag(line.substr(tab1 + 1, tab2 - tab1 - 1));
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
    const std::string score_text = line.substr(tab2 + 1);
    try {
      std::size_t consumed = 0;
      entry.score = std::stod(score_text, &consumed);
      if (consumed != score_text.size()) throw std::invalid_argument(score_text);
    } catch (const std::exception&) {
      throw FormatError(where + ": bad score: " + score_text);
    }
    if (!(entry.score >= 0.0 && entry.score <= 1.0)) {
      throw FormatError(where + ": score outside [0, 1]: " + score_text);
    }
    tokens.tokens.push_back(line.substr(0, tab1));
    scored.push_back(std::move(entry));
  }
  flush();
  return data;
}

ScoredDataset load_scored_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  return read_scored_dataset(in);
}

std::vector<std::vector<ScoredTag>> run_external_tagger(const std::string& command,
                                                        const std::vector<TokenSequence>& sentences) {
  TempFile input("in");
  TempFile output("out");
  {
    std::ofstream out(input.path);
    if (!out) throw IoError("cannot write: " + input.path);
    write_tokens_file(out, sentences);
  }
  const std::string shell_command = "( " + command + " ) < " + input.path + " > " + output.path;
  const int status = std::system(shell_command.c_str());
  if (status != 0) {
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : status;
    throw ProtocolViolation("external tagger failed with status " + std::to_string(code) + ": " + command);
  }
  std::ifstream in(output.path);
  if (!in) throw IoError("cannot read: " + output.path);
  return read_scored_file(in, sentences);
}

}  // namespace asrcorrect
