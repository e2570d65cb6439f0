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

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "nlohmann/json.hpp"

#ifndef ASRCORRECT_CLI_PATH
#error "ASRCORRECT_CLI_PATH must point at the command line binary"
#endif

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("asrcorrect-cli-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int& counter() {
    static int value = 0;
    return value;
  }
  std::string str() const { return path.string(); }
};

// Runs the binary through the shell and returns its exit code.
int run_cli(const std::string& args) {
  const std::string command =
      std::string("\"") + ASRCORRECT_CLI_PATH + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  REQUIRE(in);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

nlohmann::json read_report(const fs::path& dir) {
  return nlohmann::json::parse(slurp(dir / "report.json"));
}

// Seeds a synthetic corpus and returns the path of its pair file.
fs::path make_corpus(const TempDir& dir, int sentences, int seed) {
  const int code = run_cli("synth --sentences " + std::to_string(sentences) + " --seed " +
                           std::to_string(seed) + " --output-dir " + dir.str());
  REQUIRE(code == 0);
  return dir.path / "synthetic.jsonl";
}

std::string write_identity_tagger(const TempDir& dir) {
  const fs::path script = dir.path / "identity.sh";
  std::ofstream out(script);
  out << "#!/bin/sh\n"
      << "awk '{ for (i = 1; i <= NF; i++) printf \"%s\\tnone\\t1.0\\n\", $i; print \"\" }'\n";
  out.close();
  fs::permissions(script, fs::perms::owner_all);
  return script.string();
}

}  // namespace

TEST_CASE("cli help succeeds and bad usage exits with 1") {
  CHECK(run_cli("--help") == 0);
  CHECK(run_cli("run --help") == 0);
  CHECK(run_cli("frobnicate") == 1);
  CHECK(run_cli("prepare --output-dir /tmp") == 1);  // missing required --input
  CHECK(run_cli("split --input x.jsonl --output-dir /tmp --bogus-flag") == 1);
}

TEST_CASE("cli data errors exit with 2") {
  TempDir out;
  CHECK(run_cli("prepare --input /nonexistent/corpus.jsonl --output-dir " + out.str()) == 2);

  const fs::path bad = out.path / "bad.jsonl";
  std::ofstream(bad) << "{\"hypothesis\": \"a\", \"reference\": \"a\"}\nnot json at all\n";
  CHECK(run_cli("prepare --strict --input " + bad.string() + " --output-dir " + out.str()) == 2);
  // Lenient mode skips the malformed line instead.
  CHECK(run_cli("prepare --input " + bad.string() + " --output-dir " + out.str()) == 0);
}

TEST_CASE("cli external tagger protocol violations exit with 3") {
  TempDir dir;
  const fs::path tokens = dir.path / "tokens.txt";
  std::ofstream(tokens) << "the cat sat\non a mat\n";
  CHECK(run_cli("tag --input " + tokens.string() + " --output-dir " + dir.str() +
                " --tagger \"external:exit 7\"") == 3);
  // Empty output for non-empty input violates the framing contract.
  CHECK(run_cli("tag --input " + tokens.string() + " --output-dir " + dir.str() +
                " --tagger \"external:true\"") == 3);
}

TEST_CASE("cli run completes and writes a parsable report") {
  TempDir corpus_dir;
  const fs::path corpus = make_corpus(corpus_dir, 250, 5);
  TempDir out;
  const int code =
      run_cli("run --input " + corpus.string() + " --output-dir " + out.str() + " --seed 11 --trace");
  REQUIRE(code == 0);

  const nlohmann::json report = read_report(out.path);
  CHECK(report.at("sentence_count").get<int>() > 0);
  CHECK(report.at("wer_asr").get<double>() > 0.0);
  CHECK(report.at("wer_corrected").get<double>() <= report.at("wer_asr").get<double>());
  CHECK(report.at("relative_wer_reduction").get<double>() >= 0.0);
  for (const char* name :
       {"prepared.jsonl", "train.jsonl", "dev.jsonl", "test.jsonl", "vocab.tsv", "model.tsv",
        "test.scored.tsv", "test.corrected.txt", "test.trace.jsonl", "report.txt"}) {
    CAPTURE(name);
    CHECK(fs::exists(out.path / name));
  }
}

TEST_CASE("cli run is deterministic across invocations") {
  TempDir corpus_dir;
  const fs::path corpus = make_corpus(corpus_dir, 200, 9);
  TempDir first;
  TempDir second;
  REQUIRE(run_cli("run --input " + corpus.string() + " --output-dir " + first.str() + " --seed 4") == 0);
  REQUIRE(run_cli("run --input " + corpus.string() + " --output-dir " + second.str() + " --seed 4") == 0);
  CHECK(slurp(first.path / "report.json") == slurp(second.path / "report.json"));
  CHECK(slurp(first.path / "test.corrected.txt") == slurp(second.path / "test.corrected.txt"));
  CHECK(slurp(first.path / "model.tsv") == slurp(second.path / "model.tsv"));
}

TEST_CASE("cli stages reproduce the end-to-end run byte for byte") {
  TempDir corpus_dir;
  const fs::path corpus = make_corpus(corpus_dir, 300, 21);
  TempDir run_out;
  REQUIRE(run_cli("run --input " + corpus.string() + " --output-dir " + run_out.str() + " --seed 13") == 0);

  TempDir stage;
  const std::string s = stage.str();
  REQUIRE(run_cli("prepare --input " + corpus.string() + " --output-dir " + s) == 0);
  CHECK(slurp(stage.path / "prepared.jsonl") == slurp(run_out.path / "prepared.jsonl"));

  REQUIRE(run_cli("split --input " + s + "/prepared.jsonl --output-dir " + s +
                  " --ratio 8:1:1 --seed 13") == 0);
  CHECK(slurp(stage.path / "test.jsonl") == slurp(run_out.path / "test.jsonl"));

  REQUIRE(run_cli("vocab --input " + s + "/train.jsonl --output-dir " + s) == 0);
  CHECK(slurp(stage.path / "vocab.tsv") == slurp(run_out.path / "vocab.tsv"));

  REQUIRE(run_cli("train --input " + s + "/train.jsonl --vocab " + s + "/vocab.tsv --output-dir " + s) == 0);
  CHECK(slurp(stage.path / "model.tsv") == slurp(run_out.path / "model.tsv"));

  REQUIRE(run_cli("tag --input " + s + "/test.jsonl --model " + s + "/model.tsv --output-dir " + s) == 0);
  CHECK(slurp(stage.path / "scored.tsv") == slurp(run_out.path / "test.scored.tsv"));

  REQUIRE(run_cli("correct --input " + s + "/scored.tsv --output-dir " + s) == 0);
  CHECK(slurp(stage.path / "corrected.txt") == slurp(run_out.path / "test.corrected.txt"));

  REQUIRE(run_cli("eval --input " + s + "/test.jsonl --corrected " + s + "/corrected.txt --output-dir " + s) == 0);
  CHECK(slurp(stage.path / "report.json") == slurp(run_out.path / "report.json"));
}

TEST_CASE("cli identity external tagger changes nothing") {
  TempDir corpus_dir;
  const fs::path corpus = make_corpus(corpus_dir, 150, 31);
  TempDir out;
  const std::string script = write_identity_tagger(out);
  REQUIRE(run_cli("run --input " + corpus.string() + " --output-dir " + out.str() +
                  " --seed 2 --tagger \"external:sh " + script + "\"") == 0);
  const nlohmann::json report = read_report(out.path);
  CHECK(report.at("relative_wer_reduction").get<double>() == 0.0);
  CHECK(report.at("wer_asr").get<double>() == report.at("wer_corrected").get<double>());
}

TEST_CASE("cli eval accepts parallel line files") {
  TempDir dir;
  std::ofstream(dir.path / "refs.txt") << "the cat sat\nhello world\n";
  std::ofstream(dir.path / "hyps.txt") << "the cat sat\nhello word\n";
  std::ofstream(dir.path / "corr.txt") << "the cat sat\nhello world\n";
  REQUIRE(run_cli("eval --refs " + (dir.path / "refs.txt").string() + " --hyps " +
                  (dir.path / "hyps.txt").string() + " --corrected " +
                  (dir.path / "corr.txt").string() + " --output-dir " + dir.str()) == 0);
  const nlohmann::json report = read_report(dir.path);
  CHECK(report.at("wer_corrected").get<double>() == 0.0);
  CHECK(report.at("relative_wer_reduction").get<double>() == 100.0);

  // Mismatched line counts are a data error.
  std::ofstream(dir.path / "short.txt") << "only one line\n";
  CHECK(run_cli("eval --refs " + (dir.path / "refs.txt").string() + " --hyps " +
                (dir.path / "hyps.txt").string() + " --corrected " +
                (dir.path / "short.txt").string() + " --output-dir " + dir.str()) == 2);
}

TEST_CASE("cli threshold above every score applies nothing") {
  TempDir corpus_dir;
  const fs::path corpus = make_corpus(corpus_dir, 150, 41);
  TempDir out;
  REQUIRE(run_cli("run --input " + corpus.string() + " --output-dir " + out.str() +
                  " --seed 6 --threshold 1.01") == 0);
  const nlohmann::json report = read_report(out.path);
  CHECK(report.at("relative_wer_reduction").get<double>() == 0.0);
}
