// tests/cli-test.cc

// Copyright 2026  The latcomb authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.h"
#include "doctest.h"
#include "latcomb/archive.h"
#include "latcomb/arpa-io.h"
#include "latcomb/combiner.h"
#include "latcomb/ngram-model.h"
#include "latcomb/simulate.h"

namespace latcomb {
namespace {

namespace fs = std::filesystem;

struct Run {
  int status;
  std::string out, err;
};

Run Cli(const std::vector<std::string> &args) {
  std::ostringstream out, err;
  int status = RunCli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string Slurp(const fs::path &path) {
  std::ifstream is(path);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void Spit(const fs::path &path, const std::string &text) {
  std::ofstream os(path);
  os << text;
}

// A scratch directory holding a small simulated corpus.
struct Workspace {
  fs::path dir;
  SimulatedCorpus corpus;

  explicit Workspace(const std::string &name) {
    dir = fs::temp_directory_path() / ("latcomb-cli-test-" + name);
    fs::remove_all(dir);
    NoiseConfig cfg;
    cfg.p_delete = 0.1;
    cfg.p_substitute = 0.2;
    cfg.p_insert = 0.1;
    cfg.alternatives = 3;
    cfg.correct_prob = 0.6;
    cfg.min_length = 3;
    cfg.max_length = 8;
    cfg.seed = 17;
    corpus = Generate(cfg, 12);
    WriteSimulatedCorpus(corpus, dir.string());
  }
  ~Workspace() { fs::remove_all(dir); }

  std::string Path(const std::string &file) const { return (dir / file).string(); }
};

TEST_CASE("usage errors exit with status 2") {
  CHECK(Cli({}).status == kExitUsage);
  CHECK(Cli({"no-such-command"}).status == kExitUsage);
  CHECK(Cli({"combine", "--transcripts", "t"}).status == kExitUsage);
  CHECK(Cli({"prune", "--lattices", "/nonexistent", "--syms", "/nonexistent", "--threshold",
             "1", "--out", "-"})
            .status == kExitUsage);
  CHECK(Cli({"--help"}).status == kExitOk);
}

TEST_CASE("combine matches the library") {
  Workspace ws("combine");
  Run run = Cli({"combine", "--transcripts", ws.Path("transcripts.txt"), "--lattices",
                 ws.Path("hyp.ark"), "--syms", ws.Path("words.txt"), "--out", "-"});
  REQUIRE(run.status == kExitOk);
  std::ostringstream expected;
  for (const auto &u : ws.corpus.utterances) {
    std::vector<Label> t;
    for (const auto &w : u.transcript) t.push_back(ws.corpus.words->Find(w).value());
    StdFst combined = Combine(t, u.hypothesis);
    combined.SetSymbols(ws.corpus.words);
    WriteArchiveEntry({u.id, combined}, expected);
  }
  CHECK(run.out == expected.str());
}

TEST_CASE("mismatched utterance ids") {
  Workspace ws("ids");
  Spit(ws.Path("short.txt"), "utt0001 w001\nextra w002\n");
  Run run = Cli({"combine", "--transcripts", ws.Path("short.txt"), "--lattices",
                 ws.Path("hyp.ark"), "--syms", ws.Path("words.txt"), "--out", "-"});
  CHECK(run.status == kExitUsage);
  CHECK(run.err.find("utt0002") != std::string::npos);
  CHECK(run.err.find("extra") != std::string::npos);
}

TEST_CASE("per-utterance failures exit with status 1") {
  Workspace ws("fail");
  std::string refs = Slurp(ws.Path("ref.txt"));
  // An out-of-vocabulary reference word fails only the third utterance.
  size_t third = refs.find("utt0003 ") + 8;
  refs.insert(third, "unknown-word ");
  Spit(ws.Path("bad-ref.txt"), refs);
  std::vector<std::string> args{"oracle-wer",         "--refs",  ws.Path("bad-ref.txt"),
                                "--lattices",         ws.Path("hyp.ark"),
                                "--syms",             ws.Path("words.txt")};
  Run run = Cli(args);
  CHECK(run.status == kExitUtteranceFailures);
  CHECK(run.err.find("utt0003: ") == 0);
  CHECK(run.out.find("utt0012\toracle_wer") != std::string::npos);
  CHECK(run.out.find("utt0003\t") == std::string::npos);

  args.insert(args.end(), {"--fail-fast", "--jobs", "4"});
  Run fast = Cli(args);
  CHECK(fast.status == kExitUtteranceFailures);
  CHECK(fast.out.find("utt0002\toracle_wer") != std::string::npos);
  CHECK(fast.out.find("utt0004\t") == std::string::npos);
}

TEST_CASE("reports are identical for any job count") {
  Workspace ws("jobs");
  for (const char *cmd : {"expected-wer", "oracle-wer"}) {
    std::vector<std::string> args{cmd, "--refs", ws.Path("ref.txt"), "--lattices",
                                  ws.Path("hyp.ark"), "--syms", ws.Path("words.txt")};
    auto with_jobs = [&](const char *n) {
      auto a = args;
      a.insert(a.end(), {"--jobs", n});
      return Cli(a);
    };
    Run one = with_jobs("1"), many = with_jobs("5");
    CHECK(one.status == kExitOk);
    CHECK(one.out == many.out);
    CHECK(one.out.find("ALL\t") != std::string::npos);
  }
}

TEST_CASE("expected WER methods agree") {
  Workspace ws("ewer");
  std::vector<std::string> args{"expected-wer", "--refs", ws.Path("ref.txt"), "--lattices",
                                ws.Path("hyp.ark"), "--syms", ws.Path("words.txt")};
  Run rows = Cli(args);
  args.insert(args.end(), {"--method", "enumerate", "--cap", "10000"});
  Run enumerated = Cli(args);
  REQUIRE(rows.status == kExitOk);
  REQUIRE(enumerated.status == kExitOk);
  CHECK(rows.out == enumerated.out);
  args.back() = "2";
  CHECK(Cli(args).status == kExitUtteranceFailures);
}

TEST_CASE("language model pipeline") {
  Workspace ws("lm");
  std::ostringstream corpus;
  for (const auto &u : ws.corpus.utterances) {
    for (size_t i = 0; i < u.reference.size(); ++i) corpus << (i ? " " : "") << u.reference[i];
    corpus << '\n';
  }
  Spit(ws.Path("corpus.txt"), corpus.str());
  REQUIRE(Cli({"lm-train", "--corpus", ws.Path("corpus.txt"), "--order", "2", "--out",
               ws.Path("a.arpa")})
              .status == kExitOk);
  REQUIRE(Cli({"lm-train", "--corpus", ws.Path("corpus.txt"), "--order", "1", "--out",
               ws.Path("b.arpa")})
              .status == kExitOk);
  REQUIRE(Cli({"lm-interpolate", "--lambda", "1", "--in", ws.Path("a.arpa"), "--bg",
               ws.Path("b.arpa"), "--out", ws.Path("c.arpa")})
              .status == kExitOk);
  auto sentences = ReadCorpusFile(ws.Path("corpus.txt"));
  CHECK(ReadArpaFile(ws.Path("c.arpa")).Perplexity(sentences) ==
        doctest::Approx(ReadArpaFile(ws.Path("a.arpa")).Perplexity(sentences)).epsilon(1e-12));
  CHECK(Cli({"lm-interpolate", "--lambda", "1.5", "--in", ws.Path("a.arpa"), "--bg",
             ws.Path("b.arpa"), "--out", ws.Path("d.arpa")})
            .status == kExitUsage);

  REQUIRE(Cli({"lm-to-fst", "--arpa", ws.Path("a.arpa"), "--syms", ws.Path("words.txt"),
               "--out", ws.Path("g.fst")})
              .status == kExitOk);
  Run rescored = Cli({"rescore", "--lattices", ws.Path("hyp.ark"), "--syms",
                      ws.Path("words.txt"), "--grammar", ws.Path("g.fst"), "--out", "-"});
  CHECK(rescored.status == kExitOk);
  CHECK(rescored.out.find("=== utt0012") != std::string::npos);

  REQUIRE(Cli({"word-reward", "--reward", "0.5", "--in", ws.Path("g.fst"), "--syms",
               ws.Path("words.txt"), "--out", ws.Path("g2.fst")})
              .status == kExitOk);
  CHECK(Cli({"word-reward", "--reward", "-1", "--in", ws.Path("g.fst"), "--out", "-"}).status ==
        kExitUsage);
}

TEST_CASE("simulate is deterministic") {
  fs::path a = fs::temp_directory_path() / "latcomb-cli-test-sim-a";
  fs::path b = fs::temp_directory_path() / "latcomb-cli-test-sim-b";
  for (const auto &d : {a, b})
    REQUIRE(Cli({"simulate", "--out-dir", d.string(), "--count", "7", "--seed", "9",
                 "--p-substitute", "0.3", "--alternatives", "2", "--correct-prob", "0.7"})
                .status == kExitOk);
  for (const char *f : {"words.txt", "ref.txt", "transcripts.txt", "hyp.ark"})
    CHECK(Slurp(a / f) == Slurp(b / f));
  fs::remove_all(a);
  fs::remove_all(b);
}

}  // namespace
}  // namespace latcomb
