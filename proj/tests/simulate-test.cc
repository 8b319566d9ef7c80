// tests/simulate-test.cc

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

#include <cmath>
#include <sstream>

#include "doctest.h"
#include "latcomb/fst-lib.h"
#include "latcomb/metrics.h"
#include "latcomb/simulate.h"
#include "test-util.h"

namespace latcomb {
namespace {

std::string Serialize(const SimulatedCorpus &corpus) {
  std::ostringstream os;
  corpus.words->Write(os);
  WriteTranscripts(References(corpus), os);
  WriteTranscripts(Transcripts(corpus), os);
  WriteArchive(Hypotheses(corpus), os);
  return os.str();
}

std::vector<Label> ToLabels(const SymbolTable &syms, const std::vector<std::string> &words) {
  std::vector<Label> out;
  for (const auto &w : words) out.push_back(syms.Find(w).value());
  return out;
}

TEST_CASE("sampling helpers") {
  std::mt19937_64 rng(7);
  std::vector<int> hist(5, 0);
  for (int i = 0; i < 50000; ++i) ++hist[UniformInt(rng, 5)];
  for (int c : hist) CHECK(std::abs(c - 10000) < 400);
  for (int i = 0; i < 1000; ++i) {
    double x = UniformReal(rng);
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  CHECK(UniformInt(rng, 1) == 0);
  CHECK_THROWS_AS(UniformInt(rng, 0), Error);
}

TEST_CASE("noiseless channel") {
  NoiseConfig cfg;
  cfg.seed = 3;
  SimulatedCorpus corpus = Generate(cfg, 20);
  REQUIRE(corpus.utterances.size() == 20);
  CHECK(corpus.utterances[0].id == "utt0001");
  CHECK(corpus.words->Symbol(1) == "w001");
  for (const auto &u : corpus.utterances) {
    CHECK(u.transcript == u.reference);
    CHECK(u.reference.size() >= 8);
    CHECK(u.reference.size() <= 15);
    StdFst linear = LinearFst(ToLabels(*corpus.words, u.reference), corpus.words);
    CHECK(u.hypothesis == linear);
  }
}

TEST_CASE("same seed gives identical archives") {
  NoiseConfig cfg;
  cfg.p_delete = 0.1;
  cfg.p_substitute = 0.2;
  cfg.p_insert = 0.1;
  cfg.alternatives = 4;
  cfg.correct_prob = 0.6;
  cfg.slot_drop = 0.05;
  cfg.seed = 11;
  CHECK(Serialize(Generate(cfg, 50)) == Serialize(Generate(cfg, 50)));
  NoiseConfig other = cfg;
  other.seed = 12;
  CHECK(Serialize(Generate(cfg, 50)) != Serialize(Generate(other, 50)));
}

TEST_CASE("archive round trip") {
  NoiseConfig cfg;
  cfg.alternatives = 3;
  cfg.correct_prob = 0.5;
  cfg.slot_drop = 0.1;
  cfg.seed = 5;
  SimulatedCorpus corpus = Generate(cfg, 10);
  std::ostringstream os;
  WriteArchive(Hypotheses(corpus), os);
  std::istringstream is(os.str());
  auto entries = ReadArchive(is, corpus.words.get());
  REQUIRE(entries.size() == 10);
  for (size_t i = 0; i < entries.size(); ++i) {
    CHECK(entries[i].id == corpus.utterances[i].id);
    CHECK(testing::SameLanguage(testing::OracleLanguage(entries[i].fst),
                                testing::OracleLanguage(corpus.utterances[i].hypothesis), 0.0));
  }
}

TEST_CASE("deletion rate") {
  NoiseConfig cfg;
  cfg.p_delete = 0.2;
  cfg.seed = 21;
  SimulatedCorpus corpus = Generate(cfg, 1000);
  size_t ref = 0, transcript = 0;
  for (const auto &u : corpus.utterances) {
    ref += u.reference.size();
    transcript += u.transcript.size();
  }
  CHECK(ref >= 10000);
  double ratio = static_cast<double>(transcript) / static_cast<double>(ref);
  CHECK(std::fabs(ratio - 0.8) <= 0.8 * 0.02);
}

TEST_CASE("substitutions never keep the true word") {
  NoiseConfig cfg;
  cfg.p_substitute = 1.0;
  cfg.vocab_size = 3;
  cfg.seed = 4;
  for (const auto &u : Generate(cfg, 200).utterances) {
    REQUIRE(u.transcript.size() == u.reference.size());
    for (size_t i = 0; i < u.reference.size(); ++i) CHECK(u.transcript[i] != u.reference[i]);
  }
}

TEST_CASE("sausage shape and depth") {
  NoiseConfig cfg;
  cfg.alternatives = 4;
  cfg.correct_prob = 0.6;
  cfg.slot_drop = 0.05;
  cfg.seed = 31;
  SimulatedCorpus corpus = Generate(cfg, 500);
  double arcs = 0.0, ref_words = 0.0;
  for (const auto &u : corpus.utterances) {
    const StdFst &h = u.hypothesis;
    CHECK(IsAcyclic(h));
    CHECK(IsDeterministic(h));
    LatticeStats stats = LatticeDepth(h);
    if (stats.longest_path > 0) CHECK(stats.depth == 4.0);
    // Every slot keeps the true word with posterior 0.6.
    for (StateId s = 0; s < h.NumStates(); ++s) {
      if (h.NumArcs(s) == 0) continue;
      double mass = 0.0;
      for (const auto &arc : h.Arcs(s)) mass += std::exp(-arc.weight.Value());
      CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
    }
    arcs += static_cast<double>(stats.arcs);
    ref_words += static_cast<double>(u.reference.size());
  }
  // Word arcs per reference word.
  CHECK(arcs / ref_words == doctest::Approx(0.95 * 4).epsilon(0.02));
}

TEST_CASE("invalid configurations") {
  auto bad = [](auto edit) {
    NoiseConfig cfg;
    edit(cfg);
    CHECK_THROWS_AS(Generate(cfg, 1), Error);
  };
  bad([](NoiseConfig &c) { c.p_delete = 0.7, c.p_substitute = 0.4; });
  bad([](NoiseConfig &c) { c.p_insert = -0.1; });
  bad([](NoiseConfig &c) { c.alternatives = 0; });
  bad([](NoiseConfig &c) { c.alternatives = 60; });
  bad([](NoiseConfig &c) { c.min_length = 5, c.max_length = 4; });
  bad([](NoiseConfig &c) { c.correct_prob = 1.5; });
}

}  // namespace
}  // namespace latcomb
