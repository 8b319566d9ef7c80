// src/simulate.cc

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

#include "latcomb/simulate.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>

#include "latcomb/error.h"

namespace latcomb {

uint64_t UniformInt(std::mt19937_64 &rng, uint64_t n) {
  if (n == 0) throw Error("UniformInt: empty range");
  const uint64_t max = std::numeric_limits<uint64_t>::max();
  const uint64_t limit = max - (max % n + 1) % n;  // largest multiple of n, minus one
  uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return x % n;
}

double UniformReal(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void NoiseConfig::Validate() const {
  for (double p : {p_delete, p_substitute, p_insert, correct_prob, slot_drop})
    if (!(p >= 0.0 && p <= 1.0)) throw Error("NoiseConfig: probabilities must lie in [0, 1]");
  if (p_delete + p_substitute > 1.0)
    throw Error("NoiseConfig: p_delete + p_substitute must not exceed 1");
  if (alternatives < 1) throw Error("NoiseConfig: alternatives must be at least 1");
  if (vocab_size < 1) throw Error("NoiseConfig: vocab_size must be at least 1");
  if (alternatives > vocab_size)
    throw Error("NoiseConfig: alternatives must not exceed vocab_size");
  if (p_substitute > 0.0 && vocab_size < 2)
    throw Error("NoiseConfig: substitutions need at least two words");
  if (min_length < 0 || max_length < min_length)
    throw Error("NoiseConfig: need 0 <= min_length <= max_length");
}

namespace {

std::string Padded(const char *prefix, size_t value, size_t width) {
  std::string digits = std::to_string(value);
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  return prefix + digits;
}

class Sampler {
 public:
  Sampler(const NoiseConfig &cfg) : cfg_(cfg), rng_(cfg.seed) {}

  bool Coin(double p) { return UniformReal(rng_) < p; }
  Label Word() { return 1 + static_cast<Label>(UniformInt(rng_, cfg_.vocab_size)); }
  Label OtherWord(Label excluded) {
    Label w = 1 + static_cast<Label>(UniformInt(rng_, cfg_.vocab_size - 1));
    return w >= excluded ? w + 1 : w;
  }

  std::vector<Label> Reference() {
    uint64_t span = static_cast<uint64_t>(cfg_.max_length - cfg_.min_length) + 1;
    std::vector<Label> ref(cfg_.min_length + UniformInt(rng_, span));
    for (auto &w : ref) w = Word();
    return ref;
  }

  std::vector<Label> Transcript(const std::vector<Label> &ref) {
    std::vector<Label> out;
    for (Label w : ref) {
      double r = UniformReal(rng_);
      if (r >= cfg_.p_delete) out.push_back(r < cfg_.p_delete + cfg_.p_substitute ? OtherWord(w) : w);
      if (Coin(cfg_.p_insert)) out.push_back(Word());
    }
    return out;
  }

  StdFst Hypothesis(const std::vector<Label> &ref) {
    StdFst fst;
    StateId cur = fst.AddState();
    fst.SetStart(cur);
    const int k = cfg_.alternatives;
    const double q = k == 1 ? 1.0 : cfg_.correct_prob;
    const double other = k == 1 ? 0.0 : (1.0 - q) / (k - 1);
    for (Label w : ref) {
      if (Coin(cfg_.slot_drop)) continue;
      // k - 1 distinct distractors by partial Fisher-Yates over the other words.
      std::vector<Label> pool;
      pool.reserve(cfg_.vocab_size - 1);
      for (Label l = 1; l <= cfg_.vocab_size; ++l)
        if (l != w) pool.push_back(l);
      StateId next = fst.AddState();
      if (q > 0.0) fst.AddArc(cur, w, w, TropicalWeight(-std::log(q)), next);
      for (int i = 0; i < k - 1; ++i) {
        size_t j = i + UniformInt(rng_, pool.size() - i);
        std::swap(pool[i], pool[j]);
        if (other > 0.0)
          fst.AddArc(cur, pool[i], pool[i], TropicalWeight(-std::log(other)), next);
      }
      cur = next;
    }
    fst.SetFinal(cur, TropicalWeight::One());
    fst.SortArcs();
    return fst;
  }

 private:
  const NoiseConfig &cfg_;
  std::mt19937_64 rng_;
};

std::vector<std::string> Words(const SymbolTable &syms, const std::vector<Label> &labels) {
  std::vector<std::string> out;
  for (Label l : labels) out.push_back(syms.Symbol(l));
  return out;
}

}  // namespace

SimulatedCorpus Generate(const NoiseConfig &cfg, size_t count) {
  cfg.Validate();
  auto syms = std::make_shared<SymbolTable>();
  const size_t word_width = std::max<size_t>(3, std::to_string(cfg.vocab_size).size());
  for (int i = 1; i <= cfg.vocab_size; ++i) syms->AddSymbol(Padded("w", i, word_width));
  const size_t id_width = std::max<size_t>(4, std::to_string(count).size());

  SimulatedCorpus corpus;
  corpus.words = syms;
  Sampler sampler(cfg);
  for (size_t u = 1; u <= count; ++u) {
    std::vector<Label> ref = sampler.Reference();
    SimulatedUtterance utt;
    utt.id = Padded("utt", u, id_width);
    utt.reference = Words(*syms, ref);
    utt.transcript = Words(*syms, sampler.Transcript(ref));
    utt.hypothesis = sampler.Hypothesis(ref);
    utt.hypothesis.SetSymbols(syms);
    corpus.utterances.push_back(std::move(utt));
  }
  return corpus;
}

std::vector<Transcript> References(const SimulatedCorpus &corpus) {
  std::vector<Transcript> out;
  for (const auto &u : corpus.utterances) out.push_back({u.id, u.reference});
  return out;
}

std::vector<Transcript> Transcripts(const SimulatedCorpus &corpus) {
  std::vector<Transcript> out;
  for (const auto &u : corpus.utterances) out.push_back({u.id, u.transcript});
  return out;
}

std::vector<ArchiveEntry> Hypotheses(const SimulatedCorpus &corpus) {
  std::vector<ArchiveEntry> out;
  for (const auto &u : corpus.utterances) out.push_back({u.id, u.hypothesis});
  return out;
}

void WriteSimulatedCorpus(const SimulatedCorpus &corpus, const std::string &dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create directory " + dir + ": " + ec.message());
  const std::filesystem::path base(dir);
  corpus.words->WriteFile((base / "words.txt").string());
  WriteTranscriptFile(References(corpus), (base / "ref.txt").string());
  WriteTranscriptFile(Transcripts(corpus), (base / "transcripts.txt").string());
  WriteArchiveFile(Hypotheses(corpus), (base / "hyp.ark").string());
}

}  // namespace latcomb
