// include/latcomb/simulate.h

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

#ifndef LATCOMB_SIMULATE_H_
#define LATCOMB_SIMULATE_H_

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "latcomb/archive.h"
#include "latcomb/fst.h"

namespace latcomb {

struct NoiseConfig {
  // Transcript channel, applied per reference word.
  double p_delete = 0.0;
  double p_substitute = 0.0;
  // Chance of a random word after each reference position.
  double p_insert = 0.0;
  // Decoder channel: each kept slot holds the true word with posterior
  // `correct_prob` among `alternatives` words; a slot is dropped with
  // probability `slot_drop`.
  int alternatives = 1;
  double correct_prob = 1.0;
  double slot_drop = 0.0;
  int vocab_size = 50;
  int min_length = 8;
  int max_length = 15;
  uint64_t seed = 0;

  void Validate() const;
};

struct SimulatedUtterance {
  std::string id;
  std::vector<std::string> reference;
  std::vector<std::string> transcript;
  StdFst hypothesis;  // sausage acceptor, costs -ln posterior
};

struct SimulatedCorpus {
  std::shared_ptr<const SymbolTable> words;  // <eps>, then w001 .. wNNN
  std::vector<SimulatedUtterance> utterances;
};

// Draws `count` utterances.  The output depends only on `cfg` and `count`.
SimulatedCorpus Generate(const NoiseConfig &cfg, size_t count);

// Writes words.txt, ref.txt, transcripts.txt and hyp.ark into `dir`.
void WriteSimulatedCorpus(const SimulatedCorpus &corpus, const std::string &dir);

std::vector<Transcript> References(const SimulatedCorpus &corpus);
std::vector<Transcript> Transcripts(const SimulatedCorpus &corpus);
std::vector<ArchiveEntry> Hypotheses(const SimulatedCorpus &corpus);

// Sampling helpers with a fixed algorithm, so results do not depend on
// the standard library's distribution implementations.
uint64_t UniformInt(std::mt19937_64 &rng, uint64_t n);  // [0, n)
double UniformReal(std::mt19937_64 &rng);                // [0, 1)

}  // namespace latcomb

#endif  // LATCOMB_SIMULATE_H_
