// src/combiner.cc

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

#include "latcomb/combiner.h"

#include "latcomb/compose.h"
#include "latcomb/determinize.h"
#include "latcomb/minimize.h"
#include "latcomb/prune.h"
#include "latcomb/rmepsilon.h"

namespace latcomb {

void CombineConfig::Validate() const {
  edit_costs.Validate();
  if (!prune_multiplier.Member() || prune_multiplier.Value() < 0.0)
    throw Error("CombineConfig: prune multiplier must be a cost >= 0");
}

std::vector<Label> TranscriptToLabels(std::span<const std::string> words,
                                      const SymbolTable &syms) {
  std::vector<Label> labels;
  labels.reserve(words.size());
  for (const auto &w : words) {
    auto id = syms.Find(w);
    labels.push_back(id && *id != kEpsilon ? *id : kUnmatchableLabel);
  }
  return labels;
}

StdFst Combine(std::span<const Label> transcript, const StdFst &hypothesis,
               const CombineConfig &config) {
  config.Validate();
  RequireAcyclic(hypothesis, "Combine");
  StdFst hyp = Connect(ScaleWeightsToOne(ProjectOutput(hypothesis)));
  if (hyp.Empty()) throw Error("Combine: hypothesis lattice has an empty language");
  hyp.SetSymbols(nullptr);

  StdFst ref = LinearFst(transcript);
  StdFst aligned = config.lazy_edit ? LazyEditCompose(ref, hyp, config.edit_costs)
                                    : ExplicitEditCompose(ref, hyp, config.edit_costs);
  StdFst pruned = PruneToThreshold(aligned, config.prune_multiplier);
  StdFst words = RemoveEpsilons(ProjectOutput(pruned));
  if (config.strip_weights_after_prune) words = ScaleWeightsToOne(words);
  StdFst result = Minimize(Determinize(words));
  result.SetSymbols(hypothesis.Symbols());
  return result;
}

StdFst RescoreWithGrammar(const StdFst &t, const StdFst &g, std::string_view utterance) {
  if (!t.IsAcceptor()) throw Error("RescoreWithGrammar: lattice is not an acceptor");
  if (!g.IsAcceptor()) throw Error("RescoreWithGrammar: grammar is not an acceptor");
  StdFst out = Compose(t, g);
  if (out.Empty()) {
    throw Error("RescoreWithGrammar: no path of utterance '" + std::string(utterance) +
                "' is accepted by the grammar");
  }
  return out;
}

}  // namespace latcomb
