// src/grammar-fst.cc

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

#include "latcomb/grammar-fst.h"

#include <cmath>
#include <deque>
#include <map>

#include "latcomb/error.h"

namespace latcomb {

namespace {

TropicalWeight CostOf(double prob) {
  return prob > 0.0 ? TropicalWeight(-std::log(prob)) : TropicalWeight::Zero();
}

}  // namespace

StdFst ToGrammarFst(const NGramModel &model, const GrammarOptions &options) {
  for (const auto &[context, entry] : model.Contexts())
    if (context.size() >= 2 &&
        !model.FindContext(std::span<const Label>(context).first(context.size() - 1)))
      throw Error("ToGrammarFst: context without its prefix context");

  StdFst g;
  g.SetSymbols(model.VocabPtr());
  std::map<NGramModel::Context, StateId> ids;
  std::deque<NGramModel::Context> queue;
  auto state_of = [&](NGramModel::Context history) {
    auto [it, inserted] = ids.emplace(history, g.NumStates());
    if (inserted) {
      g.AddState();
      queue.push_back(std::move(history));
    }
    return it->second;
  };
  auto next_state = [&](const NGramModel::Context &history, Label word) {
    NGramModel::Context extended = history;
    extended.push_back(word);
    return state_of(model.ReduceHistory(extended));
  };

  const Label bos = kBosLabel;
  g.SetStart(state_of(model.ReduceHistory(std::span<const Label>(&bos, 1))));
  const auto words = model.PredictiveLabels();
  while (!queue.empty()) {
    NGramModel::Context history = std::move(queue.front());
    queue.pop_front();
    const StateId s = ids.at(history);
    if (!options.epsilon_backoff) {
      for (Label w : words) {
        if (w == kEosLabel) continue;
        double p = model.Prob(history, w);
        if (p > 0.0) g.AddArc(s, w, w, CostOf(p), next_state(history, w));
      }
      g.SetFinal(s, CostOf(model.Prob(history, kEosLabel)));
      continue;
    }
    const NGramModel::ContextEntry *entry = model.FindContext(history);
    if (entry) {
      for (const auto &[w, p] : entry->probs) {
        if (w == kEosLabel) g.SetFinal(s, CostOf(p));
        else g.AddArc(s, w, w, CostOf(p), next_state(history, w));
      }
    }
    if (!history.empty()) {
      double backoff = entry ? entry->backoff : 1.0;
      StateId lower = state_of(
          model.ReduceHistory(std::span<const Label>(history).subspan(1)));
      g.AddArc(s, kEpsilon, kEpsilon, CostOf(backoff), lower);
    }
  }
  g.SortArcs();
  return g;
}

StdFst ApplyWordReward(const StdFst &g, double reward) {
  if (!std::isfinite(reward) || reward < 0.0)
    throw Error("ApplyWordReward: reward must be finite and non-negative");
  StdFst out = g;
  for (StateId s = 0; s < out.NumStates(); ++s)
    for (auto &arc : out.MutableArcs(s))
      if (arc.olabel != kEpsilon && !arc.weight.IsZero())
        arc.weight = TropicalWeight(arc.weight.Value() - reward);
  return out;
}

}  // namespace latcomb
