// src/prune.cc

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

#include "latcomb/prune.h"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "latcomb/shortest-distance.h"

namespace latcomb {

StdFst PruneToThreshold(const StdFst &fst, TropicalWeight threshold) {
  RequireAcyclic(fst, "PruneToThreshold");
  if (!threshold.Member() || threshold.Value() < 0.0)
    throw Error("PruneToThreshold: threshold must be a cost >= 0");
  StdFst out;
  out.SetSymbols(fst.Symbols());
  if (fst.Empty()) return out;
  const std::vector<TropicalWeight> beta = BackwardDistance(fst);
  const TropicalWeight best = beta[fst.Start()];
  if (best.IsZero()) return out;
  if (threshold.IsZero()) return Connect(fst);

  const double limit = best.Value() + threshold.Value() + kPruneDelta;
  auto within = [&](double cost) { return cost <= limit; };

  // Output states are (input state, cost accumulated so far).
  using Key = std::pair<StateId, double>;
  std::map<Key, StateId> ids;
  std::vector<Key> queue;
  auto find_or_add = [&](StateId s, double cost) {
    auto [it, inserted] = ids.emplace(Key(s, cost), static_cast<StateId>(queue.size()));
    if (inserted) {
      queue.emplace_back(s, cost);
      out.AddState();
    }
    return it->second;
  };

  out.SetStart(find_or_add(fst.Start(), 0.0));
  for (size_t head = 0; head < queue.size(); ++head) {
    const auto [s, cost] = queue[head];
    const StateId src = static_cast<StateId>(head);
    if (fst.IsFinal(s) && within(cost + fst.Final(s).Value()))
      out.SetFinal(src, fst.Final(s));
    for (const auto &arc : fst.Arcs(s)) {
      if (arc.weight.IsZero() || beta[arc.nextstate].IsZero()) continue;
      double reached = cost + arc.weight.Value();
      if (!within(reached + beta[arc.nextstate].Value())) continue;
      out.AddArc(src, arc.ilabel, arc.olabel, arc.weight, find_or_add(arc.nextstate, reached));
    }
  }
  out.SortArcs();
  return out;
}

std::optional<std::vector<StdArc>> BestPathArcs(const StdFst &fst) {
  auto order = TopSort(fst);
  if (!order) throw Error("BestPathArcs: input FST is cyclic");
  if (fst.Empty()) return std::nullopt;
  const StateId n = fst.NumStates();
  std::vector<TropicalWeight> alpha(n, TropicalWeight::Zero());
  std::vector<std::pair<StateId, size_t>> back(n, {kNoStateId, 0});
  alpha[fst.Start()] = TropicalWeight::One();
  for (StateId s : *order) {
    if (alpha[s].IsZero()) continue;
    auto arcs = fst.Arcs(s);
    for (size_t i = 0; i < arcs.size(); ++i) {
      TropicalWeight reached = Times(alpha[s], arcs[i].weight);
      if (reached.Value() < alpha[arcs[i].nextstate].Value()) {
        alpha[arcs[i].nextstate] = reached;
        back[arcs[i].nextstate] = {s, i};
      }
    }
  }
  StateId best_final = kNoStateId;
  TropicalWeight best = TropicalWeight::Zero();
  for (StateId s : *order) {
    TropicalWeight total = Times(alpha[s], fst.Final(s));
    if (total.Value() < best.Value()) {
      best = total;
      best_final = s;
    }
  }
  if (best_final == kNoStateId) return std::nullopt;
  std::vector<StdArc> path;
  for (StateId s = best_final; back[s].first != kNoStateId; s = back[s].first)
    path.push_back(fst.Arcs(back[s].first)[back[s].second]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace latcomb
