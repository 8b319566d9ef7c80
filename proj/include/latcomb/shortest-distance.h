// include/latcomb/shortest-distance.h

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

#ifndef LATCOMB_SHORTEST_DISTANCE_H_
#define LATCOMB_SHORTEST_DISTANCE_H_

#include <optional>
#include <vector>

#include "latcomb/fst-utils.h"

namespace latcomb {

// Forward distances: the Plus-sum of all path weights from the start state
// to each state.  Acyclic input only.
template <class W>
std::vector<W> ShortestDistance(const Fst<W> &fst) {
  auto order = TopSort(fst);
  if (!order) throw Error("ShortestDistance: input FST is cyclic");
  std::vector<W> alpha(fst.NumStates(), W::Zero());
  if (fst.Empty()) return alpha;
  alpha[fst.Start()] = W::One();
  for (StateId s : *order) {
    if (alpha[s].IsZero()) continue;
    for (const auto &arc : fst.Arcs(s))
      alpha[arc.nextstate] = Plus(alpha[arc.nextstate], Times(alpha[s], arc.weight));
  }
  return alpha;
}

// Backward distances: the Plus-sum over all paths from each state to a final
// state, final weights included.
template <class W>
std::vector<W> BackwardDistance(const Fst<W> &fst) {
  auto order = TopSort(fst);
  if (!order) throw Error("BackwardDistance: input FST is cyclic");
  std::vector<W> beta(fst.NumStates(), W::Zero());
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    StateId s = *it;
    W sum = fst.Final(s);
    for (const auto &arc : fst.Arcs(s))
      sum = Plus(sum, Times(arc.weight, beta[arc.nextstate]));
    beta[s] = sum;
  }
  return beta;
}

// Plus-sum of the weights of all accepting paths; Zero for an empty language.
// In the tropical semiring this is the cost of the best path.
template <class W>
W ShortestPathWeight(const Fst<W> &fst) {
  if (fst.Empty()) return W::Zero();
  return BackwardDistance(fst)[fst.Start()];
}

// Arcs of one minimum-cost path, or nullopt for an empty language.  Ties go
// to the path found first in topological order.
std::optional<std::vector<StdArc>> BestPathArcs(const StdFst &fst);

}  // namespace latcomb

#endif  // LATCOMB_SHORTEST_DISTANCE_H_
