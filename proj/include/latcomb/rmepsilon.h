// include/latcomb/rmepsilon.h

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

#ifndef LATCOMB_RMEPSILON_H_
#define LATCOMB_RMEPSILON_H_

#include <vector>

#include "latcomb/fst-utils.h"

namespace latcomb {

// Removes arcs whose input and output labels are both epsilon, preserving
// the weighted language exactly.  Each state receives the non-epsilon arcs
// and final weight of every state in its epsilon closure, weighted by the
// Plus-sum of the epsilon paths leading there.  Epsilon cycles are rejected;
// other cycles are allowed.
template <class W>
Fst<W> RemoveEpsilons(const Fst<W> &fst) {
  const StateId n = fst.NumStates();
  auto is_eps = [](const Arc<W> &arc) {
    return arc.ilabel == kEpsilon && arc.olabel == kEpsilon;
  };

  Fst<W> eps_graph;
  eps_graph.AddStates(n);
  for (StateId s = 0; s < n; ++s)
    for (const auto &arc : fst.Arcs(s))
      if (is_eps(arc)) eps_graph.AddArc(s, arc);
  auto order = TopSort(eps_graph);
  if (!order) throw Error("RemoveEpsilons: epsilon cycle in input");
  std::vector<StateId> rank(n);
  for (StateId i = 0; i < n; ++i) rank[(*order)[i]] = i;

  Fst<W> out;
  out.SetSymbols(fst.Symbols());
  if (fst.Empty()) return out;
  out.AddStates(n);
  out.SetStart(fst.Start());

  std::vector<W> dist(n, W::Zero());
  std::vector<char> seen(n, 0);
  for (StateId s = 0; s < n; ++s) {
    // Epsilon closure of s, relaxed in topological order.
    std::vector<StateId> closure = {s};
    seen[s] = 1;
    for (size_t i = 0; i < closure.size(); ++i)
      for (const auto &arc : eps_graph.Arcs(closure[i]))
        if (!seen[arc.nextstate]) {
          seen[arc.nextstate] = 1;
          closure.push_back(arc.nextstate);
        }
    std::sort(closure.begin(), closure.end(),
              [&](StateId x, StateId y) { return rank[x] < rank[y]; });
    dist[s] = W::One();
    W final = W::Zero();
    for (StateId q : closure) {
      for (const auto &arc : eps_graph.Arcs(q))
        dist[arc.nextstate] = Plus(dist[arc.nextstate], Times(dist[q], arc.weight));
    }
    for (StateId q : closure) {
      if (fst.IsFinal(q)) final = Plus(final, Times(dist[q], fst.Final(q)));
      for (const auto &arc : fst.Arcs(q)) {
        if (is_eps(arc)) continue;
        out.AddArc(s, arc.ilabel, arc.olabel, Times(dist[q], arc.weight), arc.nextstate);
      }
    }
    out.SetFinal(s, final);
    for (StateId q : closure) {
      dist[q] = W::Zero();
      seen[q] = 0;
    }
  }
  Fst<W> result = Connect(MergeParallelArcs(out));
  result.SortArcs();
  return result;
}

}  // namespace latcomb

#endif  // LATCOMB_RMEPSILON_H_
