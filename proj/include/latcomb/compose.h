// include/latcomb/compose.h

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

#ifndef LATCOMB_COMPOSE_H_
#define LATCOMB_COMPOSE_H_

#include <map>
#include <tuple>
#include <vector>

#include "latcomb/fst-utils.h"

namespace latcomb {

// Throws unless the output side of `a` and the input side of `b` can share
// labels: both tables absent, one absent, or both equal.
template <class W>
void CheckComposeSymbols(const Fst<W> &a, const Fst<W> &b) {
  if (a.Symbols() && b.Symbols() && a.Symbols() != b.Symbols() &&
      !(*a.Symbols() == *b.Symbols()))
    throw Error("Compose: symbol tables of the operands differ");
}

// Weighted composition.  Epsilon moves are sequenced by a two-state filter:
// in filter state 0 either machine may take an epsilon move on its own (an
// output-epsilon arc of `a`, or an input-epsilon arc of `b`); once `b` has
// moved alone the filter enters state 1, where `a` may not move alone until
// the next matched label.  Each pair of paths is therefore counted once.
//
// The result is trimmed, with states numbered in discovery order.
template <class W>
Fst<W> Compose(const Fst<W> &a, const Fst<W> &b) {
  CheckComposeSymbols(a, b);
  Fst<W> out;
  out.SetSymbols(a.Symbols() ? a.Symbols() : b.Symbols());
  if (a.Empty() || b.Empty()) return out;

  // Arcs of b per state, ordered by input label for range lookup.
  std::vector<std::vector<Arc<W>>> b_arcs(b.NumStates());
  for (StateId s = 0; s < b.NumStates(); ++s) {
    auto arcs = b.Arcs(s);
    b_arcs[s].assign(arcs.begin(), arcs.end());
    std::stable_sort(b_arcs[s].begin(), b_arcs[s].end(),
                     [](const Arc<W> &x, const Arc<W> &y) { return x.ilabel < y.ilabel; });
  }

  using Tuple = std::tuple<StateId, StateId, int>;
  std::map<Tuple, StateId> ids;
  std::vector<Tuple> queue;
  auto find_or_add = [&](StateId s1, StateId s2, int filter) {
    Tuple key(s1, s2, filter);
    auto [it, inserted] = ids.emplace(key, static_cast<StateId>(queue.size()));
    if (inserted) {
      queue.push_back(key);
      out.AddState();
    }
    return it->second;
  };

  out.SetStart(find_or_add(a.Start(), b.Start(), 0));
  for (size_t head = 0; head < queue.size(); ++head) {
    auto [s1, s2, filter] = queue[head];
    StateId src = static_cast<StateId>(head);
    if (a.IsFinal(s1) && b.IsFinal(s2))
      out.SetFinal(src, Times(a.Final(s1), b.Final(s2)));
    for (const auto &arc1 : a.Arcs(s1)) {
      if (arc1.olabel == kEpsilon) {
        if (filter == 0) {
          StateId dst = find_or_add(arc1.nextstate, s2, 0);
          out.AddArc(src, arc1.ilabel, kEpsilon, arc1.weight, dst);
        }
        continue;
      }
      const auto &arcs2 = b_arcs[s2];
      auto lo = std::lower_bound(arcs2.begin(), arcs2.end(), arc1.olabel,
                                 [](const Arc<W> &x, Label l) { return x.ilabel < l; });
      for (auto it = lo; it != arcs2.end() && it->ilabel == arc1.olabel; ++it) {
        StateId dst = find_or_add(arc1.nextstate, it->nextstate, 0);
        out.AddArc(src, arc1.ilabel, it->olabel, Times(arc1.weight, it->weight), dst);
      }
    }
    for (const auto &arc2 : b_arcs[s2]) {
      if (arc2.ilabel != kEpsilon) break;
      StateId dst = find_or_add(s1, arc2.nextstate, 1);
      out.AddArc(src, kEpsilon, arc2.olabel, arc2.weight, dst);
    }
  }
  Fst<W> trimmed = Connect(out);
  trimmed.SortArcs();
  return trimmed;
}

}  // namespace latcomb

#endif  // LATCOMB_COMPOSE_H_
