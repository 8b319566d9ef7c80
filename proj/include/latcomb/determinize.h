// include/latcomb/determinize.h

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

#ifndef LATCOMB_DETERMINIZE_H_
#define LATCOMB_DETERMINIZE_H_

#include <map>
#include <utility>
#include <vector>

#include "latcomb/fst-utils.h"

namespace latcomb {

// Weighted subset construction for acyclic, epsilon-free acceptors.  Each
// output state is a set of (input state, residual weight) pairs; the arc
// leaving it on label x carries the Plus-sum of all x-transitions and the
// residuals are renormalised by that sum.  Acyclicity guarantees
// termination for any semiring with division.
template <class W>
Fst<W> Determinize(const Fst<W> &input) {
  if (!input.IsAcceptor()) throw Error("Determinize: input is not an acceptor");
  for (StateId s = 0; s < input.NumStates(); ++s)
    for (const auto &arc : input.Arcs(s))
      if (arc.ilabel == kEpsilon) throw Error("Determinize: input has epsilon arcs");
  RequireAcyclic(input, "Determinize");
  const Fst<W> fst = Connect(input);

  Fst<W> out;
  out.SetSymbols(fst.Symbols());
  if (fst.Empty()) return out;

  // Residuals are keyed by their exact cost; near-equal subsets simply stay
  // distinct states.
  using Subset = std::vector<std::pair<StateId, double>>;
  std::map<Subset, StateId> ids;
  std::vector<Subset> subsets;
  auto find_or_add = [&](Subset subset) {
    auto [it, inserted] = ids.emplace(subset, static_cast<StateId>(subsets.size()));
    if (inserted) {
      subsets.push_back(std::move(subset));
      out.AddState();
    }
    return it->second;
  };

  out.SetStart(find_or_add({{fst.Start(), W::One().Value()}}));
  for (size_t head = 0; head < subsets.size(); ++head) {
    const Subset subset = subsets[head];
    StateId src = static_cast<StateId>(head);
    W final = W::Zero();
    // (label, next state, residual ⊗ arc weight)
    std::vector<std::tuple<Label, StateId, W>> moves;
    for (const auto &[q, residual_value] : subset) {
      W residual(residual_value);
      if (fst.IsFinal(q)) final = Plus(final, Times(residual, fst.Final(q)));
      for (const auto &arc : fst.Arcs(q)) {
        if (arc.weight.IsZero()) continue;
        moves.emplace_back(arc.ilabel, arc.nextstate, Times(residual, arc.weight));
      }
    }
    out.SetFinal(src, final);
    std::stable_sort(moves.begin(), moves.end(), [](const auto &x, const auto &y) {
      return std::tie(std::get<0>(x), std::get<1>(x)) < std::tie(std::get<0>(y), std::get<1>(y));
    });
    for (size_t i = 0; i < moves.size();) {
      Label label = std::get<0>(moves[i]);
      size_t end = i;
      W total = W::Zero();
      while (end < moves.size() && std::get<0>(moves[end]) == label)
        total = Plus(total, std::get<2>(moves[end++]));
      Subset next;
      for (size_t j = i; j < end;) {
        StateId q = std::get<1>(moves[j]);
        W sum = W::Zero();
        while (j < end && std::get<1>(moves[j]) == q) sum = Plus(sum, std::get<2>(moves[j++]));
        next.emplace_back(q, Divide(sum, total).Value());
      }
      StateId dst = find_or_add(std::move(next));
      out.AddArc(src, label, label, total, dst);
      i = end;
    }
  }
  out.SortArcs();
  return out;
}

}  // namespace latcomb

#endif  // LATCOMB_DETERMINIZE_H_
