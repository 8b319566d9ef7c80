// include/latcomb/minimize.h

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

#ifndef LATCOMB_MINIMIZE_H_
#define LATCOMB_MINIMIZE_H_

#include <cmath>
#include <map>
#include <tuple>
#include <vector>

#include "latcomb/shortest-distance.h"

namespace latcomb {

namespace internal {

// Grid used to compare pushed weights when merging states.
inline constexpr double kMinimizeDelta = 1e-12;

inline double QuantizeWeight(double v) {
  if (std::isinf(v)) return v;
  double q = std::nearbyint(v / kMinimizeDelta);
  return q == 0.0 ? 0.0 : q;
}

}  // namespace internal

// Minimizes an acyclic deterministic acceptor.  Weights are first pushed
// towards the start state so that states with equal weighted suffix
// languages carry identical arc weights; states are then merged bottom-up
// (reverse topological order) by their signature of final weight and
// (label, weight, successor class) triples.  The start state's total
// weight is put back on its outgoing arcs and final weight at the end.
template <class W>
Fst<W> Minimize(const Fst<W> &input) {
  if (!input.IsAcceptor()) throw Error("Minimize: input is not an acceptor");
  if (!IsDeterministic(input)) throw Error("Minimize: input is not deterministic");
  RequireAcyclic(input, "Minimize");
  const Fst<W> fst = Connect(input);
  Fst<W> out;
  out.SetSymbols(fst.Symbols());
  if (fst.Empty()) return out;

  const StateId n = fst.NumStates();
  std::vector<W> beta = BackwardDistance(fst);
  auto order = TopSort(fst);

  using Signature = std::tuple<double, std::vector<std::tuple<Label, double, StateId>>>;
  std::map<Signature, StateId> classes;
  std::vector<StateId> class_of(n, kNoStateId);
  std::vector<StateId> representative;
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    StateId s = *it;
    Signature sig;
    std::get<0>(sig) = internal::QuantizeWeight(Divide(fst.Final(s), beta[s]).Value());
    for (const auto &arc : fst.Arcs(s)) {
      W pushed = Divide(Times(arc.weight, beta[arc.nextstate]), beta[s]);
      std::get<1>(sig).emplace_back(arc.ilabel, internal::QuantizeWeight(pushed.Value()),
                                    class_of[arc.nextstate]);
    }
    std::sort(std::get<1>(sig).begin(), std::get<1>(sig).end());
    auto [found, inserted] = classes.emplace(sig, static_cast<StateId>(representative.size()));
    if (inserted) representative.push_back(s);
    class_of[s] = found->second;
  }

  const StateId num_classes = static_cast<StateId>(representative.size());
  out.AddStates(num_classes);
  const StateId start_class = class_of[fst.Start()];
  for (StateId c = 0; c < num_classes; ++c) {
    StateId s = representative[c];
    // Only the start state is in its class: in a trim acyclic machine no
    // other state can have the full language as its suffix language.
    W lead = c == start_class ? beta[s] : W::One();
    W final = Divide(fst.Final(s), beta[s]);
    if (!final.IsZero()) out.SetFinal(c, Times(lead, final));
    for (const auto &arc : fst.Arcs(s)) {
      W pushed = Divide(Times(arc.weight, beta[arc.nextstate]), beta[s]);
      out.AddArc(c, arc.ilabel, arc.olabel, Times(lead, pushed), class_of[arc.nextstate]);
    }
  }
  out.SetStart(start_class);
  return Canonicalize(out);
}

}  // namespace latcomb

#endif  // LATCOMB_MINIMIZE_H_
