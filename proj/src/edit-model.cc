// src/edit-model.cc

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

#include "latcomb/edit-model.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>
#include <vector>

#include "latcomb/compose.h"
#include "latcomb/fst-utils.h"

namespace latcomb {

void EditCosts::Validate() const {
  for (double c : {insertion, deletion, substitution, match})
    if (!std::isfinite(c)) throw Error("EditCosts: costs must be finite");
  if (!(match < std::min({insertion, deletion, substitution})))
    throw Error("EditCosts: match cost must be below insertion, deletion and substitution");
}

namespace {

StdFst EditFstOver(std::vector<Label> vocab, const EditCosts &costs) {
  costs.Validate();
  std::sort(vocab.begin(), vocab.end());
  vocab.erase(std::unique(vocab.begin(), vocab.end()), vocab.end());
  vocab.erase(std::remove(vocab.begin(), vocab.end(), kEpsilon), vocab.end());
  StdFst e;
  e.AddState();
  e.SetStart(0);
  e.SetFinal(0, TropicalWeight::One());
  for (Label w : vocab) {
    e.AddArc(0, kEpsilon, w, TropicalWeight(costs.insertion), 0);
    e.AddArc(0, w, kEpsilon, TropicalWeight(costs.deletion), 0);
  }
  for (Label wi : vocab)
    for (Label wj : vocab)
      e.AddArc(0, wi, wj, TropicalWeight(wi == wj ? costs.match : costs.substitution), 0);
  e.SortArcs();
  return e;
}

std::vector<Label> NonEpsilon(std::span<const Label> vocab) {
  std::vector<Label> out;
  for (Label l : vocab)
    if (l != kEpsilon) out.push_back(l);
  return out;
}

}  // namespace

StdFst BuildEditFst(std::span<const Label> vocab, const EditCosts &costs) {
  std::vector<Label> words = NonEpsilon(vocab);
  if (words.empty()) throw Error("BuildEditFst: empty vocabulary");
  return EditFstOver(std::move(words), costs);
}

StdFst BuildEditFst(const SymbolTable &syms, const EditCosts &costs) {
  return BuildEditFst(syms.Labels(), costs);
}

StdFst ExplicitEditCompose(const StdFst &r, const StdFst &h, const EditCosts &costs) {
  std::vector<Label> vocab = CollectLabels(r, true);
  std::vector<Label> hyp = CollectLabels(h, false);
  vocab.insert(vocab.end(), hyp.begin(), hyp.end());
  StdFst e = EditFstOver(std::move(vocab), costs);
  e.SetSymbols(r.Symbols() ? r.Symbols() : h.Symbols());
  return Compose(Compose(r, e), h);
}

StdFst LazyEditCompose(const StdFst &r, const StdFst &h, const EditCosts &costs) {
  costs.Validate();
  CheckComposeSymbols(r, h);
  if (!r.IsAcceptor()) throw Error("LazyEditCompose: transcript is not an acceptor");
  if (HasEpsilons(r)) throw Error("LazyEditCompose: transcript has epsilon arcs");
  if (!h.IsAcceptor()) throw Error("LazyEditCompose: hypothesis is not an acceptor");
  RequireAcyclic(h, "LazyEditCompose");

  StdFst out;
  out.SetSymbols(r.Symbols() ? r.Symbols() : h.Symbols());
  if (r.Empty() || h.Empty()) return out;

  const TropicalWeight ins(costs.insertion), del(costs.deletion);
  using Key = std::tuple<StateId, StateId, int>;
  std::map<Key, StateId> ids;
  std::vector<Key> queue;
  auto find_or_add = [&](StateId p, StateId q, int filter) {
    auto [it, inserted] = ids.emplace(Key(p, q, filter), static_cast<StateId>(queue.size()));
    if (inserted) {
      queue.emplace_back(p, q, filter);
      out.AddState();
    }
    return it->second;
  };

  out.SetStart(find_or_add(r.Start(), h.Start(), 0));
  for (size_t head = 0; head < queue.size(); ++head) {
    const auto [p, q, filter] = queue[head];
    const StateId src = static_cast<StateId>(head);
    if (r.IsFinal(p) && h.IsFinal(q)) out.SetFinal(src, Times(r.Final(p), h.Final(q)));
    for (const auto &ra : r.Arcs(p)) {
      if (filter == 0)
        out.AddArc(src, ra.ilabel, kEpsilon, Times(ra.weight, del),
                   find_or_add(ra.nextstate, q, 0));
      for (const auto &ha : h.Arcs(q)) {
        if (ha.ilabel == kEpsilon) continue;
        TropicalWeight edit(ra.ilabel == ha.ilabel ? costs.match : costs.substitution);
        out.AddArc(src, ra.ilabel, ha.ilabel, Times(Times(ra.weight, edit), ha.weight),
                   find_or_add(ra.nextstate, ha.nextstate, 0));
      }
    }
    for (const auto &ha : h.Arcs(q)) {
      if (ha.ilabel == kEpsilon) {
        out.AddArc(src, kEpsilon, kEpsilon, ha.weight, find_or_add(p, ha.nextstate, 1));
      } else {
        out.AddArc(src, kEpsilon, ha.ilabel, Times(ins, ha.weight),
                   find_or_add(p, ha.nextstate, 0));
      }
    }
  }
  StdFst trimmed = Connect(out);
  trimmed.SortArcs();
  return trimmed;
}

}  // namespace latcomb
