// include/latcomb/fst-utils.h

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

#ifndef LATCOMB_FST_UTILS_H_
#define LATCOMB_FST_UTILS_H_

#include <deque>
#include <map>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "latcomb/fst.h"

namespace latcomb {

// Topological order of all states (Kahn), or nullopt if `fst` has a cycle.
template <class W>
std::optional<std::vector<StateId>> TopSort(const Fst<W> &fst) {
  const StateId n = fst.NumStates();
  std::vector<int> indegree(n, 0);
  for (StateId s = 0; s < n; ++s)
    for (const auto &arc : fst.Arcs(s)) ++indegree[arc.nextstate];
  std::vector<StateId> order;
  order.reserve(n);
  for (StateId s = 0; s < n; ++s)
    if (indegree[s] == 0) order.push_back(s);
  for (size_t head = 0; head < order.size(); ++head) {
    for (const auto &arc : fst.Arcs(order[head]))
      if (--indegree[arc.nextstate] == 0) order.push_back(arc.nextstate);
  }
  if (static_cast<StateId>(order.size()) != n) return std::nullopt;
  return order;
}

template <class W>
bool IsAcyclic(const Fst<W> &fst) {
  return TopSort(fst).has_value();
}

template <class W>
void RequireAcyclic(const Fst<W> &fst, const char *op) {
  if (!IsAcyclic(fst)) throw Error(std::string(op) + ": input FST is cyclic");
}

namespace internal {

// Copies the states flagged in `keep` into a new machine, renumbering them
// through `new_id`.  Arcs into dropped states are removed.
template <class W>
Fst<W> CopySubset(const Fst<W> &fst, const std::vector<StateId> &new_id,
                  StateId num_kept) {
  Fst<W> out;
  out.SetSymbols(fst.Symbols());
  if (fst.Empty() || new_id[fst.Start()] == kNoStateId) return out;
  out.AddStates(num_kept);
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    StateId ns = new_id[s];
    if (ns == kNoStateId) continue;
    out.SetFinal(ns, fst.Final(s));
    for (const auto &arc : fst.Arcs(s)) {
      if (new_id[arc.nextstate] == kNoStateId || arc.weight.IsZero()) continue;
      out.AddArc(ns, arc.ilabel, arc.olabel, arc.weight, new_id[arc.nextstate]);
    }
  }
  out.SetStart(new_id[fst.Start()]);
  return out;
}

}  // namespace internal

// Removes states that are not both accessible and coaccessible.  Surviving
// states keep their relative order.  An empty language yields a machine with
// no states.
template <class W>
Fst<W> Connect(const Fst<W> &fst) {
  const StateId n = fst.NumStates();
  if (fst.Empty()) {
    Fst<W> out;
    out.SetSymbols(fst.Symbols());
    return out;
  }
  std::vector<char> access(n, 0), coaccess(n, 0);
  std::vector<std::vector<StateId>> preds(n);
  std::vector<StateId> stack = {fst.Start()};
  access[fst.Start()] = 1;
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (const auto &arc : fst.Arcs(s)) {
      if (arc.weight.IsZero()) continue;
      preds[arc.nextstate].push_back(s);
      if (!access[arc.nextstate]) {
        access[arc.nextstate] = 1;
        stack.push_back(arc.nextstate);
      }
    }
  }
  for (StateId s = 0; s < n; ++s) {
    if (access[s] && fst.IsFinal(s)) {
      coaccess[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (StateId p : preds[s]) {
      if (!coaccess[p]) {
        coaccess[p] = 1;
        stack.push_back(p);
      }
    }
  }
  std::vector<StateId> new_id(n, kNoStateId);
  StateId kept = 0;
  for (StateId s = 0; s < n; ++s)
    if (access[s] && coaccess[s]) new_id[s] = kept++;
  return internal::CopySubset(fst, new_id, kept);
}

// Renumbers states in breadth-first order from the start state (arcs visited
// in canonical order) and sorts arcs.  Unreachable states are dropped.
template <class W>
Fst<W> Canonicalize(const Fst<W> &fst) {
  Fst<W> sorted = fst;
  sorted.SortArcs();
  const StateId n = sorted.NumStates();
  std::vector<StateId> new_id(n, kNoStateId);
  if (sorted.Empty()) return internal::CopySubset(sorted, new_id, 0);
  std::vector<StateId> queue = {sorted.Start()};
  new_id[sorted.Start()] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    for (const auto &arc : sorted.Arcs(queue[head])) {
      if (new_id[arc.nextstate] == kNoStateId) {
        new_id[arc.nextstate] = static_cast<StateId>(queue.size());
        queue.push_back(arc.nextstate);
      }
    }
  }
  Fst<W> out = internal::CopySubset(sorted, new_id, static_cast<StateId>(queue.size()));
  // CopySubset walks states in old order; restore canonical arc order.
  out.SortArcs();
  return out;
}

// Sums (with Plus) arcs that share source, labels, and destination.  The
// weighted language is unchanged.
template <class W>
Fst<W> MergeParallelArcs(const Fst<W> &fst) {
  Fst<W> out = fst;
  for (StateId s = 0; s < out.NumStates(); ++s) {
    auto &arcs = out.MutableArcs(s);
    std::map<std::tuple<Label, Label, StateId>, W> merged;
    for (const auto &arc : arcs) {
      auto key = std::make_tuple(arc.ilabel, arc.olabel, arc.nextstate);
      auto [it, inserted] = merged.emplace(key, arc.weight);
      if (!inserted) it->second = Plus(it->second, arc.weight);
    }
    arcs.clear();
    for (const auto &[key, w] : merged)
      arcs.emplace_back(std::get<0>(key), std::get<1>(key), w, std::get<2>(key));
  }
  return out;
}

// Copies output labels onto the input tape.
template <class W>
Fst<W> ProjectOutput(const Fst<W> &fst) {
  Fst<W> out = fst;
  for (StateId s = 0; s < out.NumStates(); ++s)
    for (auto &arc : out.MutableArcs(s)) arc.ilabel = arc.olabel;
  out.SortArcs();
  return out;
}

template <class W>
Fst<W> ProjectInput(const Fst<W> &fst) {
  Fst<W> out = fst;
  for (StateId s = 0; s < out.NumStates(); ++s)
    for (auto &arc : out.MutableArcs(s)) arc.olabel = arc.ilabel;
  out.SortArcs();
  return out;
}

// Same topology; every arc weight and every non-Zero final weight becomes One.
template <class W>
Fst<W> ScaleWeightsToOne(const Fst<W> &fst) {
  Fst<W> out = fst;
  for (StateId s = 0; s < out.NumStates(); ++s) {
    for (auto &arc : out.MutableArcs(s)) arc.weight = W::One();
    if (out.IsFinal(s)) out.SetFinal(s, W::One());
  }
  return out;
}

// Linear acceptor of `words` with all weights One.  Every label must be
// non-epsilon and, when `syms` is given, bound in it.
template <class W = TropicalWeight>
Fst<W> LinearFst(std::span<const Label> words,
                 std::shared_ptr<const SymbolTable> syms = nullptr) {
  Fst<W> out;
  out.SetSymbols(syms);
  StateId s = out.AddState();
  out.SetStart(s);
  for (Label w : words) {
    if (w == kEpsilon) throw Error("LinearFst: epsilon in word sequence");
    if (syms && !syms->HasLabel(w))
      throw Error("LinearFst: label " + std::to_string(w) + " not in symbol table");
    StateId next = out.AddState();
    out.AddArc(s, w, w, W::One(), next);
    s = next;
  }
  out.SetFinal(s, W::One());
  return out;
}

// No state has two outgoing arcs with the same input label, and no arc has
// an epsilon input label.
template <class W>
bool IsDeterministic(const Fst<W> &fst) {
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    std::vector<Label> labels;
    for (const auto &arc : fst.Arcs(s)) {
      if (arc.ilabel == kEpsilon) return false;
      labels.push_back(arc.ilabel);
    }
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) return false;
  }
  return true;
}

template <class W>
bool HasEpsilons(const Fst<W> &fst) {
  for (StateId s = 0; s < fst.NumStates(); ++s)
    for (const auto &arc : fst.Arcs(s))
      if (arc.ilabel == kEpsilon || arc.olabel == kEpsilon) return true;
  return false;
}

// Distinct non-epsilon labels on one tape, sorted.
template <class W>
std::vector<Label> CollectLabels(const Fst<W> &fst, bool output_tape) {
  std::vector<Label> labels;
  for (StateId s = 0; s < fst.NumStates(); ++s)
    for (const auto &arc : fst.Arcs(s)) {
      Label l = output_tape ? arc.olabel : arc.ilabel;
      if (l != kEpsilon) labels.push_back(l);
    }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

}  // namespace latcomb

#endif  // LATCOMB_FST_UTILS_H_
