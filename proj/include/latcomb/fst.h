// include/latcomb/fst.h

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

#ifndef LATCOMB_FST_H_
#define LATCOMB_FST_H_

#include <algorithm>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "latcomb/error.h"
#include "latcomb/symbol-table.h"
#include "latcomb/weight.h"

namespace latcomb {

using StateId = int32_t;
inline constexpr StateId kNoStateId = -1;

template <class W>
struct Arc {
  using Weight = W;
  Label ilabel = kEpsilon;
  Label olabel = kEpsilon;
  W weight = W::One();
  StateId nextstate = kNoStateId;

  Arc() = default;
  Arc(Label i, Label o, W w, StateId n)
      : ilabel(i), olabel(o), weight(w), nextstate(n) {}

  friend bool operator==(const Arc &a, const Arc &b) = default;
};

// Canonical arc order: (ilabel, olabel, nextstate), then cost.
template <class W>
bool ArcLess(const Arc<W> &a, const Arc<W> &b) {
  return std::make_tuple(a.ilabel, a.olabel, a.nextstate, a.weight.Value()) <
         std::make_tuple(b.ilabel, b.olabel, b.nextstate, b.weight.Value());
}

// Weighted transducer with explicit states.  The algorithms in this library
// never mutate their inputs; the mutators below exist for building results.
// A shared symbol table may be attached; label 0 is epsilon on both tapes.
template <class W>
class Fst {
 public:
  using Weight = W;
  using ArcType = Arc<W>;

  Fst() = default;

  StateId AddState() {
    states_.emplace_back();
    return static_cast<StateId>(states_.size() - 1);
  }
  void AddStates(StateId n) { states_.resize(states_.size() + n); }
  void SetStart(StateId s) { CheckState(s); start_ = s; }
  void SetFinal(StateId s, W w) { CheckState(s); states_[s].final = w; }
  void AddArc(StateId s, const ArcType &arc) {
    CheckState(s);
    CheckState(arc.nextstate);
    states_[s].arcs.push_back(arc);
  }
  void AddArc(StateId s, Label ilabel, Label olabel, W w, StateId next) {
    AddArc(s, ArcType(ilabel, olabel, w, next));
  }
  std::vector<ArcType> &MutableArcs(StateId s) { CheckState(s); return states_[s].arcs; }
  void SortArcs() {
    for (auto &state : states_)
      std::stable_sort(state.arcs.begin(), state.arcs.end(), ArcLess<W>);
  }
  void SetSymbols(std::shared_ptr<const SymbolTable> syms) { symbols_ = std::move(syms); }

  StateId Start() const { return start_; }
  StateId NumStates() const { return static_cast<StateId>(states_.size()); }
  W Final(StateId s) const { return states_[s].final; }
  bool IsFinal(StateId s) const { return !states_[s].final.IsZero(); }
  std::span<const ArcType> Arcs(StateId s) const { return states_[s].arcs; }
  size_t NumArcs(StateId s) const { return states_[s].arcs.size(); }
  size_t NumArcs() const {
    size_t n = 0;
    for (const auto &state : states_) n += state.arcs.size();
    return n;
  }
  const std::shared_ptr<const SymbolTable> &Symbols() const { return symbols_; }

  // True when there is no start state (the empty machine).
  bool Empty() const { return start_ == kNoStateId; }

  bool IsAcceptor() const {
    for (const auto &state : states_)
      for (const auto &arc : state.arcs)
        if (arc.ilabel != arc.olabel) return false;
    return true;
  }

  // Structural equality; symbol tables are not compared.
  friend bool operator==(const Fst &a, const Fst &b) {
    return a.start_ == b.start_ && a.states_ == b.states_;
  }

 private:
  struct State {
    std::vector<ArcType> arcs;
    W final = W::Zero();
    friend bool operator==(const State &a, const State &b) = default;
  };

  void CheckState(StateId s) const {
    if (s < 0 || s >= NumStates())
      throw Error("state id " + std::to_string(s) + " out of range");
  }

  std::vector<State> states_;
  StateId start_ = kNoStateId;
  std::shared_ptr<const SymbolTable> symbols_;
};

using StdArc = Arc<TropicalWeight>;
using StdFst = Fst<TropicalWeight>;
using LogArc = Arc<LogWeight>;
using LogFst = Fst<LogWeight>;

// Converts between semirings by copying cost values.
template <class To, class From>
Fst<To> ConvertWeights(const Fst<From> &in) {
  Fst<To> out;
  out.AddStates(in.NumStates());
  for (StateId s = 0; s < in.NumStates(); ++s) {
    out.SetFinal(s, To(in.Final(s).Value()));
    for (const auto &arc : in.Arcs(s))
      out.AddArc(s, arc.ilabel, arc.olabel, To(arc.weight.Value()), arc.nextstate);
  }
  if (!in.Empty()) out.SetStart(in.Start());
  out.SetSymbols(in.Symbols());
  return out;
}

}  // namespace latcomb

#endif  // LATCOMB_FST_H_
