// include/latcomb/paths.h

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

#ifndef LATCOMB_PATHS_H_
#define LATCOMB_PATHS_H_

#include <cstddef>
#include <vector>

#include "latcomb/fst-utils.h"

namespace latcomb {

template <class W>
struct Path {
  std::vector<Label> ilabels;  // epsilons omitted
  std::vector<Label> olabels;  // epsilons omitted
  W weight = W::One();
};

template <class W>
using PathSet = std::vector<Path<W>>;

// Every accepting path of an acyclic machine, in depth-first order.  Throws
// once more than `cap` paths have been found.
template <class W>
PathSet<W> EnumeratePaths(const Fst<W> &fst, size_t cap) {
  RequireAcyclic(fst, "EnumeratePaths");
  PathSet<W> paths;
  if (fst.Empty()) return paths;
  Path<W> current;
  auto visit = [&](auto &&self, StateId s) -> void {
    if (fst.IsFinal(s)) {
      if (paths.size() == cap)
        throw Error("EnumeratePaths: more than " + std::to_string(cap) +
                    " paths; raise the cap or prune first");
      Path<W> done = current;
      done.weight = Times(current.weight, fst.Final(s));
      paths.push_back(std::move(done));
    }
    for (const auto &arc : fst.Arcs(s)) {
      if (arc.weight.IsZero()) continue;
      Path<W> saved = current;
      if (arc.ilabel != kEpsilon) current.ilabels.push_back(arc.ilabel);
      if (arc.olabel != kEpsilon) current.olabels.push_back(arc.olabel);
      current.weight = Times(current.weight, arc.weight);
      self(self, arc.nextstate);
      current = std::move(saved);
    }
  };
  visit(visit, fst.Start());
  return paths;
}

// Number of accepting paths, saturating at SIZE_MAX.  Acyclic input only.
template <class W>
size_t CountPaths(const Fst<W> &fst) {
  auto order = TopSort(fst);
  if (!order) throw Error("CountPaths: input FST is cyclic");
  if (fst.Empty()) return 0;
  std::vector<size_t> suffix(fst.NumStates(), 0);
  auto add = [](size_t x, size_t y) { return x > SIZE_MAX - y ? SIZE_MAX : x + y; };
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    StateId s = *it;
    size_t count = fst.IsFinal(s) ? 1 : 0;
    for (const auto &arc : fst.Arcs(s))
      if (!arc.weight.IsZero()) count = add(count, suffix[arc.nextstate]);
    suffix[s] = count;
  }
  return suffix[fst.Start()];
}

}  // namespace latcomb

#endif  // LATCOMB_PATHS_H_
