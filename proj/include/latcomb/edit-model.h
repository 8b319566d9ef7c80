// include/latcomb/edit-model.h

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

#ifndef LATCOMB_EDIT_MODEL_H_
#define LATCOMB_EDIT_MODEL_H_

#include <span>

#include "latcomb/fst.h"

namespace latcomb {

// Per-operation costs of the edit transducer.  The combination defaults
// make every edit free and reward each match with -1, so minimum-cost
// alignments are exactly the ones with the most matched words.
struct EditCosts {
  double insertion = 0.0;
  double deletion = 0.0;
  double substitution = 0.0;
  double match = -1.0;

  // Unit-cost Levenshtein distance.
  static EditCosts Levenshtein() { return {1.0, 1.0, 1.0, 0.0}; }

  // Throws unless match < min(insertion, deletion, substitution) and all
  // costs are finite.
  void Validate() const;
};

// One-state edit transducer over `vocab` (non-epsilon labels, duplicates
// ignored): insertions (eps:w), deletions (w:eps) and every pair w_i:w_j,
// i.e. (|V|+1)^2 - 1 arcs.  The state is start and final with weight One.
// Throws on an empty vocabulary.
StdFst BuildEditFst(std::span<const Label> vocab, const EditCosts &costs);
// Same, over every non-epsilon symbol of `syms`.
StdFst BuildEditFst(const SymbolTable &syms, const EditCosts &costs);

// r ∘ E ∘ h with E built over the union of the labels on r and h, composed
// explicitly.  Used as the reference for LazyEditCompose.
StdFst ExplicitEditCompose(const StdFst &r, const StdFst &h, const EditCosts &costs);

// r ∘ E ∘ h without materialising E.  States are (r state, h state, filter)
// triples and edit arcs are generated on demand:
//   deletion      r word : eps    advances r
//   insertion     eps : h word    advances h
//   substitution  r word : h word advances both (match cost when equal)
//   h epsilon     eps : eps       advances h
// The filter bit reproduces the epsilon sequencing of Compose, so the
// result has the same paths as the explicit composition, not only the same
// tropical language.  `r` must be an epsilon-free acceptor and `h` an
// acyclic acceptor; both may carry weights.
StdFst LazyEditCompose(const StdFst &r, const StdFst &h, const EditCosts &costs);

}  // namespace latcomb

#endif  // LATCOMB_EDIT_MODEL_H_
