// include/latcomb/combiner.h

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

#ifndef LATCOMB_COMBINER_H_
#define LATCOMB_COMBINER_H_

#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latcomb/edit-model.h"
#include "latcomb/fst.h"

namespace latcomb {

// Stands in for transcript words missing from the symbol table.  It never
// occurs on a hypothesis lattice, so such words can only be deleted.
inline constexpr Label kUnmatchableLabel = std::numeric_limits<Label>::max();

struct CombineConfig {
  // Paths of R∘E∘H within this cost of the best one survive pruning.  With
  // the default edit costs an offset of k keeps hypotheses whose match count
  // is within k of the maximum.
  TropicalWeight prune_multiplier = TropicalWeight::One();
  EditCosts edit_costs;
  // Replace the residual match rewards by One() before determinization.
  bool strip_weights_after_prune = true;
  // Generate edit arcs on demand instead of building E.
  bool lazy_edit = true;

  void Validate() const;
};

// Maps transcript words to labels; unknown words become kUnmatchableLabel.
std::vector<Label> TranscriptToLabels(std::span<const std::string> words,
                                      const SymbolTable &syms);

// Merges a transcript with a hypothesis lattice:
//
//   T = min(det(rmeps(proj_out(prune(R ∘ E ∘ H)))))
//
// R is the linear acceptor of the transcript and H the hypothesis with its
// costs removed.  With the default configuration T accepts exactly the
// hypothesis word sequences that share the most words with the transcript:
// where they agree the lattice collapses onto the transcript, where they
// share nothing the whole hypothesis is kept.  The hypothesis is projected
// onto its output (word) tape first.  Throws for a cyclic hypothesis or an
// empty hypothesis language.
StdFst Combine(std::span<const Label> transcript, const StdFst &hypothesis,
               const CombineConfig &config = {});

// t ∘ g: restores language-model costs on a combined lattice.  Paths of `t`
// outside the support of `g` disappear; an empty result is an error naming
// `utterance`.
StdFst RescoreWithGrammar(const StdFst &t, const StdFst &g, std::string_view utterance = "");

}  // namespace latcomb

#endif  // LATCOMB_COMBINER_H_
