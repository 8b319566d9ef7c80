// include/latcomb/grammar-fst.h

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

#ifndef LATCOMB_GRAMMAR_FST_H_
#define LATCOMB_GRAMMAR_FST_H_

#include "latcomb/fst.h"
#include "latcomb/ngram-model.h"

namespace latcomb {

struct GrammarOptions {
  // false: every history state carries an arc for every word with non-zero
  // probability, so path costs equal the model score.  true: the usual
  // compact form with explicit n-gram arcs and epsilon back-off arcs, whose
  // best path may undercut the model score.
  bool epsilon_backoff = false;
};

// Acceptor over the model vocabulary whose states are n-gram histories.
// Word arcs cost -ln P(w | h), final weights -ln P(</s> | h); the start
// state is the history <s>.  Throws if a context is present without its
// prefix.
StdFst ToGrammarFst(const NGramModel &model, const GrammarOptions &options = {});

// Subtracts `reward` from every arc with a non-epsilon output label.
// Epsilon arcs, final weights and topology are untouched.
StdFst ApplyWordReward(const StdFst &g, double reward);

}  // namespace latcomb

#endif  // LATCOMB_GRAMMAR_FST_H_
