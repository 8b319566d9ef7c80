// include/latcomb/ngram-model.h

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

#ifndef LATCOMB_NGRAM_MODEL_H_
#define LATCOMB_NGRAM_MODEL_H_

#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latcomb/symbol-table.h"

namespace latcomb {

inline constexpr const char *kBosSymbol = "<s>";
inline constexpr const char *kEosSymbol = "</s>";
inline constexpr const char *kUnkSymbol = "<unk>";
inline constexpr Label kBosLabel = 1;
inline constexpr Label kEosLabel = 2;
inline constexpr Label kUnkLabel = 3;

// Returns a table holding <eps>, <s>, </s> and <unk> with ids 0..3.
SymbolTable LmBaseSymbols();

// Correctly rounded sum, independent of the order of `values`.
double ExactSum(std::span<const double> values);

// Back-off n-gram model holding linear probabilities.
//
//   P(w | h) = p(h, w)                  if (h, w) is explicit
//            = bow(h) * P(w | h[1:])    otherwise
//
// bow(h) is 1 when h is not a context.  The unigram level has no back-off;
// a word without a unigram has probability 0.  <s> is never predicted.
class NGramModel {
 public:
  using Context = std::vector<Label>;

  struct ContextEntry {
    std::map<Label, double> probs;  // explicit P(w | context)
    double backoff = 1.0;
  };

  struct ContextLess {
    using is_transparent = void;
    bool operator()(std::span<const Label> a, std::span<const Label> b) const;
  };
  using ContextMap = std::map<Context, ContextEntry, ContextLess>;

  // `vocab` must bind ids 0..3 as LmBaseSymbols() does.
  NGramModel(int order, std::shared_ptr<const SymbolTable> vocab);

  int Order() const { return order_; }
  const SymbolTable &Vocab() const { return *vocab_; }
  std::shared_ptr<const SymbolTable> VocabPtr() const { return vocab_; }

  // Vocabulary ids that can be predicted: everything except <eps> and <s>.
  std::vector<Label> PredictiveLabels() const;
  // Unknown words map to <unk>.
  Label WordLabel(std::string_view word) const;

  // `history` may be longer than order - 1; only its tail is used.
  double Prob(std::span<const Label> history, Label word) const;
  // Natural log of P(w1 .. wn </s> | <s>).
  double SentenceLogProb(std::span<const std::string> words) const;
  double SentenceLogProb(std::span<const Label> words) const;
  // exp(-total log prob / predicted tokens), </s> included.
  double Perplexity(const std::vector<std::vector<std::string>> &sentences) const;

  const ContextMap &Contexts() const { return contexts_; }
  const ContextEntry *FindContext(std::span<const Label> context) const;
  // Longest suffix of the last order - 1 labels of `history` that is a context.
  Context ReduceHistory(std::span<const Label> history) const;

  void SetProb(const Context &context, Label word, double prob);
  void SetBackoff(const Context &context, double backoff);
  // Sets bow(context) so that P(. | context) sums to one over the
  // vocabulary, from its explicit entries and the lower order.  Contexts
  // whose explicit words cover every word with non-zero lower-order
  // probability get 1.
  void NormalizeBackoff(const Context &context);

  // Largest |1 - sum_w P(w | context)| over all contexts.
  double MaxNormalizationError() const;

 private:
  int order_;
  std::shared_ptr<const SymbolTable> vocab_;
  ContextMap contexts_;
};

// Witten-Bell interpolated estimate.  Each sentence is wrapped in <s> .. </s>.
// The vocabulary keeps the `vocab_cap` most frequent words (ties broken
// alphabetically); the rest become <unk>.  Ids: specials first, then words
// by decreasing frequency.
NGramModel EstimateWittenBell(const std::vector<std::vector<std::string>> &corpus, int order,
                              size_t vocab_cap);

// Linear mixture lambda * P_in + (1 - lambda) * P_bg evaluated through each
// model's back-off on the union of their explicit n-grams (those of a model
// with zero weight are left out), re-encoded with renormalised back-off
// weights.  Words outside a model's vocabulary get probability 0 from it;
// history words outside it read as its <unk>.
NGramModel Interpolate(const NGramModel &in_domain, const NGramModel &background,
                       double lambda);

// Whitespace-tokenised sentences, one per line; blank lines are skipped.
std::vector<std::vector<std::string>> ReadCorpus(std::istream &is);
std::vector<std::vector<std::string>> ReadCorpusFile(const std::string &path);

}  // namespace latcomb

#endif  // LATCOMB_NGRAM_MODEL_H_
