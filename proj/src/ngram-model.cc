// src/ngram-model.cc

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

#include "latcomb/ngram-model.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

#include "latcomb/error.h"

namespace latcomb {

SymbolTable LmBaseSymbols() {
  SymbolTable syms;
  syms.AddSymbol(kBosSymbol, kBosLabel);
  syms.AddSymbol(kEosSymbol, kEosLabel);
  syms.AddSymbol(kUnkSymbol, kUnkLabel);
  return syms;
}

// Shewchuk's non-overlapping partials with a half-even final rounding.
double ExactSum(std::span<const double> values) {
  std::vector<double> partials;
  for (double x : values) {
    size_t i = 0;
    for (size_t j = 0; j < partials.size(); ++j) {
      double y = partials[j];
      if (std::fabs(x) < std::fabs(y)) std::swap(x, y);
      double hi = x + y;
      double lo = y - (hi - x);
      if (lo != 0.0) partials[i++] = lo;
      x = hi;
    }
    partials.resize(i);
    partials.push_back(x);
  }
  if (partials.empty()) return 0.0;
  size_t n = partials.size();
  double hi = partials[--n], lo = 0.0;
  while (n > 0) {
    double x = hi, y = partials[--n];
    hi = x + y;
    lo = y - (hi - x);
    if (lo != 0.0) break;
  }
  if (n > 0 && ((lo < 0.0 && partials[n - 1] < 0.0) || (lo > 0.0 && partials[n - 1] > 0.0))) {
    double y = lo * 2.0, x = hi + y;
    if (y == x - hi) hi = x;
  }
  return hi;
}

bool NGramModel::ContextLess::operator()(std::span<const Label> a,
                                         std::span<const Label> b) const {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

NGramModel::NGramModel(int order, std::shared_ptr<const SymbolTable> vocab)
    : order_(order), vocab_(std::move(vocab)) {
  if (order_ < 1) throw Error("NGramModel: order must be at least 1");
  if (!vocab_) throw Error("NGramModel: missing vocabulary");
  const SymbolTable base = LmBaseSymbols();
  for (Label l = kBosLabel; l <= kUnkLabel; ++l)
    if (!vocab_->HasLabel(l) || vocab_->Symbol(l) != base.Symbol(l))
      throw Error("NGramModel: vocabulary must bind " + base.Symbol(l) + " to " +
                  std::to_string(l));
  contexts_.emplace(Context{}, ContextEntry{});
}

std::vector<Label> NGramModel::PredictiveLabels() const {
  std::vector<Label> out;
  for (Label l : vocab_->Labels())
    if (l != kEpsilon && l != kBosLabel) out.push_back(l);
  return out;
}

Label NGramModel::WordLabel(std::string_view word) const {
  auto id = vocab_->Find(word);
  return id ? *id : kUnkLabel;
}

const NGramModel::ContextEntry *NGramModel::FindContext(std::span<const Label> context) const {
  auto it = contexts_.find(context);
  return it == contexts_.end() ? nullptr : &it->second;
}

double NGramModel::Prob(std::span<const Label> history, Label word) const {
  const size_t max_context = static_cast<size_t>(order_ - 1);
  if (history.size() > max_context) history = history.last(max_context);
  double scale = 1.0;
  for (size_t start = 0;; ++start) {
    auto context = history.subspan(start);
    if (const ContextEntry *entry = FindContext(context)) {
      auto it = entry->probs.find(word);
      if (it != entry->probs.end()) return scale * it->second;
      scale *= entry->backoff;
    }
    if (context.empty()) return 0.0;
  }
}

double NGramModel::SentenceLogProb(std::span<const Label> words) const {
  std::vector<Label> seq;
  seq.reserve(words.size() + 2);
  seq.push_back(kBosLabel);
  seq.insert(seq.end(), words.begin(), words.end());
  seq.push_back(kEosLabel);
  double total = 0.0;
  for (size_t i = 1; i < seq.size(); ++i)
    total += std::log(Prob(std::span<const Label>(seq).first(i), seq[i]));
  return total;
}

double NGramModel::SentenceLogProb(std::span<const std::string> words) const {
  std::vector<Label> labels;
  labels.reserve(words.size());
  for (const auto &w : words) labels.push_back(WordLabel(w));
  return SentenceLogProb(labels);
}

double NGramModel::Perplexity(const std::vector<std::vector<std::string>> &sentences) const {
  double total = 0.0;
  size_t tokens = 0;
  for (const auto &s : sentences) {
    total += SentenceLogProb(s);
    tokens += s.size() + 1;
  }
  if (tokens == 0) throw Error("Perplexity: no sentences");
  return std::exp(-total / static_cast<double>(tokens));
}

NGramModel::Context NGramModel::ReduceHistory(std::span<const Label> history) const {
  const size_t max_context = static_cast<size_t>(order_ - 1);
  if (history.size() > max_context) history = history.last(max_context);
  while (!history.empty() && !FindContext(history)) history = history.subspan(1);
  return Context(history.begin(), history.end());
}

void NGramModel::SetProb(const Context &context, Label word, double prob) {
  if (context.size() >= static_cast<size_t>(order_))
    throw Error("NGramModel: n-gram longer than the model order");
  if (!vocab_->HasLabel(word) || word == kEpsilon || word == kBosLabel)
    throw Error("NGramModel: cannot predict label " + std::to_string(word));
  if (!(prob > 0.0 && prob <= 1.0))
    throw Error("NGramModel: probability out of (0, 1]");
  contexts_[context].probs[word] = prob;
}

void NGramModel::SetBackoff(const Context &context, double backoff) {
  if (context.size() >= static_cast<size_t>(order_))
    throw Error("NGramModel: back-off context longer than order - 1");
  if (!(backoff > 0.0) || !std::isfinite(backoff))
    throw Error("NGramModel: back-off weight must be positive");
  contexts_[context].backoff = backoff;
}

void NGramModel::NormalizeBackoff(const Context &context) {
  auto it = contexts_.find(context);
  if (it == contexts_.end() || context.empty()) return;
  ContextEntry &entry = it->second;
  std::span<const Label> lower = std::span<const Label>(context).subspan(1);
  std::vector<double> numerator{1.0}, denominator{1.0};
  for (const auto &[word, prob] : entry.probs) {
    numerator.push_back(-prob);
    denominator.push_back(-Prob(lower, word));
  }
  bool covered = true;
  for (Label w : PredictiveLabels())
    if (!entry.probs.count(w) && Prob(lower, w) > 0.0) {
      covered = false;
      break;
    }
  double num = ExactSum(numerator), den = ExactSum(denominator);
  entry.backoff = covered || num <= 0.0 || den <= 0.0 ? 1.0 : num / den;
}

double NGramModel::MaxNormalizationError() const {
  double worst = 0.0;
  const auto labels = PredictiveLabels();
  for (const auto &[context, entry] : contexts_) {
    double sum = 0.0;
    for (Label w : labels) sum += Prob(context, w);
    worst = std::max(worst, std::fabs(1.0 - sum));
  }
  return worst;
}

NGramModel EstimateWittenBell(const std::vector<std::vector<std::string>> &corpus, int order,
                              size_t vocab_cap) {
  if (corpus.empty()) throw Error("EstimateWittenBell: empty corpus");
  if (order < 1) throw Error("EstimateWittenBell: order must be at least 1");
  if (vocab_cap < 1) throw Error("EstimateWittenBell: vocab_cap must be at least 1");

  std::unordered_map<std::string, size_t> freq;
  for (const auto &sentence : corpus)
    for (const auto &w : sentence) {
      if (w == kBosSymbol || w == kEosSymbol)
        throw Error("EstimateWittenBell: corpus contains the reserved token " + w);
      if (w != kUnkSymbol) ++freq[w];
    }
  std::vector<std::pair<std::string, size_t>> ranked(freq.begin(), freq.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto &a, const auto &b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  if (ranked.size() > vocab_cap) ranked.resize(vocab_cap);
  auto vocab = std::make_shared<SymbolTable>(LmBaseSymbols());
  for (const auto &[word, count] : ranked) vocab->AddSymbol(word);
  NGramModel model(order, vocab);

  // counts[context][word]
  std::map<NGramModel::Context, std::map<Label, double>> counts;
  for (const auto &sentence : corpus) {
    std::vector<Label> seq{kBosLabel};
    for (const auto &w : sentence) seq.push_back(model.WordLabel(w));
    seq.push_back(kEosLabel);
    for (size_t i = 1; i < seq.size(); ++i)
      for (size_t k = 0; k < static_cast<size_t>(order) && k <= i - 1; ++k)
        counts[NGramModel::Context(seq.begin() + (i - k), seq.begin() + i)][seq[i]] += 1.0;
  }

  const auto predictive = model.PredictiveLabels();
  for (int length = 0; length < order; ++length) {
    for (const auto &[context, words] : counts) {
      if (context.size() != static_cast<size_t>(length)) continue;
      double total = 0.0;
      for (const auto &[w, c] : words) total += c;
      const double types = static_cast<double>(words.size());
      if (length == 0) {
        const double uniform = 1.0 / static_cast<double>(predictive.size());
        for (Label w : predictive) {
          auto it = words.find(w);
          double c = it == words.end() ? 0.0 : it->second;
          model.SetProb(context, w, (c + types * uniform) / (total + types));
        }
        continue;
      }
      std::span<const Label> lower = std::span<const Label>(context).subspan(1);
      for (const auto &[w, c] : words)
        model.SetProb(context, w, (c + types * model.Prob(lower, w)) / (total + types));
    }
    for (const auto &[context, words] : counts)
      if (context.size() == static_cast<size_t>(length)) model.NormalizeBackoff(context);
  }
  return model;
}

NGramModel Interpolate(const NGramModel &in_domain, const NGramModel &background,
                       double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw Error("Interpolate: lambda must lie in [0, 1]");
  auto vocab = std::make_shared<SymbolTable>(LmBaseSymbols());
  for (const NGramModel *m : {&in_domain, &background})
    for (Label l : m->Vocab().Labels())
      if (l > kUnkLabel) vocab->AddSymbol(m->Vocab().Symbol(l));
  NGramModel out(std::max(in_domain.Order(), background.Order()), vocab);

  struct Component {
    const NGramModel *model;
    double weight;
    std::vector<Label> to_model;  // union id -> model id, kAbsent if missing
  };
  constexpr Label kAbsent = -1;
  std::vector<Component> parts;
  for (auto [m, w] : {std::pair(&in_domain, lambda), std::pair(&background, 1.0 - lambda)}) {
    if (w == 0.0) continue;
    Component c{m, w, std::vector<Label>(vocab->AvailableKey(), kAbsent)};
    for (Label l : vocab->Labels())
      if (auto id = m->Vocab().Find(vocab->Symbol(l))) c.to_model[l] = *id;
    parts.push_back(std::move(c));
  }

  // Union of explicit n-grams and contexts, in union ids.
  std::map<NGramModel::Context, std::vector<Label>> explicit_words;
  for (const auto &part : parts) {
    std::vector<Label> from_model(part.model->Vocab().AvailableKey(), kAbsent);
    for (Label l = 0; l < static_cast<Label>(part.to_model.size()); ++l)
      if (part.to_model[l] != kAbsent) from_model[part.to_model[l]] = l;
    for (const auto &[context, entry] : part.model->Contexts()) {
      NGramModel::Context mapped;
      for (Label l : context) mapped.push_back(from_model[l]);
      auto &words = explicit_words[mapped];
      for (const auto &[w, p] : entry.probs) words.push_back(from_model[w]);
    }
  }

  for (int length = 0; length < out.Order(); ++length) {
    for (auto &[context, words] : explicit_words) {
      if (context.size() != static_cast<size_t>(length)) continue;
      std::sort(words.begin(), words.end());
      words.erase(std::unique(words.begin(), words.end()), words.end());
      for (Label w : words) {
        double prob = 0.0;
        for (const auto &part : parts) {
          if (part.to_model[w] == kAbsent) continue;
          NGramModel::Context history;
          for (Label l : context)
            history.push_back(part.to_model[l] == kAbsent ? kUnkLabel : part.to_model[l]);
          prob += part.weight * part.model->Prob(history, part.to_model[w]);
        }
        if (prob > 0.0) out.SetProb(context, w, std::min(prob, 1.0));
      }
      if (length > 0 && words.empty()) out.SetBackoff(context, 1.0);
    }
    for (const auto &[context, words] : explicit_words)
      if (context.size() == static_cast<size_t>(length)) out.NormalizeBackoff(context);
  }
  return out;
}

std::vector<std::vector<std::string>> ReadCorpus(std::istream &is) {
  std::vector<std::vector<std::string>> out;
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream fields(line);
    std::vector<std::string> words;
    for (std::string w; fields >> w;) words.push_back(std::move(w));
    if (!words.empty()) out.push_back(std::move(words));
  }
  return out;
}

std::vector<std::vector<std::string>> ReadCorpusFile(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open corpus " + path);
  return ReadCorpus(is);
}

}  // namespace latcomb
