// tests/test-util.h

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

#ifndef LATCOMB_TESTS_TEST_UTIL_H_
#define LATCOMB_TESTS_TEST_UTIL_H_

// Random machine generators and brute-force oracles shared by the tests.
// The oracles walk machines directly and do not call library algorithms.

#include <cmath>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "latcomb/fst.h"

namespace latcomb::testing {

using Labels = std::vector<Label>;
using StringPair = std::pair<Labels, Labels>;
// (input string, output string) -> Plus-sum of path costs, epsilons dropped.
using Language = std::map<StringPair, double>;

struct OraclePath {
  Labels ilabels, olabels;
  double cost = 0.0;
  friend bool operator<(const OraclePath &a, const OraclePath &b) {
    return std::tie(a.ilabels, a.olabels, a.cost) < std::tie(b.ilabels, b.olabels, b.cost);
  }
  friend bool operator==(const OraclePath &a, const OraclePath &b) = default;
};

template <class W>
void OracleWalk(const Fst<W> &fst, StateId s, OraclePath &current,
                std::vector<OraclePath> &out) {
  if (!fst.Final(s).IsZero()) {
    OraclePath done = current;
    done.cost += fst.Final(s).Value();
    out.push_back(done);
  }
  for (const auto &arc : fst.Arcs(s)) {
    if (arc.weight.IsZero()) continue;
    OraclePath saved = current;
    if (arc.ilabel != 0) current.ilabels.push_back(arc.ilabel);
    if (arc.olabel != 0) current.olabels.push_back(arc.olabel);
    current.cost += arc.weight.Value();
    OracleWalk(fst, arc.nextstate, current, out);
    current = saved;
  }
}

// All accepting paths by exhaustive recursion.  Input must be acyclic.
template <class W>
std::vector<OraclePath> OraclePaths(const Fst<W> &fst) {
  std::vector<OraclePath> out;
  if (fst.NumStates() == 0 || fst.Start() < 0) return out;
  OraclePath current;
  OracleWalk(fst, fst.Start(), current, out);
  return out;
}

inline double OraclePlus(bool log_semiring, double a, double b) {
  if (!log_semiring) return std::min(a, b);
  double lo = std::min(a, b), hi = std::max(a, b);
  return lo - std::log1p(std::exp(lo - hi));
}

inline Language ToLanguage(const std::vector<OraclePath> &paths, bool log_semiring) {
  Language lang;
  for (const auto &p : paths) {
    StringPair key(p.ilabels, p.olabels);
    auto [it, inserted] = lang.emplace(key, p.cost);
    if (!inserted) it->second = OraclePlus(log_semiring, it->second, p.cost);
  }
  return lang;
}

template <class W>
Language OracleLanguage(const Fst<W> &fst) {
  return ToLanguage(OraclePaths(fst), W::Type() == "log");
}

// Weighted language of a ∘ b: join every path pair on the middle tape.
template <class W>
Language OracleCompose(const Fst<W> &a, const Fst<W> &b) {
  const bool log_semiring = W::Type() == "log";
  auto pa = OraclePaths(a);
  auto pb = OraclePaths(b);
  std::vector<OraclePath> joined;
  for (const auto &x : pa)
    for (const auto &y : pb)
      if (x.olabels == y.ilabels) joined.push_back({x.ilabels, y.olabels, x.cost + y.cost});
  return ToLanguage(joined, log_semiring);
}

// Acceptor language keyed by the input string only.
inline std::map<Labels, double> AcceptorView(const Language &lang, bool log_semiring) {
  std::map<Labels, double> out;
  for (const auto &[key, cost] : lang) {
    auto [it, inserted] = out.emplace(key.first, cost);
    if (!inserted) it->second = OraclePlus(log_semiring, it->second, cost);
  }
  return out;
}

template <class Map>
bool SameLanguage(const Map &a, const Map &b, double tolerance) {
  if (a.size() != b.size()) return false;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
    if (!(ia->first == ib->first)) return false;
    if (std::fabs(ia->second - ib->second) > tolerance) return false;
  }
  return true;
}

struct RandomFstOptions {
  int max_states = 6;
  int num_labels = 3;
  int max_arcs_per_state = 3;
  double epsilon_prob = 0.0;
  bool acceptor = false;
  // Tropical tests use half-integer costs so sums are exact.
  bool half_integer_costs = true;
  double min_cost = -2.0;
  double max_cost = 3.0;
};

// Random acyclic machine: arcs only go from lower to higher state ids.
template <class W>
Fst<W> RandomAcyclicFst(std::mt19937_64 &rng, const RandomFstOptions &opts) {
  std::uniform_int_distribution<int> num_states_dist(1, opts.max_states);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto cost = [&]() {
    double c = opts.min_cost + (opts.max_cost - opts.min_cost) * unit(rng);
    return opts.half_integer_costs ? std::round(c * 2.0) / 2.0 : c;
  };
  auto label = [&]() -> Label {
    if (unit(rng) < opts.epsilon_prob) return 0;
    return 1 + static_cast<Label>(rng() % opts.num_labels);
  };
  Fst<W> fst;
  int n = num_states_dist(rng);
  fst.AddStates(n);
  fst.SetStart(0);
  for (int s = 0; s < n; ++s) {
    if (s == n - 1 || unit(rng) < 0.3) fst.SetFinal(s, W(cost()));
    if (s == n - 1) break;
    int arcs = static_cast<int>(rng() % (opts.max_arcs_per_state + 1));
    for (int k = 0; k < arcs; ++k) {
      StateId next = s + 1 + static_cast<StateId>(rng() % (n - s - 1));
      Label i = label();
      Label o = opts.acceptor ? i : label();
      fst.AddArc(s, i, o, W(cost()), next);
    }
  }
  return fst;
}

// Suffix language of each state, used for minimality checks.
template <class W>
std::map<Labels, double> SuffixLanguage(const Fst<W> &fst, StateId s) {
  Fst<W> copy = fst;
  copy.SetStart(s);
  return AcceptorView(OracleLanguage(copy), W::Type() == "log");
}

// Longest common subsequence: the most words any alignment can match.
inline int LcsLength(const Labels &x, const Labels &y) {
  std::vector<std::vector<int>> dp(x.size() + 1, std::vector<int>(y.size() + 1, 0));
  for (size_t i = 1; i <= x.size(); ++i)
    for (size_t j = 1; j <= y.size(); ++j)
      dp[i][j] = x[i - 1] == y[j - 1] ? dp[i - 1][j - 1] + 1
                                      : std::max(dp[i - 1][j], dp[i][j - 1]);
  return dp[x.size()][y.size()];
}

// Word sequences of `hypothesis` whose match count with `transcript` is
// within `slack` of the best one.
template <class W>
std::set<Labels> MaxMatchOracle(const Labels &transcript, const Fst<W> &hypothesis,
                                int slack = 0) {
  auto paths = OraclePaths(hypothesis);
  int best = -1;
  for (const auto &p : paths) best = std::max(best, LcsLength(transcript, p.olabels));
  std::set<Labels> out;
  for (const auto &p : paths)
    if (LcsLength(transcript, p.olabels) >= best - slack) out.insert(p.olabels);
  return out;
}

template <class W>
std::set<Labels> AcceptedStrings(const Fst<W> &fst) {
  std::set<Labels> out;
  for (const auto &p : OraclePaths(fst)) out.insert(p.ilabels);
  return out;
}

// At most one arc leaves each state.
template <class W>
bool IsLinear(const Fst<W> &fst) {
  for (StateId s = 0; s < fst.NumStates(); ++s)
    if (fst.NumArcs(s) > 1) return false;
  return true;
}

// Random confusion sausage: `slots` positions, each with 1..max_alts distinct
// words from 1..vocab and, with probability skip_prob, an epsilon arc.
inline Fst<TropicalWeight> RandomSausage(std::mt19937_64 &rng, int slots, int max_alts,
                                         int vocab, double skip_prob = 0.0) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Fst<TropicalWeight> fst;
  fst.AddStates(slots + 1);
  fst.SetStart(0);
  for (int s = 0; s < slots; ++s) {
    int alts = 1 + static_cast<int>(rng() % max_alts);
    std::set<Label> words;
    while (static_cast<int>(words.size()) < std::min(alts, vocab))
      words.insert(1 + static_cast<Label>(rng() % vocab));
    for (Label w : words) fst.AddArc(s, w, w, TropicalWeight(std::round(unit(rng) * 4) / 2), s + 1);
    if (unit(rng) < skip_prob) fst.AddArc(s, 0, 0, TropicalWeight::One(), s + 1);
  }
  fst.SetFinal(slots, TropicalWeight::One());
  return fst;
}

}  // namespace latcomb::testing

#endif  // LATCOMB_TESTS_TEST_UTIL_H_
