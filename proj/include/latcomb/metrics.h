// include/latcomb/metrics.h

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

#ifndef LATCOMB_METRICS_H_
#define LATCOMB_METRICS_H_

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latcomb/archive.h"
#include "latcomb/fst.h"

namespace latcomb {

struct ErrorBreakdown {
  size_t substitutions = 0;
  size_t deletions = 0;
  size_t insertions = 0;
  size_t reference_length = 0;
  // errors / reference_length; an empty reference counts as length 1.
  double wer = 0.0;

  size_t Errors() const { return substitutions + deletions + insertions; }
};

namespace internal {
double ErrorRate(size_t errors, size_t reference_length);
}  // namespace internal

// Unit-cost Levenshtein alignment of `hyp` against `ref`.  Among optimal
// alignments the one with the fewest insertions plus deletions is taken;
// since D - I = |ref| - |hyp| for every alignment this fixes all three
// counts, so swapping the arguments swaps D and I.  Remaining ties are
// broken in the backtrace preferring match, then substitution, then
// deletion, then insertion.
template <class T>
ErrorBreakdown EditDistance(std::span<const T> ref, std::span<const T> hyp) {
  // (errors, insertions + deletions), compared lexicographically.
  using Cost = std::pair<size_t, size_t>;
  auto add = [](Cost c, size_t errors, size_t indels) {
    return Cost(c.first + errors, c.second + indels);
  };
  const size_t n = ref.size(), m = hyp.size();
  std::vector<std::vector<Cost>> cost(n + 1, std::vector<Cost>(m + 1));
  for (size_t i = 0; i <= n; ++i) cost[i][0] = Cost(i, i);
  for (size_t j = 0; j <= m; ++j) cost[0][j] = Cost(j, j);
  for (size_t i = 1; i <= n; ++i)
    for (size_t j = 1; j <= m; ++j)
      cost[i][j] = std::min({add(cost[i - 1][j - 1], ref[i - 1] == hyp[j - 1] ? 0 : 1, 0),
                             add(cost[i - 1][j], 1, 1), add(cost[i][j - 1], 1, 1)});
  ErrorBreakdown out;
  out.reference_length = n;
  size_t i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && ref[i - 1] == hyp[j - 1] && cost[i][j] == cost[i - 1][j - 1]) {
      --i, --j;
    } else if (i > 0 && j > 0 && cost[i][j] == add(cost[i - 1][j - 1], 1, 0)) {
      ++out.substitutions;
      --i, --j;
    } else if (i > 0 && cost[i][j] == add(cost[i - 1][j], 1, 1)) {
      ++out.deletions;
      --i;
    } else {
      ++out.insertions;
      --j;
    }
  }
  out.wer = internal::ErrorRate(out.Errors(), n);
  return out;
}

inline ErrorBreakdown EditDistance(const std::vector<std::string> &ref,
                                   const std::vector<std::string> &hyp) {
  return EditDistance<std::string>(ref, hyp);
}

inline ErrorBreakdown EditDistance(const std::vector<Label> &ref,
                                   const std::vector<Label> &hyp) {
  return EditDistance<Label>(ref, hyp);
}

struct MerReport {
  std::string id;
  ErrorBreakdown errors;
  bool kept = false;
};

struct MerPartition {
  std::vector<std::string> kept;
  std::vector<std::string> dropped;
  std::vector<MerReport> report;  // transcript order
};

// Keeps an utterance iff the word-level matching error rate of its decode
// against the transcript (the reference) is at most `threshold_percent`.
// Both lists must cover exactly the same ids.
MerPartition MerFilter(const std::vector<Transcript> &transcripts,
                       const std::vector<Transcript> &decodes, double threshold_percent);

// Posterior-weighted mean WER over the paths of `lattice`, where a path's
// posterior is proportional to exp(-cost).  Output labels are the words.
// Throws if the lattice has more than `cap` paths or none at all.
double ExpectedWer(const StdFst &lattice, std::span<const Label> ref, size_t cap);

// Same quantity as ExpectedWer without enumerating paths: posterior mass is
// pushed forward over pairs (state, Levenshtein DP row against `ref`), and
// paths whose prefixes leave the same row at the same state are merged.
// Throws if more than `max_rows` such pairs are live at once.
double ExpectedWerExact(const StdFst &lattice, std::span<const Label> ref,
                        size_t max_rows = size_t{1} << 22);

// Lowest WER of any path, found as the best path of ref ∘ Levenshtein ∘
// lattice; no path enumeration.
ErrorBreakdown OracleWer(const StdFst &lattice, std::span<const Label> ref);

struct LatticeStats {
  double depth = 0.0;
  size_t path_count = 0;   // saturates at SIZE_MAX
  StateId states = 0;
  size_t arcs = 0;
  size_t longest_path = 0;  // in word arcs
};

// Structural depth: word (non-epsilon) arcs divided by the number of word
// arcs on the longest path; 1 for a linear lattice.  Computed on the
// trimmed lattice.  Word lattices carry no frame times, so this is not the
// time-normalised depth some toolkits report.
LatticeStats LatticeDepth(const StdFst &lattice);

}  // namespace latcomb

#endif  // LATCOMB_METRICS_H_
