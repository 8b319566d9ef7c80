// src/metrics.cc

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

#include "latcomb/metrics.h"

#include <cmath>
#include <limits>
#include <map>

#include "latcomb/edit-model.h"
#include "latcomb/paths.h"
#include "latcomb/shortest-distance.h"

namespace latcomb {

namespace internal {

double ErrorRate(size_t errors, size_t reference_length) {
  return static_cast<double>(errors) / static_cast<double>(std::max<size_t>(reference_length, 1));
}

}  // namespace internal

MerPartition MerFilter(const std::vector<Transcript> &transcripts,
                       const std::vector<Transcript> &decodes, double threshold_percent) {
  if (!std::isfinite(threshold_percent) || threshold_percent < 0.0)
    throw Error("MerFilter: threshold must be a non-negative percentage");
  std::map<std::string, const Transcript *> by_id;
  for (const auto &d : decodes) by_id.emplace(d.id, &d);
  std::string missing_decode, missing_transcript;
  std::map<std::string, bool> transcript_ids;
  for (const auto &t : transcripts) {
    transcript_ids.emplace(t.id, true);
    if (!by_id.count(t.id)) missing_decode += " " + t.id;
  }
  for (const auto &d : decodes)
    if (!transcript_ids.count(d.id)) missing_transcript += " " + d.id;
  if (!missing_decode.empty() || !missing_transcript.empty()) {
    std::string msg = "MerFilter: utterance ids differ;";
    if (!missing_decode.empty()) msg += " no decode for:" + missing_decode + ";";
    if (!missing_transcript.empty()) msg += " no transcript for:" + missing_transcript;
    throw Error(msg);
  }

  MerPartition out;
  const double threshold = threshold_percent / 100.0;
  for (const auto &t : transcripts) {
    MerReport r;
    r.id = t.id;
    r.errors = EditDistance(t.words, by_id.at(t.id)->words);
    r.kept = r.errors.wer <= threshold;
    (r.kept ? out.kept : out.dropped).push_back(t.id);
    out.report.push_back(std::move(r));
  }
  return out;
}

double ExpectedWer(const StdFst &lattice, std::span<const Label> ref, size_t cap) {
  auto paths = EnumeratePaths(lattice, cap);
  if (paths.empty()) throw Error("ExpectedWer: lattice has no accepting path");
  double best = std::numeric_limits<double>::infinity();
  for (const auto &p : paths) best = std::min(best, p.weight.Value());
  double norm = 0.0, total = 0.0;
  for (const auto &p : paths) {
    double posterior = std::exp(-(p.weight.Value() - best));
    norm += posterior;
    total += posterior * EditDistance<Label>(ref, p.olabels).wer;
  }
  return total / norm;
}

double ExpectedWerExact(const StdFst &lattice, std::span<const Label> ref, size_t max_rows) {
  StdFst fst = Connect(lattice);
  if (fst.Empty()) throw Error("ExpectedWerExact: lattice has no accepting path");
  auto order = TopSort(fst);
  if (!order) throw Error("ExpectedWerExact: lattice is cyclic");
  // Reduced costs w + beta(next) - beta(s) are >= 0, so masses stay <= 1.
  const std::vector<TropicalWeight> beta = BackwardDistance(fst);
  const size_t n = ref.size();
  using Row = std::vector<uint32_t>;
  std::vector<std::map<Row, double>> rows(fst.NumStates());
  Row first(n + 1);
  for (size_t j = 0; j <= n; ++j) first[j] = static_cast<uint32_t>(j);
  rows[fst.Start()].emplace(std::move(first), 1.0);
  size_t live = 1;
  double total = 0.0, errors = 0.0;
  for (StateId s : *order) {
    std::map<Row, double> here = std::move(rows[s]);
    live -= here.size();
    const double bs = beta[s].Value();
    if (fst.IsFinal(s)) {
      const double p = std::exp(-(fst.Final(s).Value() - bs));
      for (const auto &[row, mass] : here) {
        total += mass * p;
        errors += mass * p * row[n];
      }
    }
    for (const auto &arc : fst.Arcs(s)) {
      const double p = std::exp(-(arc.weight.Value() + beta[arc.nextstate].Value() - bs));
      auto &dest = rows[arc.nextstate];
      const size_t before = dest.size();
      for (const auto &[row, mass] : here) {
        if (arc.olabel == kEpsilon) {
          dest[row] += mass * p;
          continue;
        }
        Row next(n + 1);
        next[0] = row[0] + 1;
        for (size_t j = 1; j <= n; ++j)
          next[j] = std::min({row[j] + 1, next[j - 1] + 1,
                              row[j - 1] + (ref[j - 1] == arc.olabel ? 0u : 1u)});
        dest[std::move(next)] += mass * p;
      }
      live += dest.size() - before;
      if (live > max_rows)
        throw Error("ExpectedWerExact: more than " + std::to_string(max_rows) +
                    " live alignment rows; prune the lattice first");
    }
  }
  return errors / total / static_cast<double>(std::max<size_t>(n, 1));
}

ErrorBreakdown OracleWer(const StdFst &lattice, std::span<const Label> ref) {
  StdFst hyp = ScaleWeightsToOne(ProjectOutput(lattice));
  hyp.SetSymbols(nullptr);
  StdFst aligned = LazyEditCompose(LinearFst(ref), hyp, EditCosts::Levenshtein());
  auto best = BestPathArcs(aligned);
  if (!best) throw Error("OracleWer: lattice has no accepting path");
  ErrorBreakdown out;
  out.reference_length = ref.size();
  for (const auto &arc : *best) {
    if (arc.ilabel == kEpsilon && arc.olabel == kEpsilon) continue;
    if (arc.ilabel == kEpsilon) ++out.insertions;
    else if (arc.olabel == kEpsilon) ++out.deletions;
    else if (arc.ilabel != arc.olabel) ++out.substitutions;
  }
  out.wer = internal::ErrorRate(out.Errors(), ref.size());
  return out;
}

LatticeStats LatticeDepth(const StdFst &lattice) {
  StdFst fst = Connect(lattice);
  if (fst.Empty()) throw Error("LatticeDepth: empty lattice");
  auto order = TopSort(fst);
  if (!order) throw Error("LatticeDepth: lattice is cyclic");
  LatticeStats stats;
  stats.states = fst.NumStates();
  stats.arcs = fst.NumArcs();
  size_t word_arcs = 0;
  std::vector<size_t> longest(fst.NumStates(), 0);
  for (StateId s : *order) {
    for (const auto &arc : fst.Arcs(s)) {
      size_t step = arc.olabel != kEpsilon || arc.ilabel != kEpsilon ? 1 : 0;
      word_arcs += step;
      longest[arc.nextstate] = std::max(longest[arc.nextstate], longest[s] + step);
    }
  }
  for (StateId s = 0; s < fst.NumStates(); ++s)
    if (fst.IsFinal(s)) stats.longest_path = std::max(stats.longest_path, longest[s]);
  stats.depth = stats.longest_path == 0
                    ? 1.0
                    : static_cast<double>(word_arcs) / static_cast<double>(stats.longest_path);
  stats.path_count = CountPaths(fst);
  return stats;
}

}  // namespace latcomb
