// tests/metrics-test.cc

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

#include <cmath>
#include <random>

#include "doctest.h"
#include "latcomb/fst-lib.h"
#include "latcomb/metrics.h"
#include "test-util.h"

namespace latcomb {
namespace {

using testing::Labels;

// Exhaustive recursion over all alignments.
size_t BruteDistance(const Labels &r, size_t i, const Labels &h, size_t j) {
  if (i == r.size()) return h.size() - j;
  if (j == h.size()) return r.size() - i;
  size_t best = BruteDistance(r, i + 1, h, j + 1) + (r[i] == h[j] ? 0 : 1);
  best = std::min(best, BruteDistance(r, i + 1, h, j) + 1);
  best = std::min(best, BruteDistance(r, i, h, j + 1) + 1);
  return best;
}

Labels RandomSeq(std::mt19937_64 &rng, size_t max_len, int vocab) {
  Labels s(rng() % (max_len + 1));
  for (auto &w : s) w = 1 + static_cast<Label>(rng() % vocab);
  return s;
}

StdFst Sausage(int slots, int alts) {
  StdFst fst;
  fst.AddStates(slots + 1);
  fst.SetStart(0);
  for (int s = 0; s < slots; ++s)
    for (int a = 1; a <= alts; ++a) fst.AddArc(s, a, a, TropicalWeight::One(), s + 1);
  fst.SetFinal(slots, TropicalWeight::One());
  return fst;
}

StdFst TwoPaths(const Labels &x, double cost_x, const Labels &y, double cost_y) {
  StdFst fst;
  StateId start = fst.AddState();
  fst.SetStart(start);
  for (auto [words, cost] : {std::pair(x, cost_x), std::pair(y, cost_y)}) {
    StateId cur = start;
    for (size_t i = 0; i < words.size(); ++i) {
      StateId next = fst.AddState();
      fst.AddArc(cur, words[i], words[i], TropicalWeight(i == 0 ? cost : 0.0), next);
      cur = next;
    }
    fst.SetFinal(cur, TropicalWeight::One());
  }
  return fst;
}

TEST_CASE("edit distance examples") {
  std::vector<std::string> abc = {"a", "b", "c"}, axc = {"a", "x", "c"}, ab = {"a", "b"};
  ErrorBreakdown e = EditDistance(abc, axc);
  CHECK(e.substitutions == 1);
  CHECK(e.deletions == 0);
  CHECK(e.insertions == 0);
  CHECK(e.wer == doctest::Approx(1.0 / 3.0));
  e = EditDistance(ab, std::vector<std::string>{});
  CHECK(e.deletions == 2);
  CHECK(e.wer == 1.0);
  e = EditDistance(std::vector<std::string>{}, ab);
  CHECK(e.insertions == 2);
  CHECK(e.wer == 2.0);
  CHECK(EditDistance(std::vector<std::string>{}, std::vector<std::string>{}).wer == 0.0);
}

TEST_CASE("edit distance equals exhaustive recursion") {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 500; ++i) {
    Labels r = RandomSeq(rng, 7, 3), h = RandomSeq(rng, 7, 3);
    ErrorBreakdown e = EditDistance(r, h);
    CHECK(e.Errors() == BruteDistance(r, 0, h, 0));
    CHECK(e.reference_length == r.size());
    CHECK(e.deletions <= r.size());
    ErrorBreakdown swapped = EditDistance(h, r);
    CHECK(e.deletions + h.size() == e.insertions + r.size());
    CHECK(swapped.deletions == e.insertions);
    CHECK(swapped.insertions == e.deletions);
    CHECK(swapped.substitutions == e.substitutions);
  }
}

TEST_CASE("mer filter") {
  std::vector<Transcript> transcripts = {
      {"u1", {"a", "b", "c", "d"}},
      {"u2", {"a", "b", "c", "d"}},
      {"u3", {"a", "b"}},
  };
  std::vector<Transcript> decodes = {
      {"u3", {"a", "b"}},
      {"u2", {"a", "x", "y", "d"}},    // MER 50%
      {"u1", {"a", "b", "c", "x"}},    // MER 25%
  };
  MerPartition p = MerFilter(transcripts, decodes, 40.0);
  CHECK(p.kept == std::vector<std::string>{"u1", "u3"});
  CHECK(p.dropped == std::vector<std::string>{"u2"});
  CHECK(p.report.size() == 3);
  CHECK(p.report[1].errors.wer == 0.5);
  CHECK(p.report[2].errors.wer == 0.0);
  CHECK(MerFilter(transcripts, decodes, 0.0).kept == std::vector<std::string>{"u3"});
  CHECK(MerFilter(transcripts, decodes, 50.0).kept.size() == 3);

  size_t previous = 0;
  for (double threshold = 0.0; threshold <= 100.0; threshold += 5.0) {
    MerPartition q = MerFilter(transcripts, decodes, threshold);
    CHECK(q.kept.size() + q.dropped.size() == transcripts.size());
    CHECK(q.kept.size() >= previous);
    previous = q.kept.size();
  }

  decodes.pop_back();
  decodes.push_back({"u9", {"a"}});
  CHECK_THROWS_WITH_AS(MerFilter(transcripts, decodes, 40.0),
                       doctest::Contains("u1"), Error);
  CHECK_THROWS_WITH_AS(MerFilter(transcripts, decodes, 40.0),
                       doctest::Contains("u9"), Error);
}

TEST_CASE("expected WER") {
  Labels ref = {1, 2};
  CHECK(ExpectedWer(LinearFst(ref), ref, 10) == 0.0);
  // One exact path and one with a substitution, equal cost.
  CHECK(ExpectedWer(TwoPaths({1, 2}, 0.0, {1, 3}, 0.0), ref, 10) == doctest::Approx(0.25));
  // Posteriors 0.75 / 0.25.
  CHECK(ExpectedWer(TwoPaths({1, 2}, 0.0, {1, 3}, std::log(3.0)), ref, 10) ==
        doctest::Approx(0.125).epsilon(1e-12));
  CHECK_THROWS_AS(ExpectedWer(Sausage(3, 3), ref, 26), Error);
  CHECK_NOTHROW(ExpectedWer(Sausage(3, 3), ref, 27));
  StdFst empty;
  empty.AddState();
  empty.SetStart(0);
  CHECK_THROWS_AS(ExpectedWer(empty, ref, 10), Error);
}

TEST_CASE("expected WER with uniform weights is the mean path WER") {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 200; ++i) {
    StdFst lat = ScaleWeightsToOne(testing::RandomSausage(rng, 1 + rng() % 4, 3, 4, 0.2));
    Labels ref = RandomSeq(rng, 5, 4);
    auto paths = testing::OraclePaths(lat);
    double sum = 0.0;
    for (const auto &p : paths) sum += EditDistance(ref, p.olabels).wer;
    CHECK(ExpectedWer(lat, ref, 1000) == doctest::Approx(sum / paths.size()).epsilon(1e-12));
  }
}

TEST_CASE("row-merged expected WER equals enumeration") {
  Labels ref = {1, 2};
  CHECK(ExpectedWerExact(TwoPaths({1, 2}, 0.0, {1, 3}, std::log(3.0)), ref) ==
        doctest::Approx(0.125).epsilon(1e-12));
  std::mt19937_64 rng(54);
  testing::RandomFstOptions opts;
  opts.acceptor = true;
  opts.num_labels = 4;
  opts.epsilon_prob = 0.2;
  opts.min_cost = 0.0;
  opts.half_integer_costs = false;
  for (int i = 0; i < 300; ++i) {
    StdFst lat = i % 2 ? testing::RandomSausage(rng, 1 + rng() % 5, 3, 4, 0.3)
                       : testing::RandomAcyclicFst<TropicalWeight>(rng, opts);
    if (testing::OraclePaths(lat).empty()) continue;
    Labels ref = RandomSeq(rng, 6, 4);
    CHECK(ExpectedWerExact(lat, ref) ==
          doctest::Approx(ExpectedWer(lat, ref, 100000)).epsilon(1e-12));
  }
  StdFst empty;
  empty.AddState();
  empty.SetStart(0);
  CHECK_THROWS_AS(ExpectedWerExact(empty, ref), Error);
  CHECK_THROWS_AS(ExpectedWerExact(Sausage(6, 4), Labels{1, 2, 3, 4, 1, 2}, 10), Error);
}

TEST_CASE("oracle WER") {
  Labels ab = {1, 2};
  CHECK(OracleWer(TwoPaths({1, 2}, 0, {3}, 0), ab).wer == 0.0);
  ErrorBreakdown e = OracleWer(TwoPaths({1, 9}, 0, {8, 2}, 0), ab);
  CHECK(e.substitutions == 1);
  CHECK(e.deletions == 0);
  CHECK(e.insertions == 0);
  CHECK(e.wer == 0.5);
  StdFst empty;
  empty.AddState();
  empty.SetStart(0);
  CHECK_THROWS_AS(OracleWer(empty, ab), Error);

  std::mt19937_64 rng(53);
  for (int i = 0; i < 300; ++i) {
    StdFst lat = testing::RandomSausage(rng, 1 + rng() % 5, 2, 4, 0.3);
    Labels ref = RandomSeq(rng, 6, 4);
    auto paths = testing::OraclePaths(lat);
    size_t best = SIZE_MAX;
    for (const auto &p : paths) best = std::min(best, BruteDistance(ref, 0, p.olabels, 0));
    ErrorBreakdown o = OracleWer(lat, ref);
    CHECK(o.Errors() == best);
    CHECK(ExpectedWer(lat, ref, 1000) >= o.wer - 1e-12);
  }
}

TEST_CASE("lattice depth") {
  LatticeStats linear = LatticeDepth(LinearFst(std::vector<Label>{1, 2, 3, 4, 5}));
  CHECK(linear.depth == 1.0);
  CHECK(linear.path_count == 1);
  CHECK(linear.states == 6);
  LatticeStats sausage = LatticeDepth(Sausage(4, 3));
  CHECK(sausage.depth == 3.0);
  CHECK(sausage.path_count == 81);
  CHECK(sausage.arcs == 12);
  CHECK(sausage.longest_path == 4);
  StdFst empty;
  empty.AddState();
  empty.SetStart(0);
  CHECK_THROWS_AS(LatticeDepth(empty), Error);
}

}  // namespace
}  // namespace latcomb
