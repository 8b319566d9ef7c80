// tools/cli.cc

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

#include "cli.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "latcomb/archive.h"
#include "latcomb/arpa-io.h"
#include "latcomb/combiner.h"
#include "latcomb/fst-lib.h"
#include "latcomb/grammar-fst.h"
#include "latcomb/metrics.h"
#include "latcomb/ngram-model.h"
#include "latcomb/prune.h"
#include "latcomb/simulate.h"

namespace latcomb {

namespace {

using SymsPtr = std::shared_ptr<const SymbolTable>;

// Per-run flags shared by the batch subcommands.
struct BatchFlags {
  int jobs = 0;
  bool fail_fast = false;
};

template <class T>
struct Outcome {
  std::optional<T> value;
  std::string error;
};

// Applies `fn` to indices [0, n) on a worker pool.  Results keep input
// order.  With `fail_fast`, indices after the first failure (in input
// order) are skipped and dropped, so the result does not depend on timing.
template <class T>
std::vector<Outcome<T>> ParallelMap(size_t n, const BatchFlags &flags,
                                    const std::function<T(size_t)> &fn) {
  std::vector<Outcome<T>> results(n);
  std::atomic<size_t> next{0}, first_failure{n};
  auto work = [&]() {
    for (size_t i = next++; i < n; i = next++) {
      if (flags.fail_fast && i > first_failure.load()) continue;
      try {
        results[i].value = fn(i);
      } catch (const std::exception &e) {
        results[i].error = e.what();
        size_t seen = first_failure.load();
        while (i < seen && !first_failure.compare_exchange_weak(seen, i)) {
        }
      }
    }
  };
  unsigned jobs = flags.jobs > 0 ? static_cast<unsigned>(flags.jobs)
                                 : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<size_t>(jobs, std::max<size_t>(n, 1)));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(work);
  work();
  for (auto &t : pool) t.join();
  if (flags.fail_fast && first_failure < n) results.resize(first_failure + 1);
  return results;
}

// Reports failures as "utt-id: message"; returns the exit status.
template <class T>
int ReportFailures(const std::vector<Outcome<T>> &results, const std::vector<std::string> &ids,
                   std::ostream &err) {
  int status = kExitOk;
  for (size_t i = 0; i < results.size(); ++i)
    if (!results[i].value) {
      err << ids[i] << ": " << results[i].error << '\n';
      status = kExitUtteranceFailures;
    }
  return status;
}

SymsPtr LoadSyms(const std::string &path) {
  return std::make_shared<const SymbolTable>(SymbolTable::ReadFile(path));
}

std::vector<ArchiveEntry> LoadArchive(const std::string &path, const SymsPtr &syms) {
  auto entries = ReadArchiveFile(path, syms.get());
  for (auto &e : entries) e.fst.SetSymbols(syms);
  return entries;
}

StdFst LoadFst(const std::string &path, const SymsPtr &syms) {
  StdFst fst = ReadFstFile<TropicalWeight>(path, syms.get());
  fst.SetSymbols(syms);
  return fst;
}

std::vector<std::string> Ids(const std::vector<ArchiveEntry> &entries) {
  std::vector<std::string> ids;
  for (const auto &e : entries) ids.push_back(e.id);
  return ids;
}

// Transcript for each archive entry, in archive order; the id sets must agree.
std::vector<const Transcript *> MatchIds(const std::vector<ArchiveEntry> &entries,
                                         const std::vector<Transcript> &transcripts,
                                         const std::string &what) {
  std::map<std::string, const Transcript *> by_id;
  for (const auto &t : transcripts) by_id.emplace(t.id, &t);
  std::vector<const Transcript *> out;
  std::string missing, extra;
  std::map<std::string, bool> in_archive;
  for (const auto &e : entries) {
    in_archive.emplace(e.id, true);
    auto it = by_id.find(e.id);
    if (it == by_id.end()) missing += " " + e.id;
    else out.push_back(it->second);
  }
  for (const auto &t : transcripts)
    if (!in_archive.count(t.id)) extra += " " + t.id;
  if (!missing.empty() || !extra.empty()) {
    std::string msg = "utterance ids differ;";
    if (!missing.empty()) msg += " no " + what + " for:" + missing + ";";
    if (!extra.empty()) msg += " not in the lattice archive:" + extra;
    throw Error(msg);
  }
  return out;
}

std::string FormatValue(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

// Writes to `path`, or to `out` when the path is "-".
void WithOutput(const std::string &path, std::ostream &out,
                const std::function<void(std::ostream &)> &write) {
  if (path == "-") {
    write(out);
    return;
  }
  std::ofstream os(path);
  if (!os) throw Error("cannot write " + path);
  write(os);
  if (!os) throw Error("error writing " + path);
}

struct Row {
  std::string metric;
  double value;
};

// "utt<TAB>metric<TAB>value" lines, then one ALL line per metric holding
// the mean over the utterances that succeeded.
int WriteReport(const std::vector<Outcome<std::vector<Row>>> &results,
                const std::vector<std::string> &ids, const std::string &path,
                std::ostream &out, std::ostream &err) {
  std::vector<std::string> metrics;
  std::map<std::string, std::pair<double, size_t>> totals;
  WithOutput(path, out, [&](std::ostream &os) {
    for (size_t i = 0; i < results.size(); ++i) {
      if (!results[i].value) continue;
      for (const auto &row : *results[i].value) {
        os << ids[i] << '\t' << row.metric << '\t' << FormatValue(row.value) << '\n';
        auto [it, inserted] = totals.emplace(row.metric, std::pair(0.0, size_t{0}));
        if (inserted) metrics.push_back(row.metric);
        it->second.first += row.value;
        ++it->second.second;
      }
    }
    for (const auto &m : metrics)
      os << "ALL\t" << m << '\t'
         << FormatValue(totals[m].first / static_cast<double>(totals[m].second)) << '\n';
  });
  return ReportFailures(results, ids, err);
}

int WriteArchiveResults(const std::vector<Outcome<StdFst>> &results,
                        const std::vector<std::string> &ids, const std::string &path,
                        std::ostream &out, std::ostream &err) {
  WithOutput(path, out, [&](std::ostream &os) {
    for (size_t i = 0; i < results.size(); ++i)
      if (results[i].value) WriteArchiveEntry({ids[i], *results[i].value}, os);
  });
  return ReportFailures(results, ids, err);
}

// Maps G from the model vocabulary onto `target`; words `target` lacks are
// dropped together with their arcs.
StdFst Relabel(const StdFst &g, const SymbolTable &from, const SymsPtr &target) {
  std::vector<std::optional<Label>> map(from.AvailableKey());
  for (Label l : from.Labels()) {
    if (l == kEpsilon) map[l] = kEpsilon;
    else if (auto id = target->Find(from.Symbol(l))) map[l] = *id;
  }
  StdFst out;
  out.AddStates(g.NumStates());
  out.SetStart(g.Start());
  for (StateId s = 0; s < g.NumStates(); ++s) {
    if (g.IsFinal(s)) out.SetFinal(s, g.Final(s));
    for (const auto &arc : g.Arcs(s)) {
      auto i = map[arc.ilabel], o = map[arc.olabel];
      if (i && o) out.AddArc(s, *i, *o, arc.weight, arc.nextstate);
    }
  }
  out = Connect(out);
  out.SortArcs();
  out.SetSymbols(target);
  return out;
}

void AddBatchFlags(CLI::App *sub, BatchFlags &flags) {
  sub->add_option("--jobs", flags.jobs, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  sub->add_flag("--fail-fast", flags.fail_fast, "Stop at the first failing utterance");
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Lattice and transcript combination tools", "latcomb"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  BatchFlags batch;
  std::string transcripts_path, lattices_path, syms_path, out_path = "-", refs_path;
  std::string grammar_path, decodes_path, kept_path, dropped_path, in_path, bg_path;
  std::string corpus_path, arpa_path, in_syms_path, out_syms_path, out_dir;
  double threshold = 0.0, reward = 0.0, lambda = 0.0;
  size_t cap = 100000, vocab_cap = std::numeric_limits<size_t>::max(), count = 100;
  int order = 3;
  std::string method = "rows";
  CombineConfig combine_config;
  double prune_offset = 0.0;
  bool keep_weights = false, explicit_edit = false, epsilon_backoff = false;
  bool rmeps = false, determinize = false, minimize = false, project_output = false;
  NoiseConfig noise;

  auto *combine = app.add_subcommand("combine", "Combine transcripts with hypothesis lattices");
  combine->add_option("--transcripts", transcripts_path)->required();
  combine->add_option("--lattices", lattices_path)->required();
  combine->add_option("--syms", syms_path)->required();
  combine->add_option("--out", out_path, "Output archive")->required();
  combine->add_option("--prune", prune_offset, "Keep paths within this many matches of the best")
      ->check(CLI::NonNegativeNumber);
  combine->add_flag("--keep-weights", keep_weights, "Keep match rewards on the output");
  combine->add_flag("--explicit-edit", explicit_edit, "Build the edit transducer explicitly");
  AddBatchFlags(combine, batch);

  auto *prune = app.add_subcommand("prune", "Keep paths within a cost offset of the best");
  prune->add_option("--lattices", lattices_path)->required();
  prune->add_option("--syms", syms_path)->required();
  prune->add_option("--threshold", threshold)->required()->check(CLI::NonNegativeNumber);
  prune->add_option("--out", out_path)->required();
  AddBatchFlags(prune, batch);

  auto *rescore = app.add_subcommand("rescore", "Compose lattices with a grammar FST");
  rescore->add_option("--lattices", lattices_path)->required();
  rescore->add_option("--syms", syms_path)->required();
  rescore->add_option("--grammar", grammar_path)->required();
  rescore->add_option("--out", out_path)->required();
  AddBatchFlags(rescore, batch);

  auto *mer = app.add_subcommand("mer-filter", "Split utterances by matching error rate");
  mer->add_option("--transcripts", transcripts_path)->required();
  mer->add_option("--decodes", decodes_path)->required();
  mer->add_option("--threshold", threshold, "Percent")->required()->check(CLI::NonNegativeNumber);
  mer->add_option("--kept", kept_path);
  mer->add_option("--dropped", dropped_path);
  mer->add_option("--report", out_path, "TSV report (- for stdout)");

  auto *ewer = app.add_subcommand("expected-wer", "Posterior-weighted WER of each lattice");
  ewer->add_option("--refs", refs_path)->required();
  ewer->add_option("--lattices", lattices_path)->required();
  ewer->add_option("--syms", syms_path)->required();
  ewer->add_option("--out", out_path, "TSV report (- for stdout)");
  ewer->add_option("--method", method, "rows (merged alignment rows) or enumerate")
      ->check(CLI::IsMember({"rows", "enumerate"}));
  ewer->add_option("--cap", cap, "Path cap for --method enumerate");
  AddBatchFlags(ewer, batch);

  auto *owER = app.add_subcommand("oracle-wer", "Lowest WER of any lattice path");
  owER->add_option("--refs", refs_path)->required();
  owER->add_option("--lattices", lattices_path)->required();
  owER->add_option("--syms", syms_path)->required();
  owER->add_option("--out", out_path, "TSV report (- for stdout)");
  AddBatchFlags(owER, batch);

  auto *depth = app.add_subcommand("depth", "Structural lattice depth");
  depth->add_option("--lattices", lattices_path)->required();
  depth->add_option("--syms", syms_path)->required();
  depth->add_option("--out", out_path, "TSV report (- for stdout)");
  AddBatchFlags(depth, batch);

  auto *train = app.add_subcommand("lm-train", "Estimate a Witten-Bell n-gram model");
  train->add_option("--corpus", corpus_path)->required();
  train->add_option("--order", order)->check(CLI::PositiveNumber);
  train->add_option("--vocab-cap", vocab_cap)->check(CLI::PositiveNumber);
  train->add_option("--out", out_path)->required();

  auto *interp = app.add_subcommand("lm-interpolate", "Mix two n-gram models");
  interp->add_option("--lambda", lambda, "Weight of --in")->required()->check(CLI::Range(0.0, 1.0));
  interp->add_option("--in", in_path)->required();
  interp->add_option("--bg", bg_path)->required();
  interp->add_option("--out", out_path)->required();

  auto *to_fst = app.add_subcommand("lm-to-fst", "Grammar acceptor from an ARPA model");
  to_fst->add_option("--arpa", arpa_path)->required();
  to_fst->add_option("--out", out_path)->required();
  to_fst->add_option("--syms", syms_path, "Relabel onto this table, dropping missing words");
  to_fst->add_option("--write-syms", out_syms_path, "Write the model vocabulary");
  to_fst->add_flag("--epsilon-backoff", epsilon_backoff, "Compact form with epsilon back-off arcs");

  auto *word_reward = app.add_subcommand("word-reward", "Subtract a reward from word arcs");
  word_reward->add_option("--reward", reward)->required()->check(CLI::NonNegativeNumber);
  word_reward->add_option("--in", in_path)->required();
  word_reward->add_option("--out", out_path)->required();
  word_reward->add_option("--syms", syms_path);

  auto *simulate = app.add_subcommand("simulate", "Generate a synthetic corpus");
  simulate->add_option("--out-dir", out_dir)->required();
  simulate->add_option("--count", count)->check(CLI::PositiveNumber);
  simulate->add_option("--seed", noise.seed);
  simulate->add_option("--vocab-size", noise.vocab_size);
  simulate->add_option("--min-length", noise.min_length);
  simulate->add_option("--max-length", noise.max_length);
  simulate->add_option("--p-delete", noise.p_delete);
  simulate->add_option("--p-substitute", noise.p_substitute);
  simulate->add_option("--p-insert", noise.p_insert);
  simulate->add_option("--alternatives", noise.alternatives);
  simulate->add_option("--correct-prob", noise.correct_prob);
  simulate->add_option("--slot-drop", noise.slot_drop);

  auto *convert = app.add_subcommand("fst-convert", "Relabel or transform a text FST");
  convert->add_option("--in", in_path)->required();
  convert->add_option("--out", out_path)->required();
  convert->add_option("--in-syms", in_syms_path);
  convert->add_option("--out-syms", out_syms_path);
  convert->add_flag("--project-output", project_output);
  convert->add_flag("--rmeps", rmeps);
  convert->add_flag("--determinize", determinize);
  convert->add_flag("--minimize", minimize);

  std::vector<std::string> argv_storage{"latcomb"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char *> argv;
  for (const auto &a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (combine->parsed()) {
      auto syms = LoadSyms(syms_path);
      auto lattices = LoadArchive(lattices_path, syms);
      auto transcripts = ReadTranscriptFile(transcripts_path);
      auto matched = MatchIds(lattices, transcripts, "transcript");
      combine_config.prune_multiplier = TropicalWeight(prune_offset);
      combine_config.strip_weights_after_prune = !keep_weights;
      combine_config.lazy_edit = !explicit_edit;
      combine_config.Validate();
      auto results = ParallelMap<StdFst>(lattices.size(), batch, [&](size_t i) {
        StdFst t = Combine(TranscriptToLabels(matched[i]->words, *syms), lattices[i].fst,
                           combine_config);
        t.SetSymbols(syms);
        return t;
      });
      return WriteArchiveResults(results, Ids(lattices), out_path, out, err);
    }
    if (prune->parsed()) {
      auto syms = LoadSyms(syms_path);
      auto lattices = LoadArchive(lattices_path, syms);
      auto results = ParallelMap<StdFst>(lattices.size(), batch, [&](size_t i) {
        StdFst p = PruneToThreshold(lattices[i].fst, TropicalWeight(threshold));
        p.SetSymbols(syms);
        return p;
      });
      return WriteArchiveResults(results, Ids(lattices), out_path, out, err);
    }
    if (rescore->parsed()) {
      auto syms = LoadSyms(syms_path);
      auto lattices = LoadArchive(lattices_path, syms);
      StdFst g = LoadFst(grammar_path, syms);
      auto results = ParallelMap<StdFst>(lattices.size(), batch, [&](size_t i) {
        return RescoreWithGrammar(lattices[i].fst, g, lattices[i].id);
      });
      return WriteArchiveResults(results, Ids(lattices), out_path, out, err);
    }
    if (mer->parsed()) {
      MerPartition p = MerFilter(ReadTranscriptFile(transcripts_path),
                                 ReadTranscriptFile(decodes_path), threshold);
      auto write_ids = [&](const std::string &path, const std::vector<std::string> &ids) {
        if (path.empty()) return;
        WithOutput(path, out, [&](std::ostream &os) {
          for (const auto &id : ids) os << id << '\n';
        });
      };
      write_ids(kept_path, p.kept);
      write_ids(dropped_path, p.dropped);
      std::vector<Outcome<std::vector<Row>>> rows;
      std::vector<std::string> ids;
      for (const auto &r : p.report) {
        rows.push_back({std::vector<Row>{{"mer", r.errors.wer}, {"kept", r.kept ? 1.0 : 0.0}}, ""});
        ids.push_back(r.id);
      }
      return WriteReport(rows, ids, out_path, out, err);
    }
    if (ewer->parsed() || owER->parsed()) {
      auto syms = LoadSyms(syms_path);
      auto lattices = LoadArchive(lattices_path, syms);
      auto references = ReadTranscriptFile(refs_path);
      auto refs = MatchIds(lattices, references, "reference");
      const bool expected = ewer->parsed();
      auto results = ParallelMap<std::vector<Row>>(lattices.size(), batch, [&](size_t i) {
        std::vector<Label> ref;
        for (const auto &w : refs[i]->words) {
          auto id = syms->Find(w);
          if (!id) throw Error("reference word '" + w + "' is not in the symbol table");
          ref.push_back(*id);
        }
        if (expected) {
          double v = method == "rows" ? ExpectedWerExact(lattices[i].fst, ref)
                                      : ExpectedWer(lattices[i].fst, ref, cap);
          return std::vector<Row>{{"expected_wer", v}};
        }
        ErrorBreakdown e = OracleWer(lattices[i].fst, ref);
        return std::vector<Row>{{"oracle_wer", e.wer},
                                {"substitutions", static_cast<double>(e.substitutions)},
                                {"deletions", static_cast<double>(e.deletions)},
                                {"insertions", static_cast<double>(e.insertions)}};
      });
      return WriteReport(results, Ids(lattices), out_path, out, err);
    }
    if (depth->parsed()) {
      auto syms = LoadSyms(syms_path);
      auto lattices = LoadArchive(lattices_path, syms);
      auto results = ParallelMap<std::vector<Row>>(lattices.size(), batch, [&](size_t i) {
        LatticeStats s = LatticeDepth(lattices[i].fst);
        return std::vector<Row>{{"structural_depth", s.depth},
                                {"paths", static_cast<double>(s.path_count)},
                                {"states", static_cast<double>(s.states)},
                                {"arcs", static_cast<double>(s.arcs)}};
      });
      return WriteReport(results, Ids(lattices), out_path, out, err);
    }
    if (train->parsed()) {
      NGramModel m = EstimateWittenBell(ReadCorpusFile(corpus_path), order, vocab_cap);
      WithOutput(out_path, out, [&](std::ostream &os) { WriteArpa(m, os); });
      return kExitOk;
    }
    if (interp->parsed()) {
      NGramModel m = Interpolate(ReadArpaFile(in_path), ReadArpaFile(bg_path), lambda);
      WithOutput(out_path, out, [&](std::ostream &os) { WriteArpa(m, os); });
      return kExitOk;
    }
    if (to_fst->parsed()) {
      NGramModel m = ReadArpaFile(arpa_path);
      StdFst g = ToGrammarFst(m, {.epsilon_backoff = epsilon_backoff});
      if (!syms_path.empty()) g = Relabel(g, m.Vocab(), LoadSyms(syms_path));
      if (!out_syms_path.empty()) m.Vocab().WriteFile(out_syms_path);
      WithOutput(out_path, out, [&](std::ostream &os) { WriteFstText(g, os, g.Symbols().get()); });
      return kExitOk;
    }
    if (word_reward->parsed()) {
      SymsPtr syms = syms_path.empty() ? nullptr : LoadSyms(syms_path);
      StdFst g = ApplyWordReward(LoadFst(in_path, syms), reward);
      WithOutput(out_path, out, [&](std::ostream &os) { WriteFstText(g, os, syms.get()); });
      return kExitOk;
    }
    if (simulate->parsed()) {
      WriteSimulatedCorpus(Generate(noise, count), out_dir);
      return kExitOk;
    }
    if (convert->parsed()) {
      SymsPtr in_syms = in_syms_path.empty() ? nullptr : LoadSyms(in_syms_path);
      SymsPtr out_syms = out_syms_path.empty() ? nullptr : LoadSyms(out_syms_path);
      StdFst fst = LoadFst(in_path, in_syms);
      if (project_output) fst = ProjectOutput(fst);
      if (rmeps) fst = RemoveEpsilons(fst);
      if (determinize) fst = Determinize(fst);
      if (minimize) fst = Minimize(fst);
      if (out_syms && in_syms) fst = Relabel(fst, *in_syms, out_syms);
      WithOutput(out_path, out, [&](std::ostream &os) { WriteFstText(fst, os, out_syms.get()); });
      return kExitOk;
    }
  } catch (const std::exception &e) {
    err << "latcomb: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace latcomb
