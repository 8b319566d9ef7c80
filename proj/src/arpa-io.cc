// src/arpa-io.cc

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

#include "latcomb/arpa-io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>

#include "latcomb/error.h"
#include "latcomb/fst-io.h"  // FormatCost, SplitFields

namespace latcomb {

namespace {

constexpr double kNoProbLog10 = -99.0;

struct ArpaEntry {
  std::vector<std::string> words;
  std::optional<double> log10_prob;
  std::optional<double> log10_backoff;
  size_t line_no = 0;
};

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

[[noreturn]] void Fail(size_t line_no, const std::string &what) {
  throw Error("arpa line " + std::to_string(line_no) + ": " + what);
}

size_t ParseCount(std::string_view token, size_t line_no) {
  size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    Fail(line_no, "bad number '" + std::string(token) + "'");
  return value;
}

double ParseLog10(std::string_view token, size_t line_no) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value))
    Fail(line_no, "bad value '" + std::string(token) + "'");
  return value;
}

// "\k-grams:" -> k, or 0 if `line` is not a section header.
size_t SectionOrder(std::string_view line, size_t line_no) {
  constexpr std::string_view kSuffix = "-grams:";
  if (line.size() < 2 + kSuffix.size() || line.front() != '\\' ||
      line.substr(line.size() - kSuffix.size()) != kSuffix)
    return 0;
  return ParseCount(line.substr(1, line.size() - 1 - kSuffix.size()), line_no);
}

}  // namespace

void WriteArpa(const NGramModel &model, std::ostream &os) {
  using Values = std::pair<std::optional<double>, std::optional<double>>;
  std::vector<std::map<NGramModel::Context, Values>> ngrams(model.Order());
  for (const auto &[context, entry] : model.Contexts()) {
    for (const auto &[word, prob] : entry.probs) {
      NGramModel::Context ngram = context;
      ngram.push_back(word);
      ngrams[context.size()][ngram].first = prob;
    }
    if (!context.empty()) ngrams[context.size() - 1][context].second = entry.backoff;
  }
  os << "\n\\data\\\n";
  for (int k = 0; k < model.Order(); ++k)
    os << "ngram " << k + 1 << '=' << ngrams[k].size() << '\n';
  for (int k = 0; k < model.Order(); ++k) {
    os << "\n\\" << k + 1 << "-grams:\n";
    for (const auto &[ngram, values] : ngrams[k]) {
      os << (values.first ? FormatCost(std::log10(*values.first)) : "-99") << '\t';
      for (size_t i = 0; i < ngram.size(); ++i)
        os << (i ? " " : "") << model.Vocab().Symbol(ngram[i]);
      if (values.second) os << '\t' << FormatCost(std::log10(*values.second));
      os << '\n';
    }
  }
  os << "\n\\end\\\n";
}

void WriteArpaFile(const NGramModel &model, const std::string &path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot write " + path);
  WriteArpa(model, os);
}

NGramModel ReadArpa(std::istream &is) {
  std::vector<size_t> declared;
  std::vector<ArpaEntry> entries;
  std::vector<size_t> found;
  bool in_data = false, ended = false;
  size_t section = 0, line_no = 0;
  std::string raw;
  while (!ended && std::getline(is, raw)) {
    ++line_no;
    std::string_view line = Trim(raw);
    if (!in_data) {
      if (line == "\\data\\") in_data = true;
      continue;
    }
    if (line.empty()) continue;
    if (line == "\\end\\") {
      ended = true;
    } else if (size_t k = SectionOrder(line, line_no)) {
      if (k != section + 1) Fail(line_no, "expected section \\" + std::to_string(section + 1) + "-grams:");
      if (k > declared.size()) Fail(line_no, "section for an undeclared order");
      section = k;
      found.push_back(0);
    } else if (section == 0) {
      if (line.substr(0, 6) != "ngram ") Fail(line_no, "expected 'ngram k=count'");
      auto eq = line.find('=');
      if (eq == std::string_view::npos) Fail(line_no, "expected 'ngram k=count'");
      size_t k = ParseCount(Trim(line.substr(6, eq - 6)), line_no);
      if (k != declared.size() + 1) Fail(line_no, "ngram orders must be declared in sequence");
      declared.push_back(ParseCount(Trim(line.substr(eq + 1)), line_no));
    } else {
      auto fields = internal::SplitFields(line);
      if (fields.size() != section + 1 && fields.size() != section + 2)
        Fail(line_no, "expected " + std::to_string(section) + " words");
      ArpaEntry entry;
      entry.line_no = line_no;
      double log10_prob = ParseLog10(fields[0], line_no);
      if (log10_prob > kNoProbLog10) entry.log10_prob = log10_prob;
      for (size_t i = 1; i <= section; ++i) entry.words.emplace_back(fields[i]);
      if (fields.size() == section + 2) entry.log10_backoff = ParseLog10(fields.back(), line_no);
      entries.push_back(std::move(entry));
      ++found.back();
    }
  }
  if (!in_data) throw Error("arpa: missing \\data\\ header");
  if (!ended) throw Error("arpa: missing \\end\\ marker");
  if (declared.empty()) throw Error("arpa: no ngram counts declared");
  if (section != declared.size())
    Fail(line_no, "expected section \\" + std::to_string(section + 1) + "-grams:");
  for (size_t k = 0; k < declared.size(); ++k)
    if (found[k] != declared[k])
      throw Error("arpa: \\data\\ declares " + std::to_string(declared[k]) + " " +
                  std::to_string(k + 1) + "-grams but the section has " +
                  std::to_string(found[k]));

  auto vocab = std::make_shared<SymbolTable>(LmBaseSymbols());
  for (const auto &e : entries)
    if (e.words.size() == 1) vocab->AddSymbol(e.words[0]);
  NGramModel model(static_cast<int>(declared.size()), vocab);
  for (const auto &e : entries) {
    try {
      NGramModel::Context ngram;
      for (const auto &w : e.words) {
        auto id = vocab->Find(w);
        if (!id) Fail(e.line_no, "word '" + w + "' has no unigram");
        ngram.push_back(*id);
      }
      if (e.log10_prob) {
        NGramModel::Context context(ngram.begin(), ngram.end() - 1);
        model.SetProb(context, ngram.back(), std::pow(10.0, *e.log10_prob));
      }
      if (e.log10_backoff) model.SetBackoff(ngram, std::pow(10.0, *e.log10_backoff));
    } catch (const Error &err) {
      std::string what = err.what();
      if (what.rfind("arpa line", 0) == 0) throw;
      Fail(e.line_no, what);
    }
  }
  return model;
}

NGramModel ReadArpaFile(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open " + path);
  return ReadArpa(is);
}

}  // namespace latcomb
