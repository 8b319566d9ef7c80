// include/latcomb/fst-io.h

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

#ifndef LATCOMB_FST_IO_H_
#define LATCOMB_FST_IO_H_

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "latcomb/fst.h"

namespace latcomb {

// Text format, one entry per line:
//   src dst ilabel olabel [cost]     an arc
//   state [cost]                     a final state
// The source state of the first line is the start state.  A missing cost
// means 0.  Labels are integers, or symbols when a table is supplied to the
// reader.  Costs are written in shortest round-trip form, so reading and
// re-writing a file reproduces it byte for byte.

std::string FormatCost(double cost);
double ParseCost(std::string_view token, size_t line_no);

namespace internal {

std::vector<std::string_view> SplitFields(std::string_view line);
Label ParseLabel(std::string_view token, const SymbolTable *syms, size_t line_no);
StateId ParseStateId(std::string_view token, size_t line_no);

}  // namespace internal

template <class W>
void WriteFstText(const Fst<W> &fst, std::ostream &os,
                  const SymbolTable *print_syms = nullptr) {
  if (fst.Empty()) return;
  auto label = [&](Label l) -> std::string {
    return print_syms ? print_syms->Symbol(l) : std::to_string(l);
  };
  auto write_state = [&](StateId s) {
    for (const auto &arc : fst.Arcs(s)) {
      os << s << '\t' << arc.nextstate << '\t' << label(arc.ilabel) << '\t'
         << label(arc.olabel);
      if (arc.weight.Value() != 0.0) os << '\t' << FormatCost(arc.weight.Value());
      os << '\n';
    }
    if (fst.IsFinal(s)) {
      os << s;
      if (fst.Final(s).Value() != 0.0) os << '\t' << FormatCost(fst.Final(s).Value());
      os << '\n';
    }
  };
  write_state(fst.Start());
  for (StateId s = 0; s < fst.NumStates(); ++s)
    if (s != fst.Start()) write_state(s);
}

// Parses the text format from a sequence of lines; `first_line_no` is used
// in error messages.  Blank lines are skipped.
template <class W>
Fst<W> ParseFstLines(const std::vector<std::string> &lines, size_t first_line_no,
                     const SymbolTable *syms = nullptr) {
  Fst<W> fst;
  auto ensure = [&](StateId s) {
    if (s >= fst.NumStates()) fst.AddStates(s + 1 - fst.NumStates());
  };
  for (size_t i = 0; i < lines.size(); ++i) {
    const size_t line_no = first_line_no + i;
    auto fields = internal::SplitFields(lines[i]);
    if (fields.empty()) continue;
    StateId src = internal::ParseStateId(fields[0], line_no);
    ensure(src);
    if (fst.Empty()) fst.SetStart(src);
    if (fields.size() <= 2) {
      double cost = fields.size() == 2 ? ParseCost(fields[1], line_no) : 0.0;
      fst.SetFinal(src, W(cost));
    } else if (fields.size() == 4 || fields.size() == 5) {
      StateId dst = internal::ParseStateId(fields[1], line_no);
      ensure(dst);
      Label ilabel = internal::ParseLabel(fields[2], syms, line_no);
      Label olabel = internal::ParseLabel(fields[3], syms, line_no);
      double cost = fields.size() == 5 ? ParseCost(fields[4], line_no) : 0.0;
      fst.AddArc(src, ilabel, olabel, W(cost), dst);
    } else {
      throw Error("FST text line " + std::to_string(line_no) + ": expected 1, 2, 4 or 5 fields");
    }
  }
  return fst;
}

template <class W>
Fst<W> ReadFstText(std::istream &is, const SymbolTable *syms = nullptr) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(is, line);) lines.push_back(std::move(line));
  return ParseFstLines<W>(lines, 1, syms);
}

template <class W>
Fst<W> ReadFstFile(const std::string &path, const SymbolTable *syms = nullptr) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open FST file " + path);
  return ReadFstText<W>(is, syms);
}

template <class W>
void WriteFstFile(const Fst<W> &fst, const std::string &path,
                  const SymbolTable *print_syms = nullptr) {
  std::ofstream os(path);
  if (!os) throw Error("cannot write FST file " + path);
  WriteFstText(fst, os, print_syms);
}

template <class W>
std::string FstToString(const Fst<W> &fst) {
  std::ostringstream os;
  WriteFstText(fst, os);
  return os.str();
}

}  // namespace latcomb

#endif  // LATCOMB_FST_IO_H_
