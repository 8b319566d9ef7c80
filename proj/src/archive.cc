// src/archive.cc

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

#include "latcomb/archive.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "latcomb/fst-io.h"

namespace latcomb {

namespace {

void CheckUnique(std::unordered_set<std::string> &seen, const std::string &id,
                 size_t line_no, const char *what) {
  if (!seen.insert(id).second)
    throw Error(std::string(what) + " line " + std::to_string(line_no) +
                ": duplicate utterance id '" + id + "'");
}

}  // namespace

std::vector<Transcript> ReadTranscripts(std::istream &is) {
  std::vector<Transcript> out;
  std::unordered_set<std::string> seen;
  std::string line;
  size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    std::istringstream fields(line);
    Transcript t;
    if (!(fields >> t.id)) continue;
    for (std::string w; fields >> w;) t.words.push_back(std::move(w));
    CheckUnique(seen, t.id, line_no, "transcript");
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Transcript> ReadTranscriptFile(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open transcript file " + path);
  return ReadTranscripts(is);
}

void WriteTranscripts(const std::vector<Transcript> &transcripts, std::ostream &os) {
  for (const auto &t : transcripts) {
    os << t.id;
    for (const auto &w : t.words) os << ' ' << w;
    os << '\n';
  }
}

void WriteTranscriptFile(const std::vector<Transcript> &transcripts, const std::string &path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot write transcript file " + path);
  WriteTranscripts(transcripts, os);
}

std::vector<ArchiveEntry> ReadArchive(std::istream &is, const SymbolTable *syms) {
  std::vector<ArchiveEntry> out;
  std::unordered_set<std::string> seen;
  std::string line;
  size_t line_no = 0;
  std::vector<std::string> body;
  size_t body_start = 0;
  bool in_entry = false;
  auto flush = [&]() {
    if (!in_entry) return;
    out.back().fst = ParseFstLines<TropicalWeight>(body, body_start, syms);
    body.clear();
    in_entry = false;
  };
  while (std::getline(is, line)) {
    ++line_no;
    if (line.rfind("=== ", 0) == 0) {
      flush();
      std::string id = line.substr(4);
      while (!id.empty() && (id.back() == ' ' || id.back() == '\r')) id.pop_back();
      if (id.empty() || id.find_first_of(" \t") != std::string::npos)
        throw Error("archive line " + std::to_string(line_no) + ": bad utterance id");
      CheckUnique(seen, id, line_no, "archive");
      out.push_back({id, StdFst()});
      in_entry = true;
      body_start = line_no + 1;
    } else if (line.find_first_not_of(" \t\r") == std::string::npos) {
      flush();
    } else {
      if (!in_entry)
        throw Error("archive line " + std::to_string(line_no) + ": FST line outside an entry");
      body.push_back(line);
    }
  }
  flush();
  return out;
}

std::vector<ArchiveEntry> ReadArchiveFile(const std::string &path, const SymbolTable *syms) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open archive " + path);
  return ReadArchive(is, syms);
}

void WriteArchiveEntry(const ArchiveEntry &entry, std::ostream &os) {
  os << "=== " << entry.id << '\n';
  WriteFstText(entry.fst, os, entry.fst.Symbols().get());
  os << '\n';
}

void WriteArchive(const std::vector<ArchiveEntry> &entries, std::ostream &os) {
  for (const auto &e : entries) WriteArchiveEntry(e, os);
}

void WriteArchiveFile(const std::vector<ArchiveEntry> &entries, const std::string &path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot write archive " + path);
  WriteArchive(entries, os);
}

}  // namespace latcomb
