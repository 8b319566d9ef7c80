// include/latcomb/archive.h

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

#ifndef LATCOMB_ARCHIVE_H_
#define LATCOMB_ARCHIVE_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "latcomb/fst.h"

namespace latcomb {

// One line of a transcript file: "utt-id w1 w2 ...".
struct Transcript {
  std::string id;
  std::vector<std::string> words;
  friend bool operator==(const Transcript &, const Transcript &) = default;
};

// Ids must be unique; order is preserved.
std::vector<Transcript> ReadTranscripts(std::istream &is);
std::vector<Transcript> ReadTranscriptFile(const std::string &path);
void WriteTranscripts(const std::vector<Transcript> &transcripts, std::ostream &os);
void WriteTranscriptFile(const std::vector<Transcript> &transcripts, const std::string &path);

struct ArchiveEntry {
  std::string id;
  StdFst fst;
};

// Lattice archive: for each utterance a header line "=== <utt-id>", the FST
// in text format, then a blank line.  All entries share one symbol table,
// which is kept in a separate file; labels are written as symbols when the
// FST carries a table.
std::vector<ArchiveEntry> ReadArchive(std::istream &is, const SymbolTable *syms = nullptr);
std::vector<ArchiveEntry> ReadArchiveFile(const std::string &path,
                                          const SymbolTable *syms = nullptr);
void WriteArchiveEntry(const ArchiveEntry &entry, std::ostream &os);
void WriteArchive(const std::vector<ArchiveEntry> &entries, std::ostream &os);
void WriteArchiveFile(const std::vector<ArchiveEntry> &entries, const std::string &path);

}  // namespace latcomb

#endif  // LATCOMB_ARCHIVE_H_
