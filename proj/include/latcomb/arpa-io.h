// include/latcomb/arpa-io.h

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

#ifndef LATCOMB_ARPA_IO_H_
#define LATCOMB_ARPA_IO_H_

#include <iosfwd>
#include <string>

#include "latcomb/ngram-model.h"

namespace latcomb {

// ARPA back-off format with log10 values.  A missing back-off weight means
// 1; an n-gram whose log10 probability is -99 or below carries only a
// back-off weight (as <s> does).  Values are written with the shortest
// representation that reads back to the same double.
void WriteArpa(const NGramModel &model, std::ostream &os);
void WriteArpaFile(const NGramModel &model, const std::string &path);

// Throws Error naming the line for malformed headers, entries or counts.
NGramModel ReadArpa(std::istream &is);
NGramModel ReadArpaFile(const std::string &path);

}  // namespace latcomb

#endif  // LATCOMB_ARPA_IO_H_
