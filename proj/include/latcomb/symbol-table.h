// include/latcomb/symbol-table.h

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

#ifndef LATCOMB_SYMBOL_TABLE_H_
#define LATCOMB_SYMBOL_TABLE_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace latcomb {

using Label = int32_t;
inline constexpr Label kEpsilon = 0;
inline constexpr const char *kEpsilonSymbol = "<eps>";

// Bijection between word strings and integer labels.  Id 0 is always
// "<eps>".  Ids need not be contiguous when read from a file.
class SymbolTable {
 public:
  SymbolTable();

  // Returns the id of `symbol`, adding it with the next free id if absent.
  Label AddSymbol(std::string_view symbol);
  // Adds `symbol` with an explicit id; throws if either is already bound
  // to something else.
  void AddSymbol(std::string_view symbol, Label id);

  std::optional<Label> Find(std::string_view symbol) const;
  // Throws if the id is unknown.
  const std::string &Symbol(Label id) const;
  bool HasLabel(Label id) const;

  // Number of bound symbols, including epsilon.
  size_t NumSymbols() const { return by_symbol_.size(); }
  Label AvailableKey() const { return next_id_; }
  // All bound ids in increasing order (epsilon included).
  std::vector<Label> Labels() const;

  friend bool operator==(const SymbolTable &a, const SymbolTable &b);

  // "symbol<TAB>id" lines.  Any whitespace separates the two fields on read.
  static SymbolTable Read(std::istream &is);
  static SymbolTable ReadFile(const std::string &path);
  void Write(std::ostream &os) const;
  void WriteFile(const std::string &path) const;

 private:
  std::vector<std::string> by_id_;  // "" marks an unbound id
  std::unordered_map<std::string, Label> by_symbol_;
  Label next_id_ = 0;
};

}  // namespace latcomb

#endif  // LATCOMB_SYMBOL_TABLE_H_
