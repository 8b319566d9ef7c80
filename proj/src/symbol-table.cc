// src/symbol-table.cc

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

#include "latcomb/symbol-table.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "latcomb/error.h"

namespace latcomb {

SymbolTable::SymbolTable() { AddSymbol(kEpsilonSymbol, kEpsilon); }

Label SymbolTable::AddSymbol(std::string_view symbol) {
  if (auto id = Find(symbol)) return *id;
  Label id = next_id_;
  AddSymbol(symbol, id);
  return id;
}

void SymbolTable::AddSymbol(std::string_view symbol, Label id) {
  if (id < 0) throw Error("negative symbol id for '" + std::string(symbol) + "'");
  if (symbol.empty()) throw Error("empty symbol for id " + std::to_string(id));
  auto found = Find(symbol);
  if (found && *found == id) return;
  if (found) {
    throw Error("symbol '" + std::string(symbol) + "' already has id " +
                std::to_string(*found));
  }
  if (HasLabel(id)) {
    throw Error("id " + std::to_string(id) + " already bound to '" +
                by_id_[id] + "'");
  }
  if (static_cast<size_t>(id) >= by_id_.size()) by_id_.resize(id + 1);
  by_id_[id] = std::string(symbol);
  by_symbol_.emplace(std::string(symbol), id);
  next_id_ = std::max(next_id_, id + 1);
}

std::optional<Label> SymbolTable::Find(std::string_view symbol) const {
  auto it = by_symbol_.find(std::string(symbol));
  if (it == by_symbol_.end()) return std::nullopt;
  return it->second;
}

bool SymbolTable::HasLabel(Label id) const {
  return id >= 0 && static_cast<size_t>(id) < by_id_.size() &&
         !by_id_[id].empty();
}

const std::string &SymbolTable::Symbol(Label id) const {
  if (!HasLabel(id)) throw Error("unknown symbol id " + std::to_string(id));
  return by_id_[id];
}

std::vector<Label> SymbolTable::Labels() const {
  std::vector<Label> labels;
  labels.reserve(by_symbol_.size());
  for (size_t i = 0; i < by_id_.size(); ++i)
    if (!by_id_[i].empty()) labels.push_back(static_cast<Label>(i));
  return labels;
}

bool operator==(const SymbolTable &a, const SymbolTable &b) {
  return a.by_id_ == b.by_id_;
}

SymbolTable SymbolTable::Read(std::istream &is) {
  SymbolTable table;
  std::string line;
  size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string symbol, id_str, extra;
    if (!(fields >> symbol)) continue;
    if (!(fields >> id_str) || (fields >> extra)) {
      throw Error("symbol table line " + std::to_string(line_no) +
                  ": expected 'symbol id'");
    }
    Label id = 0;
    auto [ptr, ec] = std::from_chars(id_str.data(), id_str.data() + id_str.size(), id);
    if (ec != std::errc() || ptr != id_str.data() + id_str.size()) {
      throw Error("symbol table line " + std::to_string(line_no) +
                  ": bad id '" + id_str + "'");
    }
    if (id == kEpsilon && symbol != kEpsilonSymbol) {
      throw Error("symbol table line " + std::to_string(line_no) +
                  ": id 0 is reserved for <eps>");
    }
    try {
      table.AddSymbol(symbol, id);
    } catch (const Error &e) {
      throw Error("symbol table line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return table;
}

SymbolTable SymbolTable::ReadFile(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open symbol table " + path);
  return Read(is);
}

void SymbolTable::Write(std::ostream &os) const {
  for (size_t i = 0; i < by_id_.size(); ++i)
    if (!by_id_[i].empty()) os << by_id_[i] << '\t' << i << '\n';
}

void SymbolTable::WriteFile(const std::string &path) const {
  std::ofstream os(path);
  if (!os) throw Error("cannot write symbol table " + path);
  Write(os);
}

}  // namespace latcomb
