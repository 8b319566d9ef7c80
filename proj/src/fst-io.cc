// src/fst-io.cc

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

#include "latcomb/fst-io.h"

#include <cmath>
#include <limits>

namespace latcomb {

std::string FormatCost(double cost) {
  if (std::isinf(cost)) return cost > 0 ? "Infinity" : "-Infinity";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), cost);
  return std::string(buf, ptr);
}

double ParseCost(std::string_view token, size_t line_no) {
  if (token == "Infinity" || token == "inf") return std::numeric_limits<double>::infinity();
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || std::isnan(value))
    throw Error("line " + std::to_string(line_no) + ": bad cost '" + std::string(token) + "'");
  return value;
}

namespace internal {

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

Label ParseLabel(std::string_view token, const SymbolTable *syms, size_t line_no) {
  if (syms) {
    if (auto found = syms->Find(token)) return *found;
  }
  Label label = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), label);
  if (ec == std::errc() && ptr == token.data() + token.size() && label >= 0) return label;
  if (syms) {
    throw Error("line " + std::to_string(line_no) + ": unknown symbol '" +
                std::string(token) + "'");
  }
  throw Error("line " + std::to_string(line_no) + ": bad label '" + std::string(token) + "'");
}

StateId ParseStateId(std::string_view token, size_t line_no) {
  StateId s = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), s);
  if (ec != std::errc() || ptr != token.data() + token.size() || s < 0)
    throw Error("line " + std::to_string(line_no) + ": bad state id '" +
                std::string(token) + "'");
  return s;
}

}  // namespace internal

}  // namespace latcomb
