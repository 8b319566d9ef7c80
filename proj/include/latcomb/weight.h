// include/latcomb/weight.h

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

#ifndef LATCOMB_WEIGHT_H_
#define LATCOMB_WEIGHT_H_

#include <algorithm>
#include <cmath>
#include <limits>
#include <string_view>

namespace latcomb {

// Weights are costs (negative log domain).  Both semirings share the same
// identities: Zero() is +infinity and One() is 0; Times is addition.

class TropicalWeight {
 public:
  constexpr TropicalWeight() : value_(0.0) {}
  constexpr explicit TropicalWeight(double value) : value_(value) {}

  static constexpr TropicalWeight Zero() {
    return TropicalWeight(std::numeric_limits<double>::infinity());
  }
  static constexpr TropicalWeight One() { return TropicalWeight(0.0); }
  static constexpr std::string_view Type() { return "tropical"; }

  constexpr double Value() const { return value_; }
  bool IsZero() const { return value_ == std::numeric_limits<double>::infinity(); }
  bool Member() const { return !std::isnan(value_) && value_ != -std::numeric_limits<double>::infinity(); }

  friend constexpr bool operator==(TropicalWeight a, TropicalWeight b) {
    return a.value_ == b.value_;
  }

 private:
  double value_;
};

inline TropicalWeight Plus(TropicalWeight a, TropicalWeight b) {
  return a.Value() <= b.Value() ? a : b;
}

inline TropicalWeight Times(TropicalWeight a, TropicalWeight b) {
  if (a.IsZero() || b.IsZero()) return TropicalWeight::Zero();
  return TropicalWeight(a.Value() + b.Value());
}

// Left division: returns c such that Times(b, c) == a.  b must not be Zero().
inline TropicalWeight Divide(TropicalWeight a, TropicalWeight b) {
  if (a.IsZero()) return TropicalWeight::Zero();
  return TropicalWeight(a.Value() - b.Value());
}


class LogWeight {
 public:
  constexpr LogWeight() : value_(0.0) {}
  constexpr explicit LogWeight(double value) : value_(value) {}

  static constexpr LogWeight Zero() {
    return LogWeight(std::numeric_limits<double>::infinity());
  }
  static constexpr LogWeight One() { return LogWeight(0.0); }
  static constexpr std::string_view Type() { return "log"; }

  constexpr double Value() const { return value_; }
  bool IsZero() const { return value_ == std::numeric_limits<double>::infinity(); }
  bool Member() const { return !std::isnan(value_) && value_ != -std::numeric_limits<double>::infinity(); }

  friend constexpr bool operator==(LogWeight a, LogWeight b) {
    return a.value_ == b.value_;
  }

 private:
  double value_;
};

// -log(exp(-a) + exp(-b)), evaluated around the smaller cost.
inline LogWeight Plus(LogWeight a, LogWeight b) {
  if (a.IsZero()) return b;
  if (b.IsZero()) return a;
  double lo = std::min(a.Value(), b.Value());
  double hi = std::max(a.Value(), b.Value());
  return LogWeight(lo - std::log1p(std::exp(lo - hi)));
}

inline LogWeight Times(LogWeight a, LogWeight b) {
  if (a.IsZero() || b.IsZero()) return LogWeight::Zero();
  return LogWeight(a.Value() + b.Value());
}

inline LogWeight Divide(LogWeight a, LogWeight b) {
  if (a.IsZero()) return LogWeight::Zero();
  return LogWeight(a.Value() - b.Value());
}

template <class W>
bool ApproxEqual(W a, W b, double delta) {
  if (a.IsZero() || b.IsZero()) return a.IsZero() && b.IsZero();
  return std::fabs(a.Value() - b.Value()) <= delta;
}

}  // namespace latcomb

#endif  // LATCOMB_WEIGHT_H_
