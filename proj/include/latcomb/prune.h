// include/latcomb/prune.h

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

#ifndef LATCOMB_PRUNE_H_
#define LATCOMB_PRUNE_H_

#include "latcomb/fst.h"

namespace latcomb {

// Absolute slack used when comparing a path cost against the pruning bound,
// so that costs summed in a different order still tie.
inline constexpr double kPruneDelta = 1e-9;

// Keeps exactly the accepting paths whose cost is at most
// threshold ⊗ (best path cost), ties included.  `threshold` is a cost
// offset and must be >= One() (0); Zero() keeps everything.
//
// Pruning is path-exact: states are split by the cost accumulated on the way
// in, so two surviving partial paths can never be spliced into a path that
// exceeds the bound.  With threshold One() every surviving prefix has the
// optimal cost and no splitting occurs.
StdFst PruneToThreshold(const StdFst &fst, TropicalWeight threshold);

}  // namespace latcomb

#endif  // LATCOMB_PRUNE_H_
