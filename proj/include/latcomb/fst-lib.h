// include/latcomb/fst-lib.h

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

#ifndef LATCOMB_FST_LIB_H_
#define LATCOMB_FST_LIB_H_

#include "latcomb/compose.h"
#include "latcomb/determinize.h"
#include "latcomb/fst-io.h"
#include "latcomb/fst-utils.h"
#include "latcomb/fst.h"
#include "latcomb/minimize.h"
#include "latcomb/paths.h"
#include "latcomb/prune.h"
#include "latcomb/rmepsilon.h"
#include "latcomb/shortest-distance.h"
#include "latcomb/symbol-table.h"
#include "latcomb/weight.h"

#endif  // LATCOMB_FST_LIB_H_
