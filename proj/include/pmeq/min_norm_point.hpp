// Copyright 2026 The pmeq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Minimum-norm-point (Fujishige-Wolfe) submodular function minimization over
// exact rationals.

#ifndef PMEQ_MIN_NORM_POINT_HPP_
#define PMEQ_MIN_NORM_POINT_HPP_

#include <gmpxx.h>

#include <functional>
#include <vector>

namespace pmeq {

// Set function on subsets of {0..m-1}, given as membership flags.
using SetFunction = std::function<mpq_class(const std::vector<bool>&)>;

struct SfmResult {
  std::vector<bool> minimizer;  // the unique inclusion-minimal minimizer
  mpq_class value;              // f(minimizer)
  int major_iterations = 0;
};

// Minimizes a submodular f over subsets of an m-element ground set.
// Submodularity is assumed, not checked.
SfmResult minimize_submodular(int m, const SetFunction& f);

}  // namespace pmeq

#endif  // PMEQ_MIN_NORM_POINT_HPP_
