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

// Determinantal point processes with possibly nonsymmetric kernels.
// Kernels are exact: callers holding floating-point kernels rationalize them
// first.

#ifndef PMEQ_DPP_HPP_
#define PMEQ_DPP_HPP_

#include "pmeq/linalg.hpp"
#include "pmeq/pme.hpp"

namespace pmeq {

struct Kernel {
  Matrix k;

  // NotSquare for non-square matrices.
  explicit Kernel(Matrix matrix);
};

// Pr[J is contained in the sample] = det(K[J]); 1 for the empty set.
// UnknownLabel when J leaves the kernel's labels.
Element subset_probability(const Kernel& kernel, const IndexSet& j);

// Two kernels define the same process iff all principal minors agree.
Verdict dpp_equivalent(const Kernel& k1, const Kernel& k2,
                       const PmeOptions& options = {});

}  // namespace pmeq

#endif  // PMEQ_DPP_HPP_
