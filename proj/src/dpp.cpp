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

#include "pmeq/dpp.hpp"

#include <algorithm>
#include <string>

#include "pmeq/errors.hpp"

namespace pmeq {

Kernel::Kernel(Matrix matrix) : k(std::move(matrix)) {
  if (!k.is_square()) throw Error(ErrorCode::kNotSquare, "kernel");
}

Element subset_probability(const Kernel& kernel, const IndexSet& j) {
  for (Label l : j) {
    const auto& labels = kernel.k.labels();
    if (std::find(labels.begin(), labels.end(), l) == labels.end()) {
      throw Error(ErrorCode::kUnknownLabel, "label " + std::to_string(l));
    }
  }
  return determinant(principal_submatrix(kernel.k, j));
}

Verdict dpp_equivalent(const Kernel& k1, const Kernel& k2, const PmeOptions& options) {
  return pme_check(k1.k, k2.k, options);
}

}  // namespace pmeq
