// Copyright 2026 The Multiplicity Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MULTIPLICITY_COMBINATORICS_HPP_
#define MULTIPLICITY_COMBINATORICS_HPP_

#include "multiplicity/geometry.hpp"

namespace multiplicity {

// C(n, k); zero outside 0 <= k <= n.
BigInt binomial(int n, int k);
// C(2n, n) / (n + 1).
BigInt catalan(int n);

}  // namespace multiplicity

#endif  // MULTIPLICITY_COMBINATORICS_HPP_
