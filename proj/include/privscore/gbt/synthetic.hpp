// Copyright 2026 The PrivScore Authors
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

#ifndef PRIVSCORE_GBT_SYNTHETIC_HPP_
#define PRIVSCORE_GBT_SYNTHETIC_HPP_

#include <cstdint>

#include "privscore/gbt/model.hpp"

namespace privscore::gbt {

// Deterministic synthetic regression data: features uniform in [-1, 1],
// labels from a hidden random linear function plus two step terms drawn from
// the seed. Same seed, same dataset, byte for byte.
Dataset gen_synthetic(int n_rows, int n_features, uint64_t seed);

}  // namespace privscore::gbt

#endif  // PRIVSCORE_GBT_SYNTHETIC_HPP_
