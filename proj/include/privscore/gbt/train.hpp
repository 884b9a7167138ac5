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

#ifndef PRIVSCORE_GBT_TRAIN_HPP_
#define PRIVSCORE_GBT_TRAIN_HPP_

#include <cstdint>
#include <vector>

#include "privscore/gbt/model.hpp"

namespace privscore::gbt {

// Least-squares gradient boosting with greedy variance-reduction splits over
// at most 64 candidate thresholds per feature. Every tree comes out complete
// at the requested depth; nodes with nothing left to split get a threshold
// below their rows' range so all rows fall right and both children carry the
// parent value. Training MSE is non-increasing per round for any
// learning_rate in (0, 2).
GbtModel train_toy_gbt(const Dataset& data, int n_trees, int depth, double learning_rate);

// MSE after each boosting round, starting with the zero model; size
// n_trees + 1.
std::vector<double> training_curve(const Dataset& data, const GbtModel& model);

}  // namespace privscore::gbt

#endif  // PRIVSCORE_GBT_TRAIN_HPP_
