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

#ifndef PRIVSCORE_GBT_IO_HPP_
#define PRIVSCORE_GBT_IO_HPP_

#include <string>

#include "privscore/gbt/model.hpp"

namespace privscore::gbt {

// Model file schema:
//   {"n_features": int, "depth": int, "trees": [node, ...]}
// where node is {"feature": int, "threshold": number, "left": node,
// "right": node} or {"value": number}. Unknown keys are rejected; every tree
// must be complete at the declared depth.
std::string model_to_json(const GbtModel& model);
GbtModel model_from_json(const std::string& text);
void save_model(const GbtModel& model, const std::string& path);
GbtModel load_model(const std::string& path);

// Dataset file: CSV with a header row; the last column is the label, all
// other columns are numeric features.
void save_dataset(const Dataset& data, const std::string& path);
Dataset load_dataset(const std::string& path);

}  // namespace privscore::gbt

#endif  // PRIVSCORE_GBT_IO_HPP_
