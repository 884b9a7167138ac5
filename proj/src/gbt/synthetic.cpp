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

#include "privscore/gbt/synthetic.hpp"

#include <random>

#include "privscore/errors.hpp"

namespace privscore::gbt {

namespace {
// Uniform in [0, 1) from the top 53 bits; avoids the implementation-defined
// behavior of std::uniform_real_distribution so seeds replay everywhere.
double unit_uniform(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}
double symmetric_uniform(std::mt19937_64& gen) { return 2.0 * unit_uniform(gen) - 1.0; }
}  // namespace

Dataset gen_synthetic(int n_rows, int n_features, uint64_t seed) {
  if (n_rows < 0 || n_features <= 0) {
    throw PreconditionError("gen_synthetic needs n_rows >= 0 and n_features > 0");
  }
  std::mt19937_64 gen(seed);

  std::vector<double> weights(n_features);
  for (double& w : weights) w = symmetric_uniform(gen);
  const int step_feature_a = static_cast<int>(gen() % n_features);
  const int step_feature_b = static_cast<int>(gen() % n_features);
  const double step_cut_a = 0.5 * symmetric_uniform(gen);
  const double step_cut_b = 0.5 * symmetric_uniform(gen);
  const double step_amp_a = 0.5 + unit_uniform(gen);
  const double step_amp_b = 0.5 + unit_uniform(gen);

  Dataset data;
  data.n_features = n_features;
  data.features.resize(n_rows);
  data.labels.resize(n_rows);
  for (int r = 0; r < n_rows; ++r) {
    auto& row = data.features[r];
    row.resize(n_features);
    for (double& x : row) x = symmetric_uniform(gen);
    double y = 0.0;
    for (int f = 0; f < n_features; ++f) y += weights[f] * row[f];
    if (row[step_feature_a] > step_cut_a) y += step_amp_a;
    if (row[step_feature_b] > step_cut_b) y -= step_amp_b;
    data.labels[r] = y;
  }
  return data;
}

}  // namespace privscore::gbt
