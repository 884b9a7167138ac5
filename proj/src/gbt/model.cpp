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

#include "privscore/gbt/model.hpp"

#include <cmath>
#include <string>

#include "privscore/errors.hpp"

namespace privscore::gbt {

void validate_model(const GbtModel& model) {
  if (model.n_features <= 0) throw SchemaError("model must declare n_features > 0");
  if (model.depth < 1) throw SchemaError("model depth must be >= 1");
  if (model.depth > 30) throw SchemaError("model depth too large");
  const size_t n_internal = (size_t{1} << model.depth) - 1;
  const size_t n_leaves = size_t{1} << model.depth;
  for (size_t t = 0; t < model.trees.size(); ++t) {
    const Tree& tree = model.trees[t];
    if (tree.internal.size() != n_internal || tree.leaves.size() != n_leaves) {
      throw SchemaError("tree " + std::to_string(t) +
                        " is not a complete binary tree of depth " + std::to_string(model.depth));
    }
    for (const InternalNode& node : tree.internal) {
      if (node.feature < 0 || node.feature >= model.n_features) {
        throw SchemaError("tree " + std::to_string(t) + " references feature " +
                          std::to_string(node.feature) + " outside 0.." +
                          std::to_string(model.n_features - 1));
      }
      if (!std::isfinite(node.threshold)) {
        throw SchemaError("tree " + std::to_string(t) + " has a non-finite threshold");
      }
    }
    for (double v : tree.leaves) {
      if (!std::isfinite(v)) throw SchemaError("tree " + std::to_string(t) + " has a non-finite leaf");
    }
  }
}

double predict(const GbtModel& model, std::span<const double> features) {
  if (static_cast<int>(features.size()) != model.n_features) {
    throw DimensionError("predict: got " + std::to_string(features.size()) +
                         " features, model expects " + std::to_string(model.n_features));
  }
  const size_t n_internal = (size_t{1} << model.depth) - 1;
  double sum = 0.0;
  for (const Tree& tree : model.trees) {
    size_t i = 0;
    while (i < n_internal) {
      const InternalNode& node = tree.internal[i];
      i = features[node.feature] < node.threshold ? 2 * i + 1 : 2 * i + 2;
    }
    sum += tree.leaves[i - n_internal];
  }
  return sum;
}

std::vector<double> predict_batch(const GbtModel& model,
                                  const std::vector<std::vector<double>>& rows) {
  std::vector<double> out(rows.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(rows.size()); ++i) {
    out[i] = predict(model, rows[i]);
  }
  return out;
}

double test_score(const TestCase& test, const GbtModel& model) {
  if (test.tolerance <= 0) throw PreconditionError("test tolerance must be positive");
  return std::fabs(predict(model, test.features) - test.label) <= test.tolerance ? 1.0 : 0.0;
}

double mean_squared_error(const GbtModel& model, const Dataset& data) {
  if (data.size() == 0) return 0.0;
  double sum = 0.0;
  for (size_t i = 0; i < data.size(); ++i) {
    const double d = predict(model, data.features[i]) - data.labels[i];
    sum += d * d;
  }
  return sum / static_cast<double>(data.size());
}

}  // namespace privscore::gbt
