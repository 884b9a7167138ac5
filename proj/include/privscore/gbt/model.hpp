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

#ifndef PRIVSCORE_GBT_MODEL_HPP_
#define PRIVSCORE_GBT_MODEL_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace privscore::gbt {

struct InternalNode {
  int feature = 0;
  double threshold = 0.0;
};

// A complete binary tree of uniform depth in heap layout: internal node i has
// children 2i+1 and 2i+2; positions 2^D-1 .. 2^(D+1)-2 are the leaves, left
// to right. internal.size() == 2^D - 1 and leaves.size() == 2^D.
struct Tree {
  std::vector<InternalNode> internal;
  std::vector<double> leaves;
};

struct GbtModel {
  int n_features = 0;
  int depth = 0;
  std::vector<Tree> trees;
  std::map<std::string, std::string> metadata;  // in-memory only, never serialized
};

struct TestCase {
  std::vector<double> features;
  double label = 0.0;
  double tolerance = 0.25;
};

struct Dataset {
  int n_features = 0;
  std::vector<std::vector<double>> features;  // row major
  std::vector<double> labels;

  size_t size() const { return labels.size(); }
};

// Throws SchemaError if shapes, feature indices, or values are invalid.
void validate_model(const GbtModel& model);

// Sum over trees of the leaf reached by descending; at each internal node go
// left iff features[node.feature] < node.threshold (strict, ties go right).
double predict(const GbtModel& model, std::span<const double> features);

// Row-parallel predict; row i equals predict(model, rows[i]) exactly.
std::vector<double> predict_batch(const GbtModel& model,
                                  const std::vector<std::vector<double>>& rows);

// 1.0 if |predict(model, test.features) - test.label| <= tolerance, else 0.0.
// The boundary is inclusive.
double test_score(const TestCase& test, const GbtModel& model);

double mean_squared_error(const GbtModel& model, const Dataset& data);

}  // namespace privscore::gbt

#endif  // PRIVSCORE_GBT_MODEL_HPP_
