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

#include "privscore/gbt/train.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "privscore/errors.hpp"

namespace privscore::gbt {

namespace {

constexpr int kMaxCandidates = 64;

struct Split {
  int feature = 0;
  double threshold = 0.0;
  double sse = std::numeric_limits<double>::infinity();
  bool valid = false;
};

double subset_mean(const std::vector<double>& residual, const std::vector<int>& rows) {
  if (rows.empty()) return 0.0;
  double s = 0.0;
  for (int r : rows) s += residual[r];
  return s / static_cast<double>(rows.size());
}

// Sum of squared deviations from the mean after splitting on (feature, thr).
double split_sse(const Dataset& data, const std::vector<double>& residual,
                 const std::vector<int>& rows, int feature, double thr) {
  double sum_l = 0, sum_r = 0, sq_l = 0, sq_r = 0;
  int n_l = 0, n_r = 0;
  for (int r : rows) {
    const double y = residual[r];
    if (data.features[r][feature] < thr) {
      sum_l += y;
      sq_l += y * y;
      ++n_l;
    } else {
      sum_r += y;
      sq_r += y * y;
      ++n_r;
    }
  }
  double sse = 0.0;
  if (n_l > 0) sse += sq_l - sum_l * sum_l / n_l;
  if (n_r > 0) sse += sq_r - sum_r * sum_r / n_r;
  return sse;
}

Split best_split_for_feature(const Dataset& data, const std::vector<double>& residual,
                             const std::vector<int>& rows, int feature) {
  std::vector<double> values;
  values.reserve(rows.size());
  for (int r : rows) values.push_back(data.features[r][feature]);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  Split best;
  best.feature = feature;
  if (values.size() < 2) return best;

  // Candidate thresholds are midpoints of an even subsample of the distinct
  // values, capped at kMaxCandidates.
  const size_t n_gaps = values.size() - 1;
  const size_t n_cand = std::min<size_t>(n_gaps, kMaxCandidates);
  for (size_t c = 0; c < n_cand; ++c) {
    const size_t gap = n_gaps <= kMaxCandidates ? c : c * n_gaps / n_cand;
    const double thr = 0.5 * (values[gap] + values[gap + 1]);
    const double sse = split_sse(data, residual, rows, feature, thr);
    if (sse < best.sse) {
      best.sse = sse;
      best.threshold = thr;
      best.valid = true;
    }
  }
  return best;
}

// A threshold at or below the subset's minimum for feature 0 sends every row
// right; used to pad nodes that have nothing left to split while keeping the
// tree complete and the threshold finite and in-range.
double degenerate_threshold(const Dataset& data, const std::vector<int>& rows) {
  double lo = 0.0;
  bool seen = false;
  for (int r : rows) {
    const double v = data.features[r][0];
    if (!seen || v < lo) {
      lo = v;
      seen = true;
    }
  }
  return lo;
}

void grow_node(const Dataset& data, const std::vector<double>& residual, Tree& tree,
               size_t node_index, int levels_left, const std::vector<int>& rows,
               double fallback_value, double learning_rate) {
  const size_t n_internal = tree.internal.size();
  const double node_mean = rows.empty() ? fallback_value : subset_mean(residual, rows);

  if (levels_left == 0) {
    tree.leaves[node_index - n_internal] = learning_rate * node_mean;
    return;
  }

  std::vector<Split> per_feature(data.n_features);
#pragma omp parallel for schedule(dynamic)
  for (int f = 0; f < data.n_features; ++f) {
    per_feature[f] = best_split_for_feature(data, residual, rows, f);
  }
  Split best;
  for (const Split& s : per_feature) {
    if (s.valid && s.sse < best.sse) best = s;
  }

  std::vector<int> left, right;
  if (best.valid) {
    tree.internal[node_index] = InternalNode{best.feature, best.threshold};
    for (int r : rows) {
      (data.features[r][best.feature] < best.threshold ? left : right).push_back(r);
    }
  } else {
    tree.internal[node_index] = InternalNode{0, degenerate_threshold(data, rows)};
    right = rows;
  }
  grow_node(data, residual, tree, 2 * node_index + 1, levels_left - 1, left, node_mean,
            learning_rate);
  grow_node(data, residual, tree, 2 * node_index + 2, levels_left - 1, right, node_mean,
            learning_rate);
}

}  // namespace

GbtModel train_toy_gbt(const Dataset& data, int n_trees, int depth, double learning_rate) {
  if (data.size() == 0) throw PreconditionError("cannot train on an empty dataset");
  if (depth < 1) throw PreconditionError("depth must be >= 1");
  if (n_trees < 0) throw PreconditionError("n_trees must be >= 0");
  if (!(learning_rate > 0.0 && learning_rate < 2.0)) {
    throw PreconditionError("learning_rate must lie in (0, 2)");
  }

  GbtModel model;
  model.n_features = data.n_features;
  model.depth = depth;
  model.trees.reserve(n_trees);

  std::vector<double> residual = data.labels;
  std::vector<int> all_rows(data.size());
  std::iota(all_rows.begin(), all_rows.end(), 0);

  for (int t = 0; t < n_trees; ++t) {
    Tree tree;
    tree.internal.assign((size_t{1} << depth) - 1, InternalNode{});
    tree.leaves.assign(size_t{1} << depth, 0.0);
    grow_node(data, residual, tree, 0, depth, all_rows, 0.0, learning_rate);
    model.trees.push_back(std::move(tree));

    GbtModel one_tree;
    one_tree.n_features = data.n_features;
    one_tree.depth = depth;
    one_tree.trees.push_back(model.trees.back());
    for (size_t i = 0; i < data.size(); ++i) {
      residual[i] -= predict(one_tree, data.features[i]);
    }
  }
  model.metadata["trainer"] = "toy-least-squares";
  model.metadata["learning_rate"] = std::to_string(learning_rate);
  return model;
}

std::vector<double> training_curve(const Dataset& data, const GbtModel& model) {
  std::vector<double> curve;
  curve.reserve(model.trees.size() + 1);
  GbtModel prefix;
  prefix.n_features = model.n_features;
  prefix.depth = model.depth;
  curve.push_back(mean_squared_error(prefix, data));
  for (const Tree& tree : model.trees) {
    prefix.trees.push_back(tree);
    curve.push_back(mean_squared_error(prefix, data));
  }
  return curve;
}

}  // namespace privscore::gbt
