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

#include "privscore/circuit/compile_gbt.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "privscore/circuit/gadgets.hpp"
#include "privscore/errors.hpp"

namespace privscore::circuit {

namespace {

// Σ_trees max_leaf |encoded leaf| bounds every partial ensemble sum; if it
// fits, no intermediate adder result can wrap.
void check_overflow_bound(const gbt::GbtModel& model, const FixedPointEncoding& enc) {
  long double bound = 0.0L;
  for (const gbt::Tree& tree : model.trees) {
    long double tree_max = 0.0L;
    for (double v : tree.leaves) {
      const int64_t e = to_signed(encode(v, enc), enc.width);
      tree_max = std::max<long double>(tree_max, std::llabs(e));
    }
    bound += tree_max;
  }
  const long double limit = std::ldexp(1.0L, enc.width - 1) - 1.0L;
  if (bound > limit) {
    throw RangeError("worst-case ensemble sum " + std::to_string(static_cast<double>(bound)) +
                     " (raw units) can wrap the " + std::to_string(enc.width) +
                     "-bit encoding; widen the encoding or rescale the model");
  }
}

// Walks the complete tree accumulating the path indicator; emits the masked
// leaf words into `masked`.
void emit_leaves(CircuitBuilder& cb, const std::vector<Wire>& node_lt, size_t node_index,
                 size_t n_internal, Wire indicator, bool at_root,
                 const std::vector<std::vector<Wire>>& leaf_words,
                 std::vector<std::vector<Wire>>& masked) {
  if (node_index >= n_internal) {
    const size_t leaf = node_index - n_internal;
    const auto& word = leaf_words[leaf];
    std::vector<Wire> out(word.size());
    for (size_t j = 0; j < word.size(); ++j) out[j] = cb.band(indicator, word[j]);
    masked[leaf] = std::move(out);
    return;
  }
  const Wire lt = node_lt[node_index];
  const Wire go_right = cb.bnot(lt);
  const Wire left_ind = at_root ? lt : cb.band(indicator, lt);
  const Wire right_ind = at_root ? go_right : cb.band(indicator, go_right);
  emit_leaves(cb, node_lt, 2 * node_index + 1, n_internal, left_ind, false, leaf_words, masked);
  emit_leaves(cb, node_lt, 2 * node_index + 2, n_internal, right_ind, false, leaf_words, masked);
}

std::vector<Wire> xor_fold_words(CircuitBuilder& cb, const std::vector<std::vector<Wire>>& words) {
  std::vector<Wire> acc = words[0];
  for (size_t i = 1; i < words.size(); ++i) {
    for (size_t j = 0; j < acc.size(); ++j) acc[j] = cb.bxor(acc[j], words[i][j]);
  }
  return acc;
}

// Balanced adder fold keeps the AND-depth (and so the round count) at
// O(log T) adders instead of O(T).
std::vector<Wire> add_fold(CircuitBuilder& cb, std::vector<std::vector<Wire>> words) {
  while (words.size() > 1) {
    std::vector<std::vector<Wire>> next;
    next.reserve((words.size() + 1) / 2);
    for (size_t i = 0; i + 1 < words.size(); i += 2) {
      next.push_back(build_adder(cb, words[i], words[i + 1]));
    }
    if (words.size() % 2 == 1) next.push_back(std::move(words.back()));
    words = std::move(next);
  }
  return words[0];
}

}  // namespace

Circuit compile_gbt(const gbt::GbtModel& model, const FixedPointEncoding& enc) {
  enc.validate();
  gbt::validate_model(model);
  check_overflow_bound(model, enc);

  const int w = enc.width;
  const int d = model.n_features;
  const size_t n_internal = (size_t{1} << model.depth) - 1;
  const size_t n_leaves = size_t{1} << model.depth;

  CircuitBuilder cb;

  std::vector<std::vector<Wire>> feature_words(d);
  for (int f = 0; f < d; ++f) feature_words[f] = cb.input_word(Owner::TestOwner, w);

  std::vector<std::vector<Wire>> tree_scores;
  tree_scores.reserve(model.trees.size());
  for (const gbt::Tree& tree : model.trees) {
    (void)tree;
    std::vector<Wire> node_lt(n_internal);
    for (size_t node = 0; node < n_internal; ++node) {
      std::vector<Wire> selector = cb.input_word(Owner::ModelOwner, d);
      std::vector<Wire> threshold = cb.input_word(Owner::ModelOwner, w);
      std::vector<Wire> selected = build_onehot_select(cb, selector, feature_words);
      node_lt[node] = build_comparator_lt(cb, selected, threshold);
    }
    std::vector<std::vector<Wire>> leaf_words(n_leaves);
    for (size_t leaf = 0; leaf < n_leaves; ++leaf) {
      leaf_words[leaf] = cb.input_word(Owner::ModelOwner, w);
    }
    std::vector<std::vector<Wire>> masked(n_leaves);
    emit_leaves(cb, node_lt, 0, n_internal, Wire{}, true, leaf_words, masked);
    tree_scores.push_back(xor_fold_words(cb, masked));
  }

  std::vector<Wire> score;
  if (tree_scores.empty()) {
    score = cb.constant_word(0, w);
  } else {
    score = add_fold(cb, std::move(tree_scores));
  }
  return cb.finish(std::move(score));
}

std::vector<uint8_t> model_input_bits(const gbt::GbtModel& model, const FixedPointEncoding& enc) {
  gbt::validate_model(model);
  const int d = model.n_features;
  std::vector<uint8_t> bits;
  for (const gbt::Tree& tree : model.trees) {
    for (const gbt::InternalNode& node : tree.internal) {
      for (int f = 0; f < d; ++f) bits.push_back(f == node.feature ? 1 : 0);
      append_word_bits(bits, encode(node.threshold, enc), enc.width);
    }
    for (double v : tree.leaves) append_word_bits(bits, encode(v, enc), enc.width);
  }
  return bits;
}

std::vector<uint8_t> feature_input_bits(std::span<const double> features,
                                        const FixedPointEncoding& enc) {
  std::vector<uint8_t> bits;
  bits.reserve(features.size() * enc.width);
  for (double x : features) append_word_bits(bits, encode(x, enc), enc.width);
  return bits;
}

double eval_compiled_plain(const Circuit& c, const gbt::GbtModel& model,
                           std::span<const double> features, const FixedPointEncoding& enc) {
  Assignment in;
  in.of(Owner::ModelOwner) = model_input_bits(model, enc);
  in.of(Owner::TestOwner) = feature_input_bits(features, enc);
  const std::vector<uint8_t> out = eval_plain(c, in);
  return decode(word_from_bits(out), enc);
}

gbt::GbtModel quantized_model(const gbt::GbtModel& model, const FixedPointEncoding& enc) {
  gbt::GbtModel q = model;
  for (gbt::Tree& tree : q.trees) {
    for (gbt::InternalNode& node : tree.internal) {
      node.threshold = decode(encode(node.threshold, enc), enc);
    }
    for (double& v : tree.leaves) v = decode(encode(v, enc), enc);
  }
  return q;
}

std::vector<double> quantized_features(std::span<const double> features,
                                       const FixedPointEncoding& enc) {
  std::vector<double> q(features.size());
  for (size_t i = 0; i < features.size(); ++i) q[i] = decode(encode(features[i], enc), enc);
  return q;
}

}  // namespace privscore::circuit
