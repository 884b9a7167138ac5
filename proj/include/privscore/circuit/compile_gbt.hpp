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

#ifndef PRIVSCORE_CIRCUIT_COMPILE_GBT_HPP_
#define PRIVSCORE_CIRCUIT_COMPILE_GBT_HPP_

#include <vector>

#include "privscore/circuit/circuit.hpp"
#include "privscore/circuit/eval.hpp"
#include "privscore/circuit/fixed_point.hpp"
#include "privscore/gbt/model.hpp"

namespace privscore::circuit {

// Lowers an ensemble to an oblivious evaluation circuit.
//
// Public topology: tree count, depth, feature count, word width. Private
// inputs: the features (test owner) and, per tree in order, for each internal
// node in heap order a one-hot feature selector plus an encoded threshold,
// then the encoded leaf values left to right (model owner).
//
// Each internal node selects its feature obliviously and compares
// selected < threshold; a leaf's indicator is the AND of its path literals
// (left = comparison true); leaf words are AND-masked by their indicator and
// XOR-folded, which is exact because the indicators are one-hot; tree scores
// are summed with a balanced tree of ripple-carry adders.
//
// The output is the w-bit fixed-point ensemble score. Throws RangeError if a
// constant cannot be encoded or if the worst-case sum of per-tree leaf
// magnitudes could wrap; throws SchemaError for structurally invalid models.
Circuit compile_gbt(const gbt::GbtModel& model, const FixedPointEncoding& enc);

// The model owner's input bits for a compiled circuit, in declared order.
std::vector<uint8_t> model_input_bits(const gbt::GbtModel& model, const FixedPointEncoding& enc);

// The test owner's input bits: each feature encoded LSB-first.
std::vector<uint8_t> feature_input_bits(std::span<const double> features,
                                        const FixedPointEncoding& enc);

// Convenience: plaintext circuit evaluation of a compiled model, decoded.
double eval_compiled_plain(const Circuit& c, const gbt::GbtModel& model,
                           std::span<const double> features, const FixedPointEncoding& enc);

// Snaps thresholds, leaves, or features onto the encoding grid
// (decode . encode). With both model and features snapped, the circuit
// reproduces gbt::predict bit-exactly as long as the overflow bound holds.
gbt::GbtModel quantized_model(const gbt::GbtModel& model, const FixedPointEncoding& enc);
std::vector<double> quantized_features(std::span<const double> features,
                                       const FixedPointEncoding& enc);

}  // namespace privscore::circuit

#endif  // PRIVSCORE_CIRCUIT_COMPILE_GBT_HPP_
