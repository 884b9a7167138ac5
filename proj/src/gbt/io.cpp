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

#include "privscore/gbt/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "privscore/errors.hpp"

namespace privscore::gbt {

namespace {

using nlohmann::json;

json node_to_json(const Tree& tree, size_t index, int depth) {
  const size_t n_internal = tree.internal.size();
  if (index >= n_internal) {
    return json{{"value", tree.leaves[index - n_internal]}};
  }
  json j;
  j["feature"] = tree.internal[index].feature;
  j["threshold"] = tree.internal[index].threshold;
  j["left"] = node_to_json(tree, 2 * index + 1, depth - 1);
  j["right"] = node_to_json(tree, 2 * index + 2, depth - 1);
  return j;
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const char* where) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool ok = false;
    for (const char* a : allowed) {
      if (key == a) ok = true;
    }
    if (!ok) throw SchemaError(std::string(where) + ": unknown key \"" + key + "\"");
  }
}

// Fills the heap-layout tree; levels_left counts edges to the leaves.
void node_from_json(const json& j, Tree& tree, size_t index, int levels_left) {
  if (!j.is_object()) throw SchemaError("tree node must be an object");
  if (j.contains("value")) {
    reject_unknown_keys(j, {"value"}, "leaf node");
    if (levels_left != 0) throw SchemaError("leaf found above the declared depth");
    if (!j["value"].is_number()) throw SchemaError("leaf value must be a number");
    tree.leaves[index - tree.internal.size()] = j["value"].get<double>();
    return;
  }
  reject_unknown_keys(j, {"feature", "threshold", "left", "right"}, "internal node");
  if (levels_left == 0) throw SchemaError("internal node found at leaf depth");
  if (!j.contains("feature") || !j["feature"].is_number_integer()) {
    throw SchemaError("internal node needs an integer \"feature\"");
  }
  if (!j.contains("threshold") || !j["threshold"].is_number()) {
    throw SchemaError("internal node needs a numeric \"threshold\"");
  }
  if (!j.contains("left") || !j.contains("right")) {
    throw SchemaError("internal node needs \"left\" and \"right\" children");
  }
  tree.internal[index] = InternalNode{j["feature"].get<int>(), j["threshold"].get<double>()};
  node_from_json(j["left"], tree, 2 * index + 1, levels_left - 1);
  node_from_json(j["right"], tree, 2 * index + 2, levels_left - 1);
}

}  // namespace

std::string model_to_json(const GbtModel& model) {
  validate_model(model);
  json j;
  j["n_features"] = model.n_features;
  j["depth"] = model.depth;
  j["trees"] = json::array();
  for (const Tree& tree : model.trees) {
    j["trees"].push_back(node_to_json(tree, 0, model.depth));
  }
  return j.dump(2);
}

GbtModel model_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("model is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("model file must hold a JSON object");
  reject_unknown_keys(j, {"n_features", "depth", "trees"}, "model");
  if (!j.contains("n_features") || !j["n_features"].is_number_integer()) {
    throw SchemaError("model needs an integer \"n_features\"");
  }
  if (!j.contains("depth") || !j["depth"].is_number_integer()) {
    throw SchemaError("model needs an integer \"depth\"");
  }
  if (!j.contains("trees") || !j["trees"].is_array()) {
    throw SchemaError("model needs a \"trees\" array");
  }

  GbtModel model;
  model.n_features = j["n_features"].get<int>();
  model.depth = j["depth"].get<int>();
  if (model.n_features <= 0) throw SchemaError("n_features must be positive");
  if (model.depth < 1 || model.depth > 30) throw SchemaError("depth must lie in 1..30");
  for (const json& t : j["trees"]) {
    Tree tree;
    tree.internal.assign((size_t{1} << model.depth) - 1, InternalNode{});
    tree.leaves.assign(size_t{1} << model.depth, 0.0);
    node_from_json(t, tree, 0, model.depth);
    model.trees.push_back(std::move(tree));
  }
  validate_model(model);
  return model;
}

void save_model(const GbtModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot open " + path + " for writing");
  out << model_to_json(model) << "\n";
}

GbtModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open model file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return model_from_json(ss.str());
}

void save_dataset(const Dataset& data, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot open " + path + " for writing");
  out.precision(17);
  for (int f = 0; f < data.n_features; ++f) out << "f" << f << ",";
  out << "label\n";
  for (size_t r = 0; r < data.size(); ++r) {
    for (int f = 0; f < data.n_features; ++f) out << data.features[r][f] << ",";
    out << data.labels[r] << "\n";
  }
}

Dataset load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open dataset file " + path);
  std::string line;
  if (!std::getline(in, line)) throw SchemaError("dataset file is empty (missing header)");
  int n_columns = 1;
  for (char c : line) {
    if (c == ',') ++n_columns;
  }
  if (n_columns < 2) throw SchemaError("dataset needs at least one feature column and a label");

  Dataset data;
  data.n_features = n_columns - 1;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<double> cells;
    cells.reserve(n_columns);
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        size_t used = 0;
        const double v = std::stod(cell, &used);
        if (used != cell.size() || !std::isfinite(v)) throw std::invalid_argument(cell);
        cells.push_back(v);
      } catch (const std::exception&) {
        throw SchemaError("dataset line " + std::to_string(line_no) + ": bad numeric cell \"" +
                          cell + "\"");
      }
    }
    if (static_cast<int>(cells.size()) != n_columns) {
      throw SchemaError("dataset line " + std::to_string(line_no) + ": expected " +
                        std::to_string(n_columns) + " columns, got " +
                        std::to_string(cells.size()));
    }
    data.labels.push_back(cells.back());
    cells.pop_back();
    data.features.push_back(std::move(cells));
  }
  return data;
}

}  // namespace privscore::gbt
