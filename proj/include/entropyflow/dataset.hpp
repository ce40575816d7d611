#pragma once

#include "entropyflow/graph.hpp"

#include <optional>
#include <string>

namespace entropyflow {

struct Dataset {
    std::string name;
    Graph graph;
    WeightVector initial_weights;
    std::optional<Partition> ground_truth;  // labels every vertex when present
};

// Edge-list file: one `u v [w]` per line, whitespace separated, lines whose
// first non-blank character is '#' are ignored. Missing weights default to 1.
std::pair<Graph, WeightVector> load_edge_list(const std::string& path);

// Ground-truth file: one `vertex_id label` per line. Every graph vertex must
// appear exactly once and every line must name a graph vertex.
Partition load_labels(const Graph& g, const std::string& path);

// Loads the edge list plus, when `label_path` is non-empty, the labels.
// The dataset name is the edge file's stem.
Dataset load_dataset(const std::string& edge_path, const std::string& label_path = "");

// Writes `u v w` lines in edge-index order with round-trippable weights.
void write_edge_list(const Graph& g, const WeightVector& weights, const std::string& path);

}  // namespace entropyflow
