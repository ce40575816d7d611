#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace entropyflow {

// One strictly positive weight per edge index.
using WeightVector = std::vector<double>;

struct Edge {
    int u = 0;  // canonical: u < v
    int v = 0;
};

struct AdjEntry {
    int vertex = 0;
    int edge = 0;
};

// Undirected weighted finite graph with dense vertex indices.
// Immutable after construction; safe to share across threads.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<AdjEntry>> adjacency;  // symmetric, (neighbor, edge index)
    std::vector<std::string> names;                // dense index -> external id
    std::unordered_map<std::string, int> index;    // external id -> dense index

    int vertex_count() const { return n; }
    int edge_count() const { return static_cast<int>(edges.size()); }

    const std::string& name_of(int v) const { return names[static_cast<size_t>(v)]; }

    std::optional<int> index_of(const std::string& name) const {
        auto it = index.find(name);
        if (it == index.end()) return std::nullopt;
        return it->second;
    }
};

struct EdgeInput {
    std::string u;
    std::string v;
    std::optional<double> weight;  // defaults to 1.0
};

// Community labeling: one dense id in [0, num_communities) per vertex.
struct Partition {
    std::vector<int> labels;
    int num_communities = 0;
};

// BFS layering of the source's connected component: shells[0] = {source},
// shells[j] = vertices at distance exactly j, depth = deepest nonempty shell.
struct ShellDecomposition {
    int source = 0;
    std::vector<int> shell_of;  // -1 for vertices outside the source's component
    std::vector<std::vector<int>> shells;

    int depth() const { return static_cast<int>(shells.size()) - 1; }
};

// Build a graph from named edges; dense indices follow first appearance.
// Rejects self-loops, duplicate edges and non-positive weights.
std::pair<Graph, WeightVector> build_graph(const std::vector<EdgeInput>& input);

// Build from dense-index edges (names default to the decimal index).
// Vertices not covered by any edge are allowed.
Graph graph_from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges);

ShellDecomposition shells(const Graph& g, int source);

// Components of the subgraph keeping exactly the edges with mask[e] != 0.
// Component ids are dense and assigned in order of smallest member vertex.
Partition connected_components(const Graph& g, const std::vector<char>& edge_mask);
Partition connected_components(const Graph& g);

}  // namespace entropyflow
