#include "entropyflow/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace entropyflow {

namespace {

void add_adjacency(Graph& g) {
    g.adjacency.assign(static_cast<size_t>(g.n), {});
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edges[static_cast<size_t>(e)];
        g.adjacency[static_cast<size_t>(ed.u)].push_back({ed.v, e});
        g.adjacency[static_cast<size_t>(ed.v)].push_back({ed.u, e});
    }
}

}  // namespace

std::pair<Graph, WeightVector> build_graph(const std::vector<EdgeInput>& input) {
    if (input.empty()) {
        throw std::invalid_argument("edge list is empty: a graph needs at least one vertex");
    }
    Graph g;
    WeightVector weights;
    std::set<std::pair<int, int>> seen;
    auto intern = [&g](const std::string& name) {
        auto it = g.index.find(name);
        if (it != g.index.end()) return it->second;
        int id = static_cast<int>(g.names.size());
        g.index.emplace(name, id);
        g.names.push_back(name);
        return id;
    };
    for (const EdgeInput& in : input) {
        int u = intern(in.u);
        int v = intern(in.v);
        if (u == v) {
            throw std::invalid_argument("self-loop rejected: " + in.u + " " + in.v);
        }
        double w = in.weight.value_or(1.0);
        if (!(w > 0.0)) {
            throw std::invalid_argument("non-positive weight rejected on edge " + in.u + " " +
                                        in.v + ": " + std::to_string(w));
        }
        std::pair<int, int> key{std::min(u, v), std::max(u, v)};
        if (!seen.insert(key).second) {
            throw std::invalid_argument("duplicate edge rejected: " + in.u + " " + in.v);
        }
        g.edges.push_back({key.first, key.second});
        weights.push_back(w);
    }
    g.n = static_cast<int>(g.names.size());
    add_adjacency(g);
    return {std::move(g), std::move(weights)};
}

Graph graph_from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    if (vertex_count < 1) {
        throw std::invalid_argument("a graph needs at least one vertex");
    }
    Graph g;
    g.n = vertex_count;
    g.names.reserve(static_cast<size_t>(vertex_count));
    for (int v = 0; v < vertex_count; ++v) {
        g.names.push_back(std::to_string(v));
        g.index.emplace(g.names.back(), v);
    }
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (u == v) {
            throw std::invalid_argument("self-loop rejected: " + std::to_string(u));
        }
        std::pair<int, int> key{std::min(u, v), std::max(u, v)};
        if (!seen.insert(key).second) {
            throw std::invalid_argument("duplicate edge rejected: " + std::to_string(u) + " " +
                                        std::to_string(v));
        }
        g.edges.push_back({key.first, key.second});
    }
    add_adjacency(g);
    return g;
}

ShellDecomposition shells(const Graph& g, int source) {
    if (source < 0 || source >= g.n) {
        throw std::invalid_argument("shells: source vertex out of range");
    }
    ShellDecomposition sd;
    sd.source = source;
    sd.shell_of.assign(static_cast<size_t>(g.n), -1);
    sd.shell_of[static_cast<size_t>(source)] = 0;
    sd.shells.push_back({source});
    while (true) {
        std::vector<int> next;
        for (int u : sd.shells.back()) {
            for (const AdjEntry& a : g.adjacency[static_cast<size_t>(u)]) {
                if (sd.shell_of[static_cast<size_t>(a.vertex)] < 0) {
                    sd.shell_of[static_cast<size_t>(a.vertex)] =
                        static_cast<int>(sd.shells.size());
                    next.push_back(a.vertex);
                }
            }
        }
        if (next.empty()) break;
        sd.shells.push_back(std::move(next));
    }
    return sd;
}

Partition connected_components(const Graph& g, const std::vector<char>& edge_mask) {
    if (static_cast<int>(edge_mask.size()) != g.edge_count()) {
        throw std::invalid_argument("connected_components: edge mask size mismatch");
    }
    Partition p;
    p.labels.assign(static_cast<size_t>(g.n), -1);
    int next_label = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (p.labels[static_cast<size_t>(s)] >= 0) continue;
        p.labels[static_cast<size_t>(s)] = next_label;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (const AdjEntry& a : g.adjacency[static_cast<size_t>(u)]) {
                if (!edge_mask[static_cast<size_t>(a.edge)]) continue;
                if (p.labels[static_cast<size_t>(a.vertex)] < 0) {
                    p.labels[static_cast<size_t>(a.vertex)] = next_label;
                    stack.push_back(a.vertex);
                }
            }
        }
        ++next_label;
    }
    p.num_communities = next_label;
    return p;
}

Partition connected_components(const Graph& g) {
    return connected_components(g, std::vector<char>(static_cast<size_t>(g.edge_count()), 1));
}

}  // namespace entropyflow
