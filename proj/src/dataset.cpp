#include "entropyflow/dataset.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace entropyflow {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

double parse_weight(const std::string& tok, const std::string& path, int line_no) {
    size_t pos = 0;
    double w = 0.0;
    try {
        w = std::stod(tok, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != tok.size()) {
        throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                 ": cannot parse weight '" + tok + "'");
    }
    return w;
}

}  // namespace

std::pair<Graph, WeightVector> load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);
    std::vector<EdgeInput> input;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::vector<std::string> tok = tokenize(line);
        if (tok.size() != 2 && tok.size() != 3) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected 'u v [w]', got " + std::to_string(tok.size()) +
                                     " fields");
        }
        EdgeInput e;
        e.u = tok[0];
        e.v = tok[1];
        if (tok.size() == 3) e.weight = parse_weight(tok[2], path, line_no);
        input.push_back(std::move(e));
    }
    try {
        return build_graph(input);
    } catch (const std::invalid_argument& err) {
        throw std::runtime_error(path + ": " + err.what());
    }
}

Partition load_labels(const Graph& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open label file: " + path);
    std::vector<int> labels(static_cast<size_t>(g.n), -1);
    std::unordered_map<std::string, int> label_ids;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::vector<std::string> tok = tokenize(line);
        if (tok.size() != 2) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected 'vertex_id label'");
        }
        std::optional<int> v = g.index_of(tok[0]);
        if (!v) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": unknown vertex '" + tok[0] + "'");
        }
        if (labels[static_cast<size_t>(*v)] >= 0) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": vertex '" + tok[0] + "' labeled twice");
        }
        auto [it, inserted] = label_ids.emplace(tok[1], static_cast<int>(label_ids.size()));
        labels[static_cast<size_t>(*v)] = it->second;
    }
    std::string missing;
    for (int v = 0; v < g.n; ++v) {
        if (labels[static_cast<size_t>(v)] < 0) {
            if (!missing.empty()) missing += ", ";
            missing += g.name_of(v);
        }
    }
    if (!missing.empty()) {
        throw std::runtime_error(path + ": unlabeled vertices: " + missing);
    }
    Partition p;
    p.labels = std::move(labels);
    p.num_communities = static_cast<int>(label_ids.size());
    return p;
}

Dataset load_dataset(const std::string& edge_path, const std::string& label_path) {
    Dataset ds;
    auto [graph, weights] = load_edge_list(edge_path);
    ds.graph = std::move(graph);
    ds.initial_weights = std::move(weights);
    ds.name = std::filesystem::path(edge_path).stem().string();
    if (!label_path.empty()) {
        ds.ground_truth = load_labels(ds.graph, label_path);
    }
    return ds;
}

void write_edge_list(const Graph& g, const WeightVector& weights, const std::string& path) {
    if (static_cast<int>(weights.size()) != g.edge_count()) {
        throw std::invalid_argument("write_edge_list: weight vector length mismatch");
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write edge list: " + path);
    char buf[64];
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edges[static_cast<size_t>(e)];
        std::snprintf(buf, sizeof(buf), "%.17g", weights[static_cast<size_t>(e)]);
        out << g.name_of(ed.u) << ' ' << g.name_of(ed.v) << ' ' << buf << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace entropyflow
