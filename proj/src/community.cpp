#include "entropyflow/community.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace entropyflow {

namespace {

void check_same_size(const Partition& a, const Partition& b) {
    if (a.labels.size() != b.labels.size()) {
        throw std::invalid_argument("partitions cover different vertex counts");
    }
}

// Contingency counts n_ij plus row/column sums for two labelings.
struct Contingency {
    std::vector<std::vector<long long>> cells;  // [label_a][label_b]
    std::vector<long long> row;                 // per label of a
    std::vector<long long> col;                 // per label of b
    long long total = 0;
};

Contingency contingency(const Partition& a, const Partition& b) {
    Contingency c;
    c.cells.assign(static_cast<size_t>(a.num_communities),
                   std::vector<long long>(static_cast<size_t>(b.num_communities), 0));
    c.row.assign(static_cast<size_t>(a.num_communities), 0);
    c.col.assign(static_cast<size_t>(b.num_communities), 0);
    c.total = static_cast<long long>(a.labels.size());
    for (size_t v = 0; v < a.labels.size(); ++v) {
        size_t i = static_cast<size_t>(a.labels[v]);
        size_t j = static_cast<size_t>(b.labels[v]);
        ++c.cells[i][j];
        ++c.row[i];
        ++c.col[j];
    }
    return c;
}

double choose2(long long k) { return 0.5 * static_cast<double>(k) * static_cast<double>(k - 1); }

}  // namespace

Partition surgery(const Graph& g, const WeightVector& weights, double cutoff) {
    if (static_cast<int>(weights.size()) != g.edge_count()) {
        throw std::invalid_argument("surgery: weight vector length mismatch");
    }
    std::vector<char> keep(weights.size());
    for (size_t e = 0; e < weights.size(); ++e) keep[e] = weights[e] <= cutoff ? 1 : 0;
    return connected_components(g, keep);
}

double ari(const Partition& a, const Partition& b) {
    check_same_size(a, b);
    Contingency c = contingency(a, b);
    double sum_cells = 0.0;
    for (const auto& r : c.cells) {
        for (long long nij : r) sum_cells += choose2(nij);
    }
    double sum_row = 0.0, sum_col = 0.0;
    for (long long k : c.row) sum_row += choose2(k);
    for (long long k : c.col) sum_col += choose2(k);
    double pairs = choose2(c.total);
    double expected = pairs > 0.0 ? sum_row * sum_col / pairs : 0.0;
    double maximum = 0.5 * (sum_row + sum_col);
    if (maximum - expected == 0.0) {
        return 1.0;  // only identical degenerate partitions land here
    }
    return (sum_cells - expected) / (maximum - expected);
}

double nmi(const Partition& a, const Partition& b) {
    check_same_size(a, b);
    Contingency c = contingency(a, b);
    double n = static_cast<double>(c.total);
    double mutual = 0.0;
    for (size_t i = 0; i < c.cells.size(); ++i) {
        for (size_t j = 0; j < c.cells[i].size(); ++j) {
            long long nij = c.cells[i][j];
            if (nij == 0) continue;
            mutual += (static_cast<double>(nij) / n) *
                      std::log(static_cast<double>(nij) * n /
                               (static_cast<double>(c.row[i]) * static_cast<double>(c.col[j])));
        }
    }
    auto entropy = [n](const std::vector<long long>& counts) {
        double h = 0.0;
        for (long long k : counts) {
            if (k == 0) continue;
            double p = static_cast<double>(k) / n;
            h -= p * std::log(p);
        }
        return h;
    };
    double ha = entropy(c.row);
    double hb = entropy(c.col);
    if (ha + hb == 0.0) return 1.0;  // both single-block
    return 2.0 * mutual / (ha + hb);
}

double modularity(const Graph& g, const Partition& partition,
                  const std::vector<char>& edge_mask) {
    if (static_cast<int>(partition.labels.size()) != g.n) {
        throw std::invalid_argument("modularity: partition does not cover all vertices");
    }
    if (static_cast<int>(edge_mask.size()) != g.edge_count()) {
        throw std::invalid_argument("modularity: edge mask size mismatch");
    }
    long long m = 0;
    std::vector<long long> intra(static_cast<size_t>(partition.num_communities), 0);
    std::vector<long long> degree(static_cast<size_t>(partition.num_communities), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!edge_mask[static_cast<size_t>(e)]) continue;
        ++m;
        const Edge& ed = g.edges[static_cast<size_t>(e)];
        int cu = partition.labels[static_cast<size_t>(ed.u)];
        int cv = partition.labels[static_cast<size_t>(ed.v)];
        if (cu == cv) ++intra[static_cast<size_t>(cu)];
        ++degree[static_cast<size_t>(cu)];
        ++degree[static_cast<size_t>(cv)];
    }
    if (m == 0) return 0.0;
    double q = 0.0;
    double dm = static_cast<double>(m);
    for (size_t c = 0; c < intra.size(); ++c) {
        double frac = static_cast<double>(degree[c]) / (2.0 * dm);
        q += static_cast<double>(intra[c]) / dm - frac * frac;
    }
    return q;
}

double modularity(const Graph& g, const Partition& partition) {
    return modularity(g, partition, std::vector<char>(static_cast<size_t>(g.edge_count()), 1));
}

SweepReport sweep(const Graph& g, const WeightVector& weights,
                  const std::optional<Partition>& ground_truth) {
    if (static_cast<int>(weights.size()) != g.edge_count()) {
        throw std::invalid_argument("sweep: weight vector length mismatch");
    }
    if (ground_truth && static_cast<int>(ground_truth->labels.size()) != g.n) {
        throw std::invalid_argument("sweep: ground truth does not cover the vertex set");
    }
    std::set<double, std::greater<double>> distinct(weights.begin(), weights.end());
    std::vector<double> cutoffs(distinct.begin(), distinct.end());

    SweepReport report;
    if (cutoffs.empty()) return report;
    report.rows.resize(cutoffs.size());
    const int k = static_cast<int>(cutoffs.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < k; ++i) {
        double cutoff = cutoffs[static_cast<size_t>(i)];
        std::vector<char> keep(weights.size());
        for (size_t e = 0; e < weights.size(); ++e) keep[e] = weights[e] <= cutoff ? 1 : 0;
        Partition part = connected_components(g, keep);
        MetricsReport row;
        row.cutoff = cutoff;
        row.num_communities = part.num_communities;
        row.modularity = modularity(g, part, keep);
        if (ground_truth) {
            row.ari = ari(*ground_truth, part);
            row.nmi = nmi(*ground_truth, part);
        }
        report.rows[static_cast<size_t>(i)] = std::move(row);
    }

    auto argmax = [&report](auto metric) {
        int best = 0;
        for (int i = 1; i < static_cast<int>(report.rows.size()); ++i) {
            if (metric(report.rows[static_cast<size_t>(i)]) >
                metric(report.rows[static_cast<size_t>(best)])) {
                best = i;  // strict: first occurrence wins ties
            }
        }
        return best;
    };
    report.best_by_modularity = argmax([](const MetricsReport& r) { return r.modularity; });
    if (ground_truth) {
        report.best_by_ari = argmax([](const MetricsReport& r) { return *r.ari; });
        report.best_by_nmi = argmax([](const MetricsReport& r) { return *r.nmi; });
    }
    return report;
}

}  // namespace entropyflow
