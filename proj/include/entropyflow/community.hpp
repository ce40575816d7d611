#pragma once

#include "entropyflow/graph.hpp"

#include <optional>

namespace entropyflow {

struct MetricsReport {
    double cutoff = 0.0;
    int num_communities = 0;
    double modularity = 0.0;
    std::optional<double> ari;
    std::optional<double> nmi;
};

// One MetricsReport per candidate cutoff, cutoffs strictly decreasing.
// Best indices point at the first (largest-cutoff) maximum of each metric;
// ARI/NMI bests exist only when a ground truth was supplied.
struct SweepReport {
    std::vector<MetricsReport> rows;
    int best_by_modularity = 0;
    std::optional<int> best_by_ari;
    std::optional<int> best_by_nmi;
};

// Communities of the subgraph keeping exactly the edges with w_e <= cutoff
// (surgery removes edges strictly heavier than the cutoff).
Partition surgery(const Graph& g, const WeightVector& weights, double cutoff);

// Adjusted Rand index (Hubert-Arabie). Degenerate 0/0 cases only arise when
// the partitions are identical (both one-block or both all-singleton) and
// score 1 by convention.
double ari(const Partition& a, const Partition& b);

// Normalized mutual information, arithmetic-mean normalization
// 2 I(A;B) / (H(A)+H(B)), natural logs; 1 when both entropies vanish.
double nmi(const Partition& a, const Partition& b);

// Newman modularity with unit edge weights, Q = sum_c (e_c/m - (d_c/2m)^2).
// The masked overload evaluates Q on the subgraph of kept edges; a graph
// with no (kept) edges scores 0.
double modularity(const Graph& g, const Partition& partition);
double modularity(const Graph& g, const Partition& partition, const std::vector<char>& edge_mask);

// Surgery sweep over all distinct weight values in descending order. Each
// cutoff is scored on its post-surgery subgraph; ARI/NMI are included when
// a ground truth is given, otherwise the best cutoff is chosen by
// modularity alone. Cutoff evaluations run in parallel.
SweepReport sweep(const Graph& g, const WeightVector& weights,
                  const std::optional<Partition>& ground_truth = std::nullopt);

}  // namespace entropyflow
