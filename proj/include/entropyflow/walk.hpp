#pragma once

#include "entropyflow/graph.hpp"

namespace entropyflow {

// Lazy outward random walk distribution centered at `source`:
// the source keeps mass alpha, a shell-j vertex receives (1-alpha)^j times
// its outward path probability, with an extra alpha factor when the walk
// could continue into shell j+1.
struct WalkDistribution {
    int source = 0;
    double alpha = 0.0;
    std::vector<double> mass;  // per vertex; 0 outside the source's component
};

// Outward path probability P(x,z) for every z in the source's component
// (1 for the source itself, 0 outside the component). Computed by forward
// dynamic programming over shells; each shell-j vertex accumulates mass from
// shell-(j-1) neighbors weighted by w_uv / sum of u's shell-j edge weights.
std::vector<double> outward_mass(const Graph& g, const WeightVector& weights,
                                 const ShellDecomposition& sd);

WalkDistribution walk_distribution(const Graph& g, const WeightVector& weights, int source,
                                   double alpha);

// Distributions for all sources. The parallel version distributes sources
// across OpenMP threads; per-source results are independent, so both
// versions produce bitwise identical output.
std::vector<WalkDistribution> all_walk_distributions(const Graph& g, const WeightVector& weights,
                                                     double alpha);

namespace serial {
std::vector<WalkDistribution> all_walk_distributions(const Graph& g, const WeightVector& weights,
                                                     double alpha);
}  // namespace serial

}  // namespace entropyflow
