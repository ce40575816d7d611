#include "entropyflow/walk.hpp"

#include <stdexcept>

namespace entropyflow {

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("alpha must lie in (0,1)");
    }
}

void check_weights(const Graph& g, const WeightVector& weights) {
    if (static_cast<int>(weights.size()) != g.edge_count()) {
        throw std::invalid_argument("weight vector length does not match edge count");
    }
    for (double w : weights) {
        if (!(w > 0.0)) throw std::invalid_argument("weights must be strictly positive");
    }
}

std::vector<double> outward_mass_unchecked(const Graph& g, const WeightVector& weights,
                                           const ShellDecomposition& sd) {
    std::vector<double> mass(static_cast<size_t>(g.n), 0.0);
    mass[static_cast<size_t>(sd.source)] = 1.0;
    for (size_t j = 0; j + 1 < sd.shells.size(); ++j) {
        int next_shell = static_cast<int>(j) + 1;
        for (int u : sd.shells[j]) {
            // Denominator only spans u's own shell-(j+1) neighbors; it is
            // positive exactly when u has such a neighbor.
            double denom = 0.0;
            for (const AdjEntry& a : g.adjacency[static_cast<size_t>(u)]) {
                if (sd.shell_of[static_cast<size_t>(a.vertex)] == next_shell) {
                    denom += weights[static_cast<size_t>(a.edge)];
                }
            }
            if (denom == 0.0) continue;  // outward dead end, nothing propagates
            double scale = mass[static_cast<size_t>(u)] / denom;
            for (const AdjEntry& a : g.adjacency[static_cast<size_t>(u)]) {
                if (sd.shell_of[static_cast<size_t>(a.vertex)] == next_shell) {
                    mass[static_cast<size_t>(a.vertex)] +=
                        scale * weights[static_cast<size_t>(a.edge)];
                }
            }
        }
    }
    return mass;
}

WalkDistribution walk_distribution_unchecked(const Graph& g, const WeightVector& weights,
                                             int source, double alpha) {
    ShellDecomposition sd = shells(g, source);
    std::vector<double> path = outward_mass_unchecked(g, weights, sd);

    WalkDistribution dist;
    dist.source = source;
    dist.alpha = alpha;
    dist.mass.assign(static_cast<size_t>(g.n), 0.0);

    double damp = 1.0;  // (1-alpha)^j
    for (size_t j = 0; j < sd.shells.size(); ++j) {
        int next_shell = static_cast<int>(j) + 1;
        bool last_shell = (j + 1 == sd.shells.size());
        for (int u : sd.shells[j]) {
            bool continues = false;
            if (!last_shell) {
                for (const AdjEntry& a : g.adjacency[static_cast<size_t>(u)]) {
                    if (sd.shell_of[static_cast<size_t>(a.vertex)] == next_shell) {
                        continues = true;
                        break;
                    }
                }
            }
            // A vertex that cannot walk outward keeps its full arrival mass;
            // this is what makes the distribution sum to one. The source is
            // no exception: with no neighbors at all it keeps mass 1.
            double m = damp * path[static_cast<size_t>(u)];
            dist.mass[static_cast<size_t>(u)] = continues ? m * alpha : m;
        }
        damp *= 1.0 - alpha;
    }
    return dist;
}

}  // namespace

std::vector<double> outward_mass(const Graph& g, const WeightVector& weights,
                                 const ShellDecomposition& sd) {
    check_weights(g, weights);
    return outward_mass_unchecked(g, weights, sd);
}

WalkDistribution walk_distribution(const Graph& g, const WeightVector& weights, int source,
                                   double alpha) {
    check_alpha(alpha);
    check_weights(g, weights);
    if (source < 0 || source >= g.n) {
        throw std::invalid_argument("walk_distribution: source vertex out of range");
    }
    return walk_distribution_unchecked(g, weights, source, alpha);
}

std::vector<WalkDistribution> serial::all_walk_distributions(const Graph& g,
                                                             const WeightVector& weights,
                                                             double alpha) {
    check_alpha(alpha);
    check_weights(g, weights);
    std::vector<WalkDistribution> out(static_cast<size_t>(g.n));
    for (int x = 0; x < g.n; ++x) {
        out[static_cast<size_t>(x)] = walk_distribution_unchecked(g, weights, x, alpha);
    }
    return out;
}

std::vector<WalkDistribution> all_walk_distributions(const Graph& g, const WeightVector& weights,
                                                     double alpha) {
    check_alpha(alpha);
    check_weights(g, weights);
    std::vector<WalkDistribution> out(static_cast<size_t>(g.n));
#pragma omp parallel for schedule(dynamic, 16)
    for (int x = 0; x < g.n; ++x) {
        out[static_cast<size_t>(x)] = walk_distribution_unchecked(g, weights, x, alpha);
    }
    return out;
}

}  // namespace entropyflow
