#include "entropyflow/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace entropyflow {

namespace {

// KL over an explicit support list; both masses are positive there.
double kl_on_support(const std::vector<double>& p, const std::vector<double>& q,
                     const std::vector<int>& support) {
    double sum = 0.0;
    for (int z : support) {
        double pz = p[static_cast<size_t>(z)];
        sum += pz * std::log(pz / q[static_cast<size_t>(z)]);
    }
    return sum;
}

double entropy_from_dists(const WalkDistribution& du, const WalkDistribution& dv,
                          const std::vector<int>& support, EntropyVariant variant) {
    switch (variant) {
        case EntropyVariant::forward:
            return kl_on_support(du.mass, dv.mass, support);
        case EntropyVariant::backward:
            return kl_on_support(dv.mass, du.mass, support);
        case EntropyVariant::symmetric:
        default:
            return kl_on_support(du.mass, dv.mass, support) +
                   kl_on_support(dv.mass, du.mass, support);
    }
}

// Vertex lists per component, in ascending vertex order (fixed summation
// order keeps results deterministic).
std::vector<std::vector<int>> component_members(const Graph& g, const Partition& comps) {
    std::vector<std::vector<int>> members(static_cast<size_t>(comps.num_communities));
    for (int v = 0; v < g.n; ++v) {
        members[static_cast<size_t>(comps.labels[static_cast<size_t>(v)])].push_back(v);
    }
    return members;
}

std::vector<double> edge_entropies_impl(const Graph& g, const WeightVector& weights, double alpha,
                                        EntropyVariant variant, bool parallel) {
    std::vector<WalkDistribution> dists = parallel
                                              ? all_walk_distributions(g, weights, alpha)
                                              : serial::all_walk_distributions(g, weights, alpha);
    Partition comps = connected_components(g);
    std::vector<std::vector<int>> members = component_members(g, comps);

    const int m = g.edge_count();
    std::vector<double> entropy(static_cast<size_t>(m), 0.0);
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (int e = 0; e < m; ++e) {
            const Edge& ed = g.edges[static_cast<size_t>(e)];
            const auto& support =
                members[static_cast<size_t>(comps.labels[static_cast<size_t>(ed.u)])];
            entropy[static_cast<size_t>(e)] =
                entropy_from_dists(dists[static_cast<size_t>(ed.u)],
                                   dists[static_cast<size_t>(ed.v)], support, variant);
        }
    } else {
        for (int e = 0; e < m; ++e) {
            const Edge& ed = g.edges[static_cast<size_t>(e)];
            const auto& support =
                members[static_cast<size_t>(comps.labels[static_cast<size_t>(ed.u)])];
            entropy[static_cast<size_t>(e)] =
                entropy_from_dists(dists[static_cast<size_t>(ed.u)],
                                   dists[static_cast<size_t>(ed.v)], support, variant);
        }
    }
    return entropy;
}

}  // namespace

EntropyVariant parse_variant(const std::string& name) {
    if (name == "sym" || name == "symmetric") return EntropyVariant::symmetric;
    if (name == "forward") return EntropyVariant::forward;
    if (name == "backward") return EntropyVariant::backward;
    throw std::invalid_argument("unknown entropy variant: " + name);
}

const char* variant_name(EntropyVariant v) {
    switch (v) {
        case EntropyVariant::forward:
            return "forward";
        case EntropyVariant::backward:
            return "backward";
        case EntropyVariant::symmetric:
        default:
            return "symmetric";
    }
}

double kl_divergence(const WalkDistribution& p, const WalkDistribution& q) {
    if (p.mass.size() != q.mass.size()) {
        throw std::logic_error("kl_divergence: distributions over different vertex sets");
    }
    double sum = 0.0;
    for (size_t z = 0; z < p.mass.size(); ++z) {
        bool in_p = p.mass[z] > 0.0;
        bool in_q = q.mass[z] > 0.0;
        if (in_p != in_q) {
            throw std::logic_error("kl_divergence: support mismatch (caller bug)");
        }
        if (in_p) sum += p.mass[z] * std::log(p.mass[z] / q.mass[z]);
    }
    return sum;
}

double edge_entropy(const Graph& g, const WeightVector& weights, int edge, double alpha,
                    EntropyVariant variant) {
    if (edge < 0 || edge >= g.edge_count()) {
        throw std::invalid_argument("edge_entropy: edge index out of range");
    }
    const Edge& ed = g.edges[static_cast<size_t>(edge)];
    WalkDistribution du = walk_distribution(g, weights, ed.u, alpha);
    WalkDistribution dv = walk_distribution(g, weights, ed.v, alpha);
    switch (variant) {
        case EntropyVariant::forward:
            return kl_divergence(du, dv);
        case EntropyVariant::backward:
            return kl_divergence(dv, du);
        case EntropyVariant::symmetric:
        default:
            return kl_divergence(du, dv) + kl_divergence(dv, du);
    }
}

std::vector<double> edge_entropies(const Graph& g, const WeightVector& weights, double alpha,
                                   EntropyVariant variant) {
    return edge_entropies_impl(g, weights, alpha, variant, true);
}

std::vector<double> serial::edge_entropies(const Graph& g, const WeightVector& weights,
                                           double alpha, EntropyVariant variant) {
    return edge_entropies_impl(g, weights, alpha, variant, false);
}

}  // namespace entropyflow
