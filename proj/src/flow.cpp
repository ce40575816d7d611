#include "entropyflow/flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace entropyflow {

namespace {

void check_config(const FlowConfig& config) {
    if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
        throw std::invalid_argument("alpha must lie in (0,1)");
    }
    if (!(config.step_size > 0.0)) {
        throw std::invalid_argument("step size must be positive");
    }
    if (config.num_steps < 0) {
        throw std::invalid_argument("number of steps must be non-negative");
    }
}

bool all_finite(const std::vector<double>& v) {
    for (double x : v) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

}  // namespace

std::pair<WeightVector, std::vector<double>> flow_step(const Graph& g, const WeightVector& state,
                                                       const FlowConfig& config) {
    check_config(config);
    std::vector<double> entropy = edge_entropies(g, state, config.alpha, config.variant);
    WeightVector next(state.size());
    for (size_t e = 0; e < state.size(); ++e) {
        next[e] = state[e] + config.step_size * entropy[e];
    }
    return {std::move(next), std::move(entropy)};
}

FlowTrace run_flow(const Graph& g, const WeightVector& w0, const FlowConfig& config) {
    check_config(config);
    FlowTrace trace;
    trace.config = config;
    trace.weights.reserve(static_cast<size_t>(config.num_steps) + 1);
    trace.entropies.reserve(static_cast<size_t>(config.num_steps));
    trace.weights.push_back(w0);
    for (int j = 1; j <= config.num_steps; ++j) {
        auto [next, entropy] = flow_step(g, trace.weights.back(), config);
        if (!all_finite(entropy) || !all_finite(next)) {
            throw FlowNumericsError(j);
        }
        trace.entropies.push_back(std::move(entropy));
        trace.weights.push_back(std::move(next));
    }
    return trace;
}

double closed_form_segment(double alpha, double w0, double t) {
    return w0 + t * (2.0 - 4.0 * alpha) * std::log((1.0 - alpha) / alpha);
}

double closed_form_equal_triangle(double alpha, double w0, double t) {
    return w0 + t * (3.0 * alpha - 1.0) * std::log(2.0 * alpha / (1.0 - alpha));
}

const char* trajectory_kind_name(TrajectoryKind k) {
    switch (k) {
        case TrajectoryKind::converged:
            return "converged";
        case TrajectoryKind::diverging:
            return "diverging";
        default:
            return "undetermined";
    }
}

TrajectoryVerdict classify_trajectory(const FlowTrace& trace, double entropy_tolerance,
                                      double growth_floor, int window) {
    if (window < 1) {
        throw std::invalid_argument("classify_trajectory: window must be at least 1");
    }
    int steps = trace.num_steps();
    if (steps < window) {
        throw std::invalid_argument("classify_trajectory: trace shorter than window+1 snapshots");
    }
    TrajectoryVerdict verdict;
    size_t m = trace.weights.front().size();
    if (m == 0) {
        verdict.kind = TrajectoryKind::converged;  // no edges, nothing evolves
        return verdict;
    }

    const std::vector<double>& last_entropy = trace.entropies.back();
    double entropy_max = -std::numeric_limits<double>::infinity();
    for (double d : last_entropy) entropy_max = std::max(entropy_max, d);

    const WeightVector& w_end = trace.weights.back();
    const WeightVector& w_begin = trace.weights[static_cast<size_t>(steps - window)];
    double span = static_cast<double>(window) * trace.config.step_size;
    double growth_min = std::numeric_limits<double>::infinity();
    for (size_t e = 0; e < m; ++e) {
        growth_min = std::min(growth_min, (w_end[e] - w_begin[e]) / span);
    }

    verdict.final_entropy_max = entropy_max;
    verdict.window_growth_min = growth_min;
    if (entropy_max < entropy_tolerance) {
        verdict.kind = TrajectoryKind::converged;
    } else if (growth_min > growth_floor) {
        verdict.kind = TrajectoryKind::diverging;
    } else {
        verdict.kind = TrajectoryKind::undetermined;
    }
    return verdict;
}

}  // namespace entropyflow
