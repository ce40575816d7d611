#pragma once

#include "entropyflow/entropy.hpp"
#include "entropyflow/graph.hpp"

#include <stdexcept>
#include <utility>

namespace entropyflow {

struct FlowConfig {
    double alpha = 0.5;
    double step_size = 0.01;
    int num_steps = 20;
    EntropyVariant variant = EntropyVariant::symmetric;
};

// Weight snapshots w(t_0)..w(t_N) and the per-edge entropies that produced
// each update, D(t_0)..D(t_{N-1}), stored exactly as computed.
struct FlowTrace {
    FlowConfig config;
    std::vector<WeightVector> weights;
    std::vector<std::vector<double>> entropies;

    int num_steps() const { return static_cast<int>(weights.size()) - 1; }
};

// Raised when a weight or entropy stops being finite; the flow is
// un-normalized and may overflow, which is reported rather than clamped.
struct FlowNumericsError : std::runtime_error {
    int step;
    explicit FlowNumericsError(int step_index)
        : std::runtime_error("non-finite weight or entropy at flow step " +
                             std::to_string(step_index)),
          step(step_index) {}
};

// One explicit Euler step: every entropy is evaluated on the input snapshot,
// then all weights update simultaneously.
std::pair<WeightVector, std::vector<double>> flow_step(const Graph& g, const WeightVector& state,
                                                       const FlowConfig& config);

FlowTrace run_flow(const Graph& g, const WeightVector& w0, const FlowConfig& config);

// Exact solutions of the flow on the two graphs where the entropy does not
// depend on the weights: a single edge, and a triangle with equal weights.
double closed_form_segment(double alpha, double w0, double t);
double closed_form_equal_triangle(double alpha, double w0, double t);

enum class TrajectoryKind { converged, diverging, undetermined };

struct TrajectoryVerdict {
    TrajectoryKind kind = TrajectoryKind::undetermined;
    double final_entropy_max = 0.0;
    double window_growth_min = 0.0;
};

const char* trajectory_kind_name(TrajectoryKind k);

// Finite-horizon heuristic for the converge-or-blow-up dichotomy: converged
// when every final entropy is below entropy_tolerance, diverging when every
// weight grew at rate above growth_floor over the last `window` steps.
TrajectoryVerdict classify_trajectory(const FlowTrace& trace, double entropy_tolerance = 1e-6,
                                      double growth_floor = 1e-3, int window = 10);

}  // namespace entropyflow
