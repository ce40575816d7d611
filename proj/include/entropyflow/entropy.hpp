#pragma once

#include "entropyflow/graph.hpp"
#include "entropyflow/walk.hpp"

#include <string>

namespace entropyflow {

// Which relative entropies drive an edge weight. For an edge uv (u < v):
// symmetric uses KL(u,v) + KL(v,u), forward KL(u,v) only, backward KL(v,u).
enum class EntropyVariant { symmetric, forward, backward };

EntropyVariant parse_variant(const std::string& name);  // "sym"/"forward"/"backward"
const char* variant_name(EntropyVariant v);

// KL divergence sum over P's support (the source's connected component),
// natural logarithm. The supports of P and Q must coincide; a mismatch is a
// caller bug and raises std::logic_error.
double kl_divergence(const WalkDistribution& p, const WalkDistribution& q);

double edge_entropy(const Graph& g, const WeightVector& weights, int edge, double alpha,
                    EntropyVariant variant = EntropyVariant::symmetric);

// Entropies for every edge, from walk distributions of all vertices.
// Work is split per vertex and per edge; each value is computed
// independently, so the serial and parallel versions agree bitwise.
std::vector<double> edge_entropies(const Graph& g, const WeightVector& weights, double alpha,
                                   EntropyVariant variant = EntropyVariant::symmetric);

namespace serial {
std::vector<double> edge_entropies(const Graph& g, const WeightVector& weights, double alpha,
                                   EntropyVariant variant = EntropyVariant::symmetric);
}  // namespace serial

}  // namespace entropyflow
