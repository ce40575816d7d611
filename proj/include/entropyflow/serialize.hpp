#pragma once

#include "entropyflow/community.hpp"
#include "entropyflow/flow.hpp"
#include "entropyflow/graph.hpp"

#include <string>

namespace entropyflow {

// CSV with columns step,edge_u,edge_v,weight,entropy; one row per
// (step, edge). The final snapshot has no entropy (empty last column).
// Floats carry 17 significant digits so identical runs are byte-identical.
void write_trace(const FlowTrace& trace, const Graph& g, const std::string& path);

// Sweep report as JSON; rows without ground truth omit the ari/nmi keys.
void write_report(const SweepReport& report, const std::string& path);

// CSV of bin_left,bin_right,count over `bins` equal-width bins spanning
// [min, max] of the values.
void histogram_export(const std::vector<double>& values, int bins, const std::string& path);

}  // namespace entropyflow
