#include "entropyflow/serialize.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace entropyflow {

namespace {

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

void write_trace(const FlowTrace& trace, const Graph& g, const std::string& path) {
    if (trace.weights.empty() ||
        static_cast<int>(trace.weights.front().size()) != g.edge_count()) {
        throw std::invalid_argument("write_trace: trace does not match graph");
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write trace: " + path);
    out << "step,edge_u,edge_v,weight,entropy\n";
    for (size_t step = 0; step < trace.weights.size(); ++step) {
        bool has_entropy = step < trace.entropies.size();
        for (int e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edges[static_cast<size_t>(e)];
            out << step << ',' << g.name_of(ed.u) << ',' << g.name_of(ed.v) << ','
                << fmt17(trace.weights[step][static_cast<size_t>(e)]) << ',';
            if (has_entropy) out << fmt17(trace.entropies[step][static_cast<size_t>(e)]);
            out << '\n';
        }
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_report(const SweepReport& report, const std::string& path) {
    nlohmann::ordered_json doc;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const MetricsReport& row : report.rows) {
        nlohmann::ordered_json r;
        r["cutoff"] = row.cutoff;
        r["num_communities"] = row.num_communities;
        r["modularity"] = row.modularity;
        if (row.ari) r["ari"] = *row.ari;
        if (row.nmi) r["nmi"] = *row.nmi;
        doc["rows"].push_back(std::move(r));
    }
    doc["best_by_modularity"] = report.best_by_modularity;
    if (report.best_by_ari) doc["best_by_ari"] = *report.best_by_ari;
    if (report.best_by_nmi) doc["best_by_nmi"] = *report.best_by_nmi;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write report: " + path);
    out << doc.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

void histogram_export(const std::vector<double>& values, int bins, const std::string& path) {
    if (values.empty()) {
        throw std::invalid_argument("histogram_export: no values");
    }
    if (bins < 1) {
        throw std::invalid_argument("histogram_export: bin count must be at least 1");
    }
    auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    double lo = *lo_it, hi = *hi_it;
    double width = (hi - lo) / bins;
    std::vector<long long> count(static_cast<size_t>(bins), 0);
    for (double v : values) {
        int idx = width > 0.0 ? static_cast<int>((v - lo) / width) : 0;
        idx = std::min(idx, bins - 1);  // max lands in the last (closed) bin
        ++count[static_cast<size_t>(idx)];
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write histogram: " + path);
    out << "bin_left,bin_right,count\n";
    for (int b = 0; b < bins; ++b) {
        out << fmt17(lo + width * b) << ',' << fmt17(b + 1 == bins ? hi : lo + width * (b + 1))
            << ',' << count[static_cast<size_t>(b)] << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace entropyflow
