#include "zzlattice/bench.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zzlattice/circuit.hpp"
#include "zzlattice/threads.hpp"

namespace zzlattice {

CouplingMap bench_map(const std::string& topology, int n) {
    if (n < 2) throw ConfigError("bench_map: need n >= 2");
    if (topology == "hybrid") {
        // smallest near-square king grid covering n qubits
        int rows = static_cast<int>(std::lround(std::sqrt(double(n))));
        rows = std::max(rows, 1);
        const int cols = (n + rows - 1) / rows;
        return hybrid_grid_map(rows, cols);
    }
    if (topology == "heavyhex") return heavy_hex_map(n);
    if (topology == "alltoall") return all_to_all_map(n);
    throw ConfigError("bench_map: unknown topology \"" + topology +
                      "\" (expected hybrid, heavyhex, or alltoall)");
}

bool default_contention(const std::string& topology) {
    // shared-coupler plaquettes serialize; dedicated couplers don't
    return topology == "hybrid";
}

DepthReport benchmark_grover(int n_min, int n_max,
                             const std::vector<std::string>& topologies,
                             const std::vector<std::uint64_t>& seeds,
                             std::optional<bool> contention_override) {
    if (n_min < 2 || n_max > 10 || n_min > n_max)
        throw ConfigError("benchmark_grover: n range must satisfy 2 <= n_min "
                          "<= n_max <= 10");
    if (topologies.empty())
        throw ConfigError("benchmark_grover: no topologies given");
    if (seeds.empty()) throw ConfigError("benchmark_grover: no seeds given");
    for (const auto& t : topologies) bench_map(t, n_min);  // name check

    DepthReport report;
    report.seeds = seeds;

    struct Job {
        int n;
        std::string topology;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (int n = n_min; n <= n_max; ++n)
        for (const auto& topo : topologies)
            for (std::uint64_t s : seeds) jobs.push_back({n, topo, s});

    report.rows.resize(jobs.size());
    std::vector<std::string> failures(jobs.size());

    parallel_for(static_cast<int>(jobs.size()), [&](int j) {
        const Job& job = jobs[j];
        const std::string marked(job.n, '1');
        const Circuit circ = grover_circuit(job.n, marked);
        const CouplingMap map = bench_map(job.topology, job.n);
        const RoutedCircuit routed = route(circ, map, std::nullopt, job.seed);

        BenchRow row;
        row.n = job.n;
        row.topology = job.topology;
        row.seed = job.seed;
        row.swaps = routed.swaps_inserted;
        row.depth_contention_on = schedule_depth(routed, map, true);
        row.depth_contention_off = schedule_depth(routed, map, false);
        const bool contention =
            contention_override.value_or(default_contention(job.topology));
        row.depth = contention ? row.depth_contention_on
                               : row.depth_contention_off;
        row.depth_2q = schedule_depth_2q(routed, map, contention);

        if (!gates_on_edges(routed.circuit, map)) {
            failures[j] = "routed 2q gate off the coupling map";
            return;
        }
        const VerifyResult vr = verify_routed(circ, routed);
        row.verified = vr.ok;
        if (!vr.ok) {
            std::ostringstream os;
            os << "equivalence deviation " << vr.max_deviation << " ("
               << vr.method << ")";
            failures[j] = os.str();
            return;
        }
        report.rows[j] = std::move(row);
    });

    for (size_t j = 0; j < jobs.size(); ++j)
        if (!failures[j].empty()) {
            std::ostringstream os;
            os << "benchmark_grover: n=" << jobs[j].n << " " << jobs[j].topology
               << " seed=" << jobs[j].seed << ": " << failures[j];
            throw VerificationError(os.str());
        }

    const bool have_pair =
        std::count(topologies.begin(), topologies.end(), "hybrid") &&
        std::count(topologies.begin(), topologies.end(), "heavyhex");
    if (have_pair) {
        for (int n = n_min; n <= n_max; ++n) {
            ReductionSummary s;
            s.n = n;
            int hy = -1, hh = -1;
            for (const auto& row : report.rows) {
                if (row.n != n) continue;
                if (row.topology == "hybrid")
                    hy = hy < 0 ? row.depth : std::min(hy, row.depth);
                if (row.topology == "heavyhex")
                    hh = hh < 0 ? row.depth : std::min(hh, row.depth);
            }
            s.depth_hybrid = hy;
            s.depth_heavyhex = hh;
            s.reduction_pct = 100.0 * (hh - hy) / double(hh);
            report.reductions.push_back(s);
        }
    }
    return report;
}

}  // namespace zzlattice
