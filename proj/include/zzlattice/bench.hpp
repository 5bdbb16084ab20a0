#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zzlattice/coupling_map.hpp"
#include "zzlattice/router.hpp"

namespace zzlattice {

// Topology names accepted by the benchmark: "hybrid", "heavyhex", "alltoall".
// hybrid n -> smallest near-square king grid covering n qubits
// (rows = round(sqrt(n)), cols = ceil(n/rows)); heavyhex/alltoall -> exactly n.
CouplingMap bench_map(const std::string& topology, int n);

// Scheduling default: coupler contention on for hybrid (clustered couplers),
// off for topologies with dedicated couplers.
bool default_contention(const std::string& topology);

struct BenchRow {
    int n = 0;
    std::string topology;
    std::uint64_t seed = 0;
    int depth = 0;          // at the topology's default contention setting
    int depth_2q = 0;
    int swaps = 0;
    bool verified = false;
    int depth_contention_on = 0;   // both settings, for sensitivity reporting
    int depth_contention_off = 0;
};

struct ReductionSummary {
    int n = 0;
    int depth_hybrid = 0;    // min over seeds
    int depth_heavyhex = 0;  // min over seeds
    double reduction_pct = 0.0;  // 100 * (hh - hybrid) / hh
};

struct DepthReport {
    std::vector<BenchRow> rows;           // order-stable over (n, topo, seed)
    std::vector<ReductionSummary> reductions;  // per n, when both present
    std::vector<std::uint64_t> seeds;
};

// Grover depth benchmark: for each n in [n_min, n_max] and each topology,
// build the all-ones Grover circuit, route once per seed, schedule, and
// verify equivalence (VerificationError aborts the run on any failure).
// Depth figures ignore measurement; only gate layers are counted.
// contention_override forces one setting for every topology when given.
DepthReport benchmark_grover(int n_min, int n_max,
                             const std::vector<std::string>& topologies,
                             const std::vector<std::uint64_t>& seeds,
                             std::optional<bool> contention_override =
                                 std::nullopt);

}  // namespace zzlattice
