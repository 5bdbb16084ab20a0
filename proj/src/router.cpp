#include "zzlattice/router.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <set>

#include "zzlattice/statevector.hpp"

namespace zzlattice {

Eigen::MatrixXi distance_matrix(const CouplingMap& map) {
    if (!is_connected(map))
        throw ConfigError("distance_matrix: coupling map is disconnected");
    const int n = map.n_qubits;
    const auto adj = map.adjacency();
    Eigen::MatrixXi d = Eigen::MatrixXi::Constant(n, n, -1);
    for (int s = 0; s < n; ++s) {
        d(s, s) = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v : adj[u])
                if (d(s, v) < 0) {
                    d(s, v) = d(s, u) + 1;
                    q.push(v);
                }
        }
    }
    return d;
}

bool gates_on_edges(const Circuit& circuit, const CouplingMap& map) {
    for (const Gate& g : circuit.gates)
        if (is_two_qubit(g) && !map.has_edge(g.qubits[0], g.qubits[1]))
            return false;
    return true;
}

namespace {

struct Dag {
    std::vector<std::vector<int>> succs;
    std::vector<int> indegree;
};

Dag build_dag(const Circuit& c) {
    Dag dag;
    dag.succs.resize(c.gates.size());
    dag.indegree.assign(c.gates.size(), 0);
    std::vector<int> last(c.n_qubits, -1);
    for (size_t i = 0; i < c.gates.size(); ++i) {
        std::set<int> preds;
        for (int q : c.gates[i].qubits) {
            if (last[q] >= 0) preds.insert(last[q]);
            last[q] = static_cast<int>(i);
        }
        for (int p : preds) {
            dag.succs[p].push_back(static_cast<int>(i));
            ++dag.indegree[i];
        }
    }
    return dag;
}

}  // namespace

RoutedCircuit route(const Circuit& circuit, const CouplingMap& map,
                    std::optional<Layout> initial, std::uint64_t seed) {
    validate_circuit(circuit);
    for (const Gate& g : circuit.gates)
        if (g.kind == GateKind::MCX || g.kind == GateKind::Swap)
            throw ConfigError("route: input must be decomposed to 1q + cx "
                              "gates (found " + std::string(kind_name(g.kind)) +
                              ")");
    const int n = map.n_qubits;
    if (circuit.n_qubits > n)
        throw ConfigError("route: circuit has " +
                          std::to_string(circuit.n_qubits) +
                          " qubits but the map only " + std::to_string(n));
    if (!is_connected(map))
        throw ConfigError("route: coupling map is disconnected");

    // logical -> physical; seed shuffles only an unspecified layout
    std::vector<int> pos(n);
    std::iota(pos.begin(), pos.end(), 0);
    if (initial) {
        if (static_cast<int>(initial->phys_of.size()) != n)
            throw ConfigError("route: initial layout must place all " +
                              std::to_string(n) + " physical qubits");
        std::vector<char> used(n, 0);
        for (int p : initial->phys_of) {
            if (p < 0 || p >= n || used[p])
                throw ConfigError("route: initial layout is not a bijection");
            used[p] = 1;
        }
        pos = initial->phys_of;
    } else if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::shuffle(pos.begin(), pos.end(), rng);
    }
    const Layout init_layout{pos};

    const Eigen::MatrixXi dist = distance_matrix(map);
    const Dag dag = build_dag(circuit);
    const int n_gates = static_cast<int>(circuit.gates.size());

    std::set<int> front;
    std::vector<int> indeg = dag.indegree;
    for (int i = 0; i < n_gates; ++i)
        if (indeg[i] == 0) front.insert(i);

    std::vector<char> emitted(n_gates, 0);
    std::vector<Gate> out;
    out.reserve(circuit.gates.size() * 2);
    int swaps = 0;
    bool walking = false;  // plateau mode: march the oldest pair together
    int emitted_count = 0;
    int lookahead_cursor = 0;  // gates below this index are done or in front

    auto pair_dist = [&](const Gate& g) {
        return dist(pos[g.qubits[0]], pos[g.qubits[1]]);
    };

    auto emit_ready = [&] {
        bool any = false;
        bool progress = true;
        while (progress) {
            progress = false;
            for (auto it = front.begin(); it != front.end();) {
                const int gi = *it;
                const Gate& g = circuit.gates[gi];
                const bool ready = !is_two_qubit(g) || pair_dist(g) == 1;
                if (!ready) {
                    ++it;
                    continue;
                }
                Gate mapped = g;
                for (int& q : mapped.qubits) q = pos[q];
                out.push_back(std::move(mapped));
                emitted[gi] = 1;
                ++emitted_count;
                it = front.erase(it);
                for (int s : dag.succs[gi])
                    if (--indeg[s] == 0) front.insert(s);
                progress = true;
                any = true;
            }
        }
        return any;
    };

    // H = front distances + 0.5 * distances of the next <= 20 pending 2q gates
    auto heuristic = [&] {
        double h = 0.0;
        for (int gi : front) {
            const Gate& g = circuit.gates[gi];
            if (is_two_qubit(g)) h += pair_dist(g);
        }
        int counted = 0;
        for (int gi = lookahead_cursor; gi < n_gates && counted < 20; ++gi) {
            if (emitted[gi] || front.count(gi)) continue;
            const Gate& g = circuit.gates[gi];
            if (!is_two_qubit(g)) continue;
            h += 0.5 * pair_dist(g);
            ++counted;
        }
        return h;
    };

    auto apply_swap = [&](const Edge& e) {
        out.push_back(gate_swap(e.a, e.b));
        // pos maps logical -> physical; swap the logicals at e.a / e.b
        int la = -1, lb = -1;
        for (int l = 0; l < n; ++l) {
            if (pos[l] == e.a) la = l;
            if (pos[l] == e.b) lb = l;
        }
        std::swap(pos[la], pos[lb]);
        ++swaps;
    };

    // Termination: each pass either emits a gate, strictly lowers the
    // heuristic by >= 0.5 over a fixed gate window (so only finitely many
    // improving swaps fit between emissions), or -- in walking mode --
    // strictly shrinks the oldest blocked pair's distance, which forces
    // that gate out within diameter steps. Walking mode ends only on an
    // emission, so the improve/walk pair cannot ping-pong. The budget is
    // a tripwire for states this argument rules out.
    const long long swap_budget = static_cast<long long>(n + 24) * n *
                                  (static_cast<long long>(n_gates) + 1);

    while (!front.empty()) {
        if (emit_ready()) {
            walking = false;
            while (lookahead_cursor < n_gates &&
                   (emitted[lookahead_cursor] || front.count(lookahead_cursor)))
                ++lookahead_cursor;
            continue;
        }
        if (front.empty()) break;
        if (swaps > swap_budget)
            throw std::runtime_error("route: swap budget exceeded (internal)");

        const int oldest = *front.begin();
        const Gate& oldest_gate = circuit.gates[oldest];

        int chosen = -1;
        if (!walking) {
            // best strictly-improving swap on an edge touching a front
            // operand's position; plateaus switch to walking mode instead
            // of spending swaps on sideways moves
            std::set<int> hot;
            for (int gi : front)
                for (int q : circuit.gates[gi].qubits) hot.insert(pos[q]);
            const double h_before = heuristic();
            double best = h_before;
            for (size_t ei = 0; ei < map.edges.size(); ++ei) {
                const Edge& e = map.edges[ei];
                if (!hot.count(e.a) && !hot.count(e.b)) continue;
                // trial swap
                int la = -1, lb = -1;
                for (int l = 0; l < n; ++l) {
                    if (pos[l] == e.a) la = l;
                    if (pos[l] == e.b) lb = l;
                }
                std::swap(pos[la], pos[lb]);
                const double h_after = heuristic();
                std::swap(pos[la], pos[lb]);
                if (h_after + 1e-12 < best) {
                    chosen = static_cast<int>(ei);
                    best = h_after;
                }
            }
            if (chosen < 0) walking = true;
        }

        if (walking && chosen < 0) {
            // march the oldest blocked pair one step closer; an edge that
            // shortens the pair always exists on a connected map
            const int before = pair_dist(oldest_gate);
            for (size_t ei = 0; ei < map.edges.size(); ++ei) {
                const Edge& e = map.edges[ei];
                const int pa = pos[oldest_gate.qubits[0]];
                const int pb = pos[oldest_gate.qubits[1]];
                int na = pa, nb = pb;
                if (e.a == pa) na = e.b;
                else if (e.b == pa) na = e.a;
                if (e.a == pb) nb = e.b;
                else if (e.b == pb) nb = e.a;
                if (na == pa && nb == pb) continue;
                if (dist(na, nb) < before) {
                    chosen = static_cast<int>(ei);
                    break;
                }
            }
            if (chosen < 0)
                throw std::runtime_error("route: no walk edge (internal)");
        }

        apply_swap(map.edges[chosen]);
    }

    if (emitted_count != n_gates)
        throw std::runtime_error("route: failed to drain the gate dag");

    RoutedCircuit routed;
    routed.circuit = Circuit{n, std::move(out)};
    routed.initial_layout = init_layout;
    routed.final_layout = Layout{pos};
    routed.swaps_inserted = swaps;
    return routed;
}

namespace {

int schedule(const Circuit& circ, const CouplingMap& map,
             bool coupler_contention, bool two_qubit_only) {
    std::vector<int> last_layer(map.n_qubits, 0);
    // per-layer set of coupler clusters already busy
    std::vector<std::set<int>> busy;
    int depth = 0;
    for (const Gate& g : circ.gates) {
        if (two_qubit_only && !is_two_qubit(g)) continue;
        int layer = 0;
        for (int q : g.qubits) layer = std::max(layer, last_layer[q]);
        ++layer;
        if (coupler_contention && is_two_qubit(g)) {
            const int cid = map.cluster_of_edge(g.qubits[0], g.qubits[1]);
            if (cid >= 0) {
                while (static_cast<int>(busy.size()) >= layer &&
                       busy[layer - 1].count(cid))
                    ++layer;
                if (static_cast<int>(busy.size()) < layer) busy.resize(layer);
                busy[layer - 1].insert(cid);
            }
        }
        for (int q : g.qubits) last_layer[q] = layer;
        depth = std::max(depth, layer);
    }
    return depth;
}

}  // namespace

int schedule_depth(const RoutedCircuit& routed, const CouplingMap& map,
                   bool coupler_contention) {
    validate_circuit(routed.circuit);
    if (routed.circuit.n_qubits != map.n_qubits)
        throw ConfigError("schedule_depth: circuit/map size mismatch");
    return schedule(routed.circuit, map, coupler_contention, false);
}

int schedule_depth_2q(const RoutedCircuit& routed, const CouplingMap& map,
                      bool coupler_contention) {
    validate_circuit(routed.circuit);
    if (routed.circuit.n_qubits != map.n_qubits)
        throw ConfigError("schedule_depth_2q: circuit/map size mismatch");
    return schedule(routed.circuit, map, coupler_contention, true);
}

namespace {

// |x> -> |y>: bit layout[l] of y = bit l of x.
long long permute_bits(long long x, const std::vector<int>& phys_of) {
    long long y = 0;
    for (size_t l = 0; l < phys_of.size(); ++l)
        if (x & (1ll << l)) y |= 1ll << phys_of[l];
    return y;
}

Eigen::VectorXcd permute_state(const Eigen::VectorXcd& v,
                               const std::vector<int>& phys_of) {
    Eigen::VectorXcd w = Eigen::VectorXcd::Zero(v.size());
    for (long long x = 0; x < v.size(); ++x)
        w(permute_bits(x, phys_of)) = v(x);
    return w;
}

}  // namespace

VerifyResult verify_routed(const Circuit& original, const RoutedCircuit& routed) {
    const int n = routed.circuit.n_qubits;
    if (original.n_qubits > n)
        throw ConfigError("verify_routed: original circuit larger than routed");
    if (static_cast<int>(routed.initial_layout.phys_of.size()) != n ||
        static_cast<int>(routed.final_layout.phys_of.size()) != n)
        throw ConfigError("verify_routed: layouts must cover the full map");

    // original gates acting on the low qubits of the n-qubit space
    Circuit extended{n, original.gates};

    VerifyResult res;
    if (n <= 8) {
        res.method = "unitary";
        const long long dim = 1ll << n;
        Eigen::MatrixXcd lhs(dim, dim), rhs(dim, dim);
        for (long long x = 0; x < dim; ++x) {
            Eigen::VectorXcd a = Eigen::VectorXcd::Zero(dim);
            a(permute_bits(x, routed.initial_layout.phys_of)) = 1.0;
            lhs.col(x) = apply_circuit(routed.circuit, std::move(a));
            Eigen::VectorXcd b = Eigen::VectorXcd::Zero(dim);
            b(x) = 1.0;
            rhs.col(x) = permute_state(apply_circuit(extended, std::move(b)),
                                       routed.final_layout.phys_of);
        }
        res.max_deviation = phase_aligned_deviation(lhs, rhs);
    } else {
        if (n > 20)
            throw ResourceError("verify_routed: map too large to simulate");
        res.method = "sampled";
        const long long dim = 1ll << n;
        std::mt19937_64 rng(0x5eedc0de);
        std::uniform_int_distribution<long long> pick(0, dim - 1);
        constexpr int kSamples = 50;
        Eigen::MatrixXcd lhs(dim, kSamples), rhs(dim, kSamples);
        for (int k = 0; k < kSamples; ++k) {
            const long long x = pick(rng);
            Eigen::VectorXcd a = Eigen::VectorXcd::Zero(dim);
            a(permute_bits(x, routed.initial_layout.phys_of)) = 1.0;
            lhs.col(k) = apply_circuit(routed.circuit, std::move(a));
            Eigen::VectorXcd b = Eigen::VectorXcd::Zero(dim);
            b(x) = 1.0;
            rhs.col(k) = permute_state(apply_circuit(extended, std::move(b)),
                                       routed.final_layout.phys_of);
        }
        res.max_deviation = phase_aligned_deviation(lhs, rhs);
    }
    res.ok = res.max_deviation < 1e-9;
    return res;
}

}  // namespace zzlattice
