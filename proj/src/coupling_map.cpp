#include "zzlattice/coupling_map.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace zzlattice {

namespace {

Edge mk_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

}  // namespace

bool CouplingMap::has_edge(int a, int b) const {
    return edge_index(a, b) >= 0;
}

int CouplingMap::edge_index(int a, int b) const {
    const Edge e = mk_edge(a, b);
    const auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || !(*it == e)) return -1;
    return static_cast<int>(it - edges.begin());
}

int CouplingMap::cluster_of_edge(int a, int b) const {
    const Edge e = mk_edge(a, b);
    for (const auto& c : clusters)
        if (std::find(c.edges.begin(), c.edges.end(), e) != c.edges.end())
            return c.id;
    return -1;
}

std::vector<std::vector<int>> CouplingMap::adjacency() const {
    std::vector<std::vector<int>> adj(n_qubits);
    for (const Edge& e : edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

bool is_connected(const CouplingMap& map) {
    if (map.n_qubits <= 0) return false;
    const auto adj = map.adjacency();
    std::vector<char> seen(map.n_qubits, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                q.push(v);
            }
    }
    return count == map.n_qubits;
}

CouplingMap hybrid_grid_map(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw ConfigError("hybrid_grid_map: rows and cols must be >= 1");
    if (static_cast<long long>(rows) * cols < 2)
        throw ConfigError("hybrid_grid_map: need at least 2 qubits");

    CouplingMap map;
    map.n_qubits = rows * cols;
    const auto id = [cols](int r, int c) { return r * cols + c; };

    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) map.edges.push_back(mk_edge(id(r, c), id(r, c + 1)));
            if (r + 1 < rows) map.edges.push_back(mk_edge(id(r, c), id(r + 1, c)));
            if (r + 1 < rows && c + 1 < cols)
                map.edges.push_back(mk_edge(id(r, c), id(r + 1, c + 1)));
            if (r + 1 < rows && c > 0)
                map.edges.push_back(mk_edge(id(r, c), id(r + 1, c - 1)));
        }
    }
    std::sort(map.edges.begin(), map.edges.end());

    // One cluster per 2x2 plaquette; a shared edge belongs to the
    // lexicographically first plaquette containing both endpoints.
    const int prows = rows - 1, pcols = cols - 1;
    if (prows > 0 && pcols > 0) {
        const auto pid = [pcols](int pr, int pc) { return pr * pcols + pc; };
        map.clusters.resize(static_cast<size_t>(prows) * pcols);
        for (int pr = 0; pr < prows; ++pr)
            for (int pc = 0; pc < pcols; ++pc) {
                auto& cl = map.clusters[pid(pr, pc)];
                cl.id = pid(pr, pc);
                cl.members = {id(pr, pc), id(pr, pc + 1), id(pr + 1, pc),
                              id(pr + 1, pc + 1)};
            }
        for (const Edge& e : map.edges) {
            const int ra = e.a / cols, ca = e.a % cols;
            const int rb = e.b / cols, cb = e.b % cols;
            const int rmin = std::min(ra, rb), cmin = std::min(ca, cb);
            // candidate plaquette top-left corners containing both endpoints
            std::vector<std::pair<int, int>> cand;
            const bool same_row = ra == rb, same_col = ca == cb;
            if (same_row) {
                cand = {{rmin - 1, cmin}, {rmin, cmin}};
            } else if (same_col) {
                cand = {{rmin, cmin - 1}, {rmin, cmin}};
            } else {
                cand = {{rmin, cmin}};
            }
            for (const auto& [pr, pc] : cand) {
                if (pr < 0 || pr >= prows || pc < 0 || pc >= pcols) continue;
                map.clusters[pid(pr, pc)].edges.push_back(e);
                break;  // lexicographically first wins
            }
        }
    }
    return map;
}

CouplingMap heavy_hex_map(int n_qubits) {
    if (n_qubits < 2 || n_qubits > 133)
        throw ConfigError("heavy_hex_map: n must be in [2, 133], got " +
                          std::to_string(n_qubits));

    // Base lattice: 9 rows x 15 columns of linearly connected qubits plus a
    // bridge qubit between vertically adjacent rows every 4 columns, with the
    // column offset alternating 0 / 2 by row parity. 167 qubits total.
    constexpr int R = 9, C = 15;
    const auto rid = [](int r, int c) { return r * C + c; };
    int next_id = R * C;

    std::vector<Edge> base_edges;
    for (int r = 0; r < R; ++r)
        for (int c = 0; c + 1 < C; ++c)
            base_edges.push_back(mk_edge(rid(r, c), rid(r, c + 1)));
    for (int r = 0; r + 1 < R; ++r) {
        const int offset = (r % 2 == 0) ? 0 : 2;
        for (int c = 0; c < C; ++c) {
            if (c % 4 != offset) continue;
            const int bridge = next_id++;
            base_edges.push_back(mk_edge(rid(r, c), bridge));
            base_edges.push_back(mk_edge(bridge, rid(r + 1, c)));
        }
    }

    std::vector<std::vector<int>> adj(next_id);
    for (const Edge& e : base_edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());

    // Keep the first n qubits in BFS order from qubit 0 and reindex by rank.
    std::vector<int> rank(next_id, -1);
    std::vector<int> order;
    std::queue<int> bfs;
    bfs.push(0);
    rank[0] = 0;
    order.push_back(0);
    while (!bfs.empty() && static_cast<int>(order.size()) < n_qubits) {
        const int u = bfs.front();
        bfs.pop();
        for (int v : adj[u]) {
            if (rank[v] >= 0) continue;
            rank[v] = static_cast<int>(order.size());
            order.push_back(v);
            if (static_cast<int>(order.size()) == n_qubits) break;
            bfs.push(v);
        }
    }

    CouplingMap map;
    map.n_qubits = n_qubits;
    for (const Edge& e : base_edges) {
        if (rank[e.a] < 0 || rank[e.b] < 0) continue;
        if (rank[e.a] >= n_qubits || rank[e.b] >= n_qubits) continue;
        map.edges.push_back(mk_edge(rank[e.a], rank[e.b]));
    }
    std::sort(map.edges.begin(), map.edges.end());
    map.edges.erase(std::unique(map.edges.begin(), map.edges.end()),
                    map.edges.end());
    return map;
}

CouplingMap all_to_all_map(int n_qubits) {
    if (n_qubits < 2)
        throw ConfigError("all_to_all_map: need at least 2 qubits");
    CouplingMap map;
    map.n_qubits = n_qubits;
    for (int a = 0; a < n_qubits; ++a)
        for (int b = a + 1; b < n_qubits; ++b) map.edges.push_back({a, b});
    return map;
}

}  // namespace zzlattice
