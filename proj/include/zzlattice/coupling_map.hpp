#pragma once

#include <string>
#include <vector>

#include "zzlattice/errors.hpp"

namespace zzlattice {

// Undirected edge, stored normalized a < b.
struct Edge {
    int a = 0;
    int b = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A set of edges sharing one physical coupler (a 2x2 plaquette's star).
struct CouplerCluster {
    int id = 0;
    std::vector<int> members;  // ascending qubit ids
    std::vector<Edge> edges;   // edges annotated to this cluster
};

struct CouplingMap {
    int n_qubits = 0;
    std::vector<Edge> edges;  // lexicographically sorted, unique; edge index
                              // = position in this list
    std::vector<CouplerCluster> clusters;

    bool has_edge(int a, int b) const;
    int edge_index(int a, int b) const;    // -1 if absent
    int cluster_of_edge(int a, int b) const;  // -1 if unannotated
    std::vector<std::vector<int>> adjacency() const;  // neighbors ascending
};

// rows x cols king graph (8-neighbor grid), qubit id = r*cols + c. Clusters:
// one per 2x2 plaquette in lexicographic (r, c) order, annotating the 6 edges
// internal to the plaquette; an edge shared by two plaquettes belongs to the
// lexicographically first.
CouplingMap hybrid_grid_map(int rows, int cols);

// Heavy-hex style lattice: rows of linearly connected qubits plus bridge
// qubits between adjacent rows at every 4th column (offset alternating 0/2).
// The first n qubits in breadth-first order from qubit 0 are kept and
// reindexed by BFS rank. 2 <= n <= 133. Max degree 3, connected.
CouplingMap heavy_hex_map(int n_qubits);

// Complete graph, used as the ideal-connectivity reference.
CouplingMap all_to_all_map(int n_qubits);

bool is_connected(const CouplingMap& map);

}  // namespace zzlattice
