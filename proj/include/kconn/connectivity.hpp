#pragma once

#include <optional>
#include <utility>

#include "kconn/comm_graph.hpp"

namespace kconn {

// How to decide k-vertex-connectivity. Auto picks the cheapest correct
// strategy for the given k: a single traversal for k = 1, articulation
// search for k = 2, one-vertex-removal reduction for k = 3, and the global
// max-flow test for k >= 4.
enum class ConnectivityMethod {
    Auto,
    DfsSpecialized,           // k <= 2 only
    VertexRemovalReduction,   // k >= 2
    MaxFlow,
    BruteForce,               // n <= 16 only
};

bool is_connected(const CommGraph& graph);

// Connected, at least 3 vertices, and no articulation vertex.
bool is_biconnected(const CommGraph& graph);

// Size of a minimum s-t vertex cut for non-adjacent s, t (equivalently, the
// number of internally vertex-disjoint s-t paths).
int min_vertex_cut(const CommGraph& graph, int s, int t);

// True iff the graph has more than k vertices and stays connected after the
// removal of any k-1 of them.
bool is_k_connected(const CommGraph& graph, int k,
                    ConnectivityMethod method = ConnectivityMethod::Auto);

// Certificate form of the test: some pair with fewer than k internally
// disjoint paths when the graph is not k-connected, nothing otherwise. A
// returned pair stays cheap to re-check (one bounded max-flow), which lets
// incremental callers avoid repeating the full scan. Requires n > k.
std::optional<std::pair<int, int>> k_deficient_pair(const CommGraph& graph, int k);

// Definition-level oracle: enumerates every (k-1)-subset removal. Guarded to
// n <= 16.
bool brute_force_k_connected(const CommGraph& graph, int k);

// Largest k for which the graph is k-connected (0 when disconnected).
int vertex_connectivity(const CommGraph& graph);

}  // namespace kconn
