#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kconn/geometry.hpp"

namespace kconn {

// Undirected simple graph over vertices 0..n-1, dense adjacency storage.
// Team sizes stay in the hundreds, so the n^2 matrix is the simplest
// representation that supports the add/remove churn of edge augmentation.
class CommGraph {
  public:
    explicit CommGraph(int n);

    int num_vertices() const { return n_; }
    int num_edges() const { return m_; }

    bool edge(int i, int j) const { return adj_[static_cast<std::size_t>(i) * n_ + j] != 0; }
    void add_edge(int i, int j);
    void remove_edge(int i, int j);

    // Neighbors in ascending vertex order.
    std::vector<int> neighbors(int v) const;
    int degree(int v) const { return degree_[v]; }
    int min_degree() const;

    // All edges as (i, j) with i < j, lexicographically ordered.
    std::vector<std::pair<int, int>> edges() const;

  private:
    void check_pair(int i, int j) const;

    int n_;
    int m_ = 0;
    std::vector<std::uint8_t> adj_;
    std::vector<int> degree_;
};

// Edge (i, j) present iff the robots are within distance h (plus kDistEps).
CommGraph build_comm_graph(const Instance& instance);

struct BfsTree {
    int root = 0;
    std::vector<int> dist;    // hop count; -1 when unreachable
    std::vector<int> parent;  // -1 for the root and unreachable vertices
    std::vector<int> order;   // visit order, order[0] == root
};

// Neighbor expansion in ascending vertex order, so the traversal (and
// everything derived from it) is deterministic.
BfsTree bfs(const CommGraph& graph, int root);

struct WeightedNonEdge {
    int i = 0;
    int j = 0;  // i < j
    double w = 0.0;

    bool operator==(const WeightedNonEdge&) const = default;
};

// All non-adjacent pairs sorted by (weight, i, j).
std::vector<WeightedNonEdge> complement_edges(const Instance& instance, const CommGraph& graph);

}  // namespace kconn
