#pragma once

#include <vector>

#include "kconn/comm_graph.hpp"

namespace kconn {

// Minimal augmenting-path max-flow (BFS shortest paths). Capacities here are
// tiny integers, so this is plenty for team-scale graphs.
class FlowNetwork {
  public:
    explicit FlowNetwork(int nodes);

    // Adds u -> v with the given capacity plus the zero-capacity residual.
    void add_arc(int u, int v, int cap);

    // Pushes flow until no augmenting path remains or `limit` is reached.
    int max_flow(int s, int t, int limit);

    struct Arc {
        int to;
        int cap;  // residual capacity
    };

    int num_nodes() const { return static_cast<int>(out_.size()); }
    const std::vector<int>& arcs_from(int u) const { return out_[u]; }
    Arc& arc(int id) { return arcs_[id]; }
    const Arc& arc(int id) const { return arcs_[id]; }
    int initial_cap(int id) const { return init_cap_[id]; }

  private:
    std::vector<std::vector<int>> out_;  // per node: arc ids
    std::vector<Arc> arcs_;              // arc 2k and its reverse 2k+1
    std::vector<int> init_cap_;
};

// Maximum number of internally vertex-disjoint s-t paths (counting a direct
// s-t edge as one path), computed on the vertex-split digraph: every vertex
// other than s and t becomes in->out with capacity 1. Stops early once
// `limit` paths are found.
int max_disjoint_paths(const CommGraph& graph, int s, int t, int limit);

// Up to `want` internally vertex-disjoint s-t paths, each as a vertex
// sequence s..t. Returns fewer when fewer exist.
std::vector<std::vector<int>> disjoint_path_witness(const CommGraph& graph, int s, int t,
                                                    int want);

}  // namespace kconn
