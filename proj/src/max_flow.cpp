#include "kconn/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace kconn {

FlowNetwork::FlowNetwork(int nodes) { out_.assign(nodes, {}); }

void FlowNetwork::add_arc(int u, int v, int cap) {
    out_[u].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({v, cap});
    init_cap_.push_back(cap);
    out_[v].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({u, 0});
    init_cap_.push_back(0);
}

int FlowNetwork::max_flow(int s, int t, int limit) {
    int flow = 0;
    std::vector<int> in_arc(out_.size());
    std::vector<int> queue;
    queue.reserve(out_.size());
    while (flow < limit) {
        std::fill(in_arc.begin(), in_arc.end(), -1);
        in_arc[s] = -2;
        queue.clear();
        queue.push_back(s);
        bool reached = false;
        for (std::size_t qi = 0; qi < queue.size() && !reached; ++qi) {
            const int v = queue[qi];
            for (int id : out_[v]) {
                const Arc& a = arcs_[id];
                if (a.cap > 0 && in_arc[a.to] == -1) {
                    in_arc[a.to] = id;
                    if (a.to == t) {
                        reached = true;
                        break;
                    }
                    queue.push_back(a.to);
                }
            }
        }
        if (!reached) break;
        int push = std::numeric_limits<int>::max();
        for (int v = t; v != s; v = arcs_[in_arc[v] ^ 1].to)
            push = std::min(push, arcs_[in_arc[v]].cap);
        push = std::min(push, limit - flow);
        for (int v = t; v != s; v = arcs_[in_arc[v] ^ 1].to) {
            arcs_[in_arc[v]].cap -= push;
            arcs_[in_arc[v] ^ 1].cap += push;
        }
        flow += push;
    }
    return flow;
}

namespace {

// in-node = 2v, out-node = 2v+1; source is out(s), sink is in(t).
FlowNetwork split_network(const CommGraph& g, int s, int t, int edge_cap) {
    const int n = g.num_vertices();
    FlowNetwork net(2 * n);
    for (int v = 0; v < n; ++v)
        if (v != s && v != t) net.add_arc(2 * v, 2 * v + 1, 1);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.edge(u, v)) {
                net.add_arc(2 * u + 1, 2 * v, edge_cap);
                net.add_arc(2 * v + 1, 2 * u, edge_cap);
            }
    return net;
}

void check_st(const CommGraph& g, int s, int t) {
    const int n = g.num_vertices();
    if (s < 0 || s >= n || t < 0 || t >= n)
        throw std::out_of_range("disjoint paths: vertex out of range");
    if (s == t) throw std::invalid_argument("disjoint paths: s == t");
}

}  // namespace

int max_disjoint_paths(const CommGraph& graph, int s, int t, int limit) {
    check_st(graph, s, t);
    // Unit edge capacities: internally disjoint paths never share an edge,
    // and this keeps a direct s-t edge usable by exactly one path.
    FlowNetwork net = split_network(graph, s, t, 1);
    return net.max_flow(2 * s + 1, 2 * t, limit);
}

std::vector<std::vector<int>> disjoint_path_witness(const CommGraph& graph, int s, int t,
                                                    int want) {
    check_st(graph, s, t);
    FlowNetwork net = split_network(graph, s, t, 1);
    const int src = 2 * s + 1;
    const int snk = 2 * t;
    const int flow = net.max_flow(src, snk, want);

    // Walk flow-carrying arcs from the source, consuming each as we go.
    // Unit vertex capacities make every walk a simple path ending at t.
    auto take_flow_arc = [&](int node) -> int {
        for (int id : net.arcs_from(node)) {
            if (net.initial_cap(id) > 0 && net.arc(id).cap < net.initial_cap(id)) {
                net.arc(id).cap += 1;  // consume one unit
                net.arc(id ^ 1).cap -= 1;
                return net.arc(id).to;
            }
        }
        throw std::logic_error("disjoint_path_witness: flow walk got stuck");
    };

    std::vector<std::vector<int>> paths;
    paths.reserve(flow);
    for (int p = 0; p < flow; ++p) {
        std::vector<int> path{s};
        int node = src;
        while (true) {
            node = take_flow_arc(node);
            if (node == snk) {
                path.push_back(t);
                break;
            }
            // Arrived at some v_in; record v and pass through its unit arc.
            path.push_back(node / 2);
            node = take_flow_arc(node);
        }
        paths.push_back(std::move(path));
    }
    return paths;
}

}  // namespace kconn
