#include "kconn/comm_graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace kconn {

CommGraph::CommGraph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph: needs at least one vertex");
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
    degree_.assign(n, 0);
}

void CommGraph::check_pair(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
        throw std::out_of_range("graph: vertex index out of range");
    if (i == j) throw std::invalid_argument("graph: self-loops are not allowed");
}

void CommGraph::add_edge(int i, int j) {
    check_pair(i, j);
    if (edge(i, j)) return;
    adj_[static_cast<std::size_t>(i) * n_ + j] = 1;
    adj_[static_cast<std::size_t>(j) * n_ + i] = 1;
    ++degree_[i];
    ++degree_[j];
    ++m_;
}

void CommGraph::remove_edge(int i, int j) {
    check_pair(i, j);
    if (!edge(i, j)) return;
    adj_[static_cast<std::size_t>(i) * n_ + j] = 0;
    adj_[static_cast<std::size_t>(j) * n_ + i] = 0;
    --degree_[i];
    --degree_[j];
    --m_;
}

std::vector<int> CommGraph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("graph: vertex index out of range");
    std::vector<int> out;
    const std::uint8_t* row = adj_.data() + static_cast<std::size_t>(v) * n_;
    for (int u = 0; u < n_; ++u)
        if (row[u]) out.push_back(u);
    return out;
}

int CommGraph::min_degree() const {
    int d = degree_[0];
    for (int v = 1; v < n_; ++v) d = std::min(d, degree_[v]);
    return d;
}

std::vector<std::pair<int, int>> CommGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (edge(i, j)) out.emplace_back(i, j);
    return out;
}

CommGraph build_comm_graph(const Instance& instance) {
    instance.validate();
    const int n = instance.n();
    CommGraph g(n);
    const double reach = instance.h + kDistEps;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (distance(instance.positions[i], instance.positions[j]) <= reach) g.add_edge(i, j);
    return g;
}

BfsTree bfs(const CommGraph& graph, int root) {
    const int n = graph.num_vertices();
    if (root < 0 || root >= n) throw std::out_of_range("bfs: root out of range");
    BfsTree t;
    t.root = root;
    t.dist.assign(n, -1);
    t.parent.assign(n, -1);
    t.order.reserve(n);
    std::queue<int> q;
    t.dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        t.order.push_back(v);
        for (int u = 0; u < n; ++u) {
            if (graph.edge(v, u) && t.dist[u] < 0) {
                t.dist[u] = t.dist[v] + 1;
                t.parent[u] = v;
                q.push(u);
            }
        }
    }
    return t;
}

std::vector<WeightedNonEdge> complement_edges(const Instance& instance, const CommGraph& graph) {
    if (instance.n() != graph.num_vertices())
        throw std::invalid_argument("complement_edges: instance/graph size mismatch");
    std::vector<WeightedNonEdge> out;
    const int n = instance.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!graph.edge(i, j))
                out.push_back({i, j, distance(instance.positions[i], instance.positions[j])});
    std::sort(out.begin(), out.end(), [](const WeightedNonEdge& a, const WeightedNonEdge& b) {
        if (a.w != b.w) return a.w < b.w;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
    return out;
}

}  // namespace kconn
