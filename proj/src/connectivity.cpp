#include "kconn/connectivity.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "kconn/max_flow.hpp"

namespace kconn {

namespace {

// BFS reachability over the vertices not flagged in `removed`.
bool connected_masked(const CommGraph& g, const std::vector<char>& removed) {
    const int n = g.num_vertices();
    int start = -1;
    int alive = 0;
    for (int v = 0; v < n; ++v) {
        if (!removed[v]) {
            ++alive;
            if (start < 0) start = v;
        }
    }
    if (alive <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> queue{start};
    seen[start] = 1;
    int reached = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const int v = queue[qi];
        for (int u = 0; u < n; ++u) {
            if (!seen[u] && !removed[u] && g.edge(v, u)) {
                seen[u] = 1;
                ++reached;
                queue.push_back(u);
            }
        }
    }
    return reached == alive;
}

// Articulation-vertex search (iterative lowpoint DFS), optionally ignoring
// one vertex. Returns true iff the surviving graph is biconnected.
bool biconnected_masked(const CommGraph& g, int skip) {
    const int n = g.num_vertices();
    const int alive = n - (skip >= 0 ? 1 : 0);
    if (alive < 3) return false;

    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), next(n, 0);
    int timer = 0;
    int root = (skip == 0) ? 1 : 0;
    int root_children = 0;

    std::vector<int> stack{root};
    disc[root] = low[root] = timer++;
    int visited = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        if (next[v] < n) {
            const int u = next[v]++;
            if (u == v || u == skip || !g.edge(v, u)) continue;
            if (disc[u] < 0) {
                parent[u] = v;
                disc[u] = low[u] = timer++;
                ++visited;
                if (v == root) ++root_children;
                stack.push_back(u);
            } else if (u != parent[v]) {
                low[v] = std::min(low[v], disc[u]);
            }
        } else {
            stack.pop_back();
            const int p = parent[v];
            if (p >= 0) {
                low[p] = std::min(low[p], low[v]);
                if (p != root && low[v] >= disc[p]) return false;  // articulation at p
            }
        }
    }
    if (visited != alive) return false;  // disconnected
    return root_children < 2;
}

// Global test via minimum vertex cuts, pivoting on vertex 0: check 0 against
// every non-neighbor, then every non-adjacent pair inside N(0). Any cutset of
// size < k either avoids the pivot (first family) or contains it, in which
// case a minimum cutset leaves two of the pivot's neighbors separated
// (second family).
bool k_connected_max_flow(const CommGraph& g, int k) {
    if (!is_connected(g)) return false;
    const int n = g.num_vertices();
    const int s = 0;
    // Probe low-degree targets first; a deficient graph usually fails there.
    std::vector<int> targets;
    for (int t = 1; t < n; ++t)
        if (!g.edge(s, t)) targets.push_back(t);
    std::sort(targets.begin(), targets.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
        return a < b;
    });
    for (int t : targets)
        if (max_disjoint_paths(g, s, t, k) < k) return false;
    const std::vector<int> nb = g.neighbors(s);
    for (std::size_t a = 0; a < nb.size(); ++a) {
        for (std::size_t b = a + 1; b < nb.size(); ++b) {
            if (g.edge(nb[a], nb[b])) continue;
            if (max_disjoint_paths(g, nb[a], nb[b], k) < k) return false;
        }
    }
    return true;
}

// k-connected iff every one-vertex removal leaves a (k-1)-connected graph.
bool k_connected_removal(const CommGraph& g, int k) {
    if (k == 1) return is_connected(g);
    if (k == 2) return is_biconnected(g);
    const int n = g.num_vertices();
    if (k == 3) {
        for (int v = 0; v < n; ++v)
            if (!biconnected_masked(g, v)) return false;
        return true;
    }
    for (int v = 0; v < n; ++v) {
        CommGraph sub(n - 1);
        for (int i = 0; i < n; ++i) {
            if (i == v) continue;
            for (int j = i + 1; j < n; ++j) {
                if (j == v || !g.edge(i, j)) continue;
                sub.add_edge(i - (i > v), j - (j > v));
            }
        }
        if (!k_connected_removal(sub, k - 1)) return false;
    }
    return true;
}

}  // namespace

bool is_connected(const CommGraph& graph) {
    return connected_masked(graph, std::vector<char>(graph.num_vertices(), 0));
}

bool is_biconnected(const CommGraph& graph) { return biconnected_masked(graph, -1); }

int min_vertex_cut(const CommGraph& graph, int s, int t) {
    const int n = graph.num_vertices();
    if (s < 0 || s >= n || t < 0 || t >= n)
        throw std::out_of_range("min_vertex_cut: vertex out of range");
    if (s == t) throw std::invalid_argument("min_vertex_cut: s == t");
    if (graph.edge(s, t))
        throw std::invalid_argument("min_vertex_cut: undefined for adjacent vertices");
    return max_disjoint_paths(graph, s, t, n);
}

bool is_k_connected(const CommGraph& graph, int k, ConnectivityMethod method) {
    if (k < 1) throw std::invalid_argument("is_k_connected: k must be >= 1");
    if (graph.num_vertices() <= k) return false;
    // A vertex of degree < k is cut off by removing its neighborhood
    // (n > k leaves somebody else behind), so this filter is exact.
    const bool degree_deficient = graph.min_degree() < k;
    switch (method) {
        case ConnectivityMethod::Auto:
            if (degree_deficient) return false;
            if (k == 1) return is_connected(graph);
            if (k == 2) return is_biconnected(graph);
            if (k == 3) return k_connected_removal(graph, 3);
            return k_connected_max_flow(graph, k);
        case ConnectivityMethod::DfsSpecialized:
            if (k > 2)
                throw std::invalid_argument("is_k_connected: DfsSpecialized supports k <= 2");
            return k == 1 ? is_connected(graph) : is_biconnected(graph);
        case ConnectivityMethod::VertexRemovalReduction:
            if (k < 2)
                throw std::invalid_argument(
                    "is_k_connected: VertexRemovalReduction supports k >= 2");
            if (degree_deficient) return false;
            return k_connected_removal(graph, k);
        case ConnectivityMethod::MaxFlow:
            if (degree_deficient) return false;
            if (k == 1) return is_connected(graph);
            return k_connected_max_flow(graph, k);
        case ConnectivityMethod::BruteForce:
            return brute_force_k_connected(graph, k);
    }
    throw std::invalid_argument("is_k_connected: unknown method");
}

std::optional<std::pair<int, int>> k_deficient_pair(const CommGraph& graph, int k) {
    if (k < 1) throw std::invalid_argument("k_deficient_pair: k must be >= 1");
    const int n = graph.num_vertices();
    if (n <= k) throw std::invalid_argument("k_deficient_pair: needs n > k");

    // Degree-deficient vertex: its whole neighborhood is a small cut, and
    // any non-neighbor certifies it.
    for (int v = 0; v < n; ++v) {
        if (graph.degree(v) < k) {
            for (int u = 0; u < n; ++u)
                if (u != v && !graph.edge(v, u)) return std::make_pair(v, u);
        }
    }

    const BfsTree tree = bfs(graph, 0);
    for (int v = 0; v < n; ++v)
        if (tree.dist[v] < 0) return std::make_pair(0, v);
    if (k == 1) return std::nullopt;

    const int s = 0;
    std::vector<int> targets;
    for (int t = 1; t < n; ++t)
        if (!graph.edge(s, t)) targets.push_back(t);
    std::sort(targets.begin(), targets.end(), [&](int a, int b) {
        if (graph.degree(a) != graph.degree(b)) return graph.degree(a) < graph.degree(b);
        return a < b;
    });
    for (int t : targets)
        if (max_disjoint_paths(graph, s, t, k) < k) return std::make_pair(s, t);
    const std::vector<int> nb = graph.neighbors(s);
    for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = a + 1; b < nb.size(); ++b) {
            if (graph.edge(nb[a], nb[b])) continue;
            if (max_disjoint_paths(graph, nb[a], nb[b], k) < k)
                return std::make_pair(nb[a], nb[b]);
        }
    return std::nullopt;
}

bool brute_force_k_connected(const CommGraph& graph, int k) {
    if (k < 1) throw std::invalid_argument("brute_force_k_connected: k must be >= 1");
    const int n = graph.num_vertices();
    if (n > 16) throw std::invalid_argument("brute_force_k_connected: n > 16");
    if (n <= k) return false;

    std::vector<char> removed(n, 0);
    std::vector<int> chosen;
    // Enumerate all (k-1)-subsets; fail on the first disconnecting one.
    auto recurse = [&](auto&& self, int start, int remaining) -> bool {
        if (remaining == 0) return connected_masked(graph, removed);
        for (int v = start; v <= n - remaining; ++v) {
            removed[v] = 1;
            const bool ok = self(self, v + 1, remaining - 1);
            removed[v] = 0;
            if (!ok) return false;
        }
        return true;
    };
    return recurse(recurse, 0, k - 1);
}

int vertex_connectivity(const CommGraph& graph) {
    const int n = graph.num_vertices();
    if (n < 2) throw std::invalid_argument("vertex_connectivity: needs at least 2 vertices");
    if (!is_connected(graph)) return 0;
    int lo = 1, hi = n - 1;  // connected, so at least 1; at most n-1
    while (lo < hi) {
        const int mid = (lo + hi + 1) / 2;
        if (is_k_connected(graph, mid)) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

}  // namespace kconn
