#include "kconn/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#include "kconn/connectivity.hpp"
#include "kconn/errors.hpp"

namespace kconn {

bool BlockCutTree::is_cut(int v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

BlockCutTree block_cut_tree(const CommGraph& graph) {
    if (!is_connected(graph))
        throw std::invalid_argument("block_cut_tree: graph must be connected");
    const int n = graph.num_vertices();

    BlockCutTree bct;
    if (n == 1) return bct;  // no edges, no blocks

    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), next(n, 0);
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<char> cut(n, 0);
    int timer = 0;
    int root_children = 0;

    // Pops every edge pushed after (p, v), inclusive; those edges form one
    // block.
    auto pop_block = [&](int p, int v) {
        std::set<int> verts;
        while (!edge_stack.empty()) {
            const auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            verts.insert(a);
            verts.insert(b);
            if (a == p && b == v) break;
        }
        bct.blocks.emplace_back(verts.begin(), verts.end());
    };

    std::vector<int> stack{0};
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        const int v = stack.back();
        if (next[v] < n) {
            const int u = next[v]++;
            if (u == v || !graph.edge(v, u)) continue;
            if (disc[u] < 0) {
                edge_stack.emplace_back(v, u);
                parent[u] = v;
                disc[u] = low[u] = timer++;
                if (v == 0) ++root_children;
                stack.push_back(u);
            } else if (u != parent[v] && disc[u] < disc[v]) {
                edge_stack.emplace_back(v, u);
                low[v] = std::min(low[v], disc[u]);
            }
        } else {
            stack.pop_back();
            const int p = parent[v];
            if (p >= 0) {
                low[p] = std::min(low[p], low[v]);
                if (low[v] >= disc[p]) {
                    if (p != 0 || root_children > 1) cut[p] = 1;
                    pop_block(p, v);
                }
            }
        }
    }

    // Root with one child is not a cut vertex; its flag was handled above.
    for (int v = 0; v < n; ++v)
        if (cut[v]) bct.cut_vertices.push_back(v);

    for (auto& b : bct.blocks) std::sort(b.begin(), b.end());
    std::sort(bct.blocks.begin(), bct.blocks.end());

    bct.block_cuts.resize(bct.blocks.size());
    bct.cut_blocks.resize(bct.cut_vertices.size());
    for (std::size_t b = 0; b < bct.blocks.size(); ++b) {
        for (int v : bct.blocks[b]) {
            const auto it =
                std::lower_bound(bct.cut_vertices.begin(), bct.cut_vertices.end(), v);
            if (it != bct.cut_vertices.end() && *it == v) {
                bct.block_cuts[b].push_back(v);
                bct.cut_blocks[it - bct.cut_vertices.begin()].push_back(static_cast<int>(b));
            }
        }
    }
    return bct;
}

namespace {

// Smallest slide along [from, from + len*u] after which at least `want` of
// the placed points are within h. Interval sweep over the per-point
// quadratics; returns nothing when no point on the segment qualifies.
std::optional<double> min_slide_with_cover(const Vec3& from, const Vec3& u, double len,
                                           const std::vector<Vec3>& placed, double h, int want) {
    struct Interval {
        double lo, hi;
    };
    std::vector<Interval> intervals;
    for (const Vec3& p : placed) {
        const Vec3 rel = from - p;
        const double beta = dot(u, rel);
        const double gamma = dot(rel, rel) - h * h;
        const double disc = beta * beta - gamma;
        if (disc < 0) continue;
        const double root = std::sqrt(disc);
        const double lo = std::max(0.0, -beta - root);
        const double hi = std::min(len, -beta + root);
        if (lo <= hi + 1e-12) intervals.push_back({lo, hi});
    }
    if (static_cast<int>(intervals.size()) < want) return std::nullopt;

    std::vector<double> candidates{0.0};
    for (const Interval& iv : intervals) candidates.push_back(iv.lo);
    std::sort(candidates.begin(), candidates.end());
    for (double t : candidates) {
        int cover = 0;
        for (const Interval& iv : intervals)
            if (iv.lo - 1e-12 <= t && t <= iv.hi + 1e-12) ++cover;
        if (cover >= want) return t;
    }
    return std::nullopt;
}

}  // namespace

RestorationPlan net_builder(const Instance& instance, int k) {
    instance.validate();
    if (k < 1) throw std::invalid_argument("net_builder: k must be >= 1");
    const int n = instance.n();
    if (n <= k)
        throw Infeasible("net_builder: needs at least k+1 robots (n=" + std::to_string(n) +
                         ", k=" + std::to_string(k) + ")");

    std::vector<Vec3> pts = instance.positions;
    const Vec3 center = centroid(pts);
    const double h = instance.h;

    std::vector<int> by_center_dist(n);
    std::iota(by_center_dist.begin(), by_center_dist.end(), 0);
    std::stable_sort(by_center_dist.begin(), by_center_dist.end(), [&](int a, int b) {
        return distance(pts[a], center) < distance(pts[b], center);
    });

    // Phase 1: scale the k+1 robots nearest the centroid toward it until all
    // pairwise distances fit within h.
    const std::vector<int> clique(by_center_dist.begin(), by_center_dist.begin() + k + 1);
    double max_pair = 0.0;
    for (std::size_t a = 0; a < clique.size(); ++a)
        for (std::size_t b = a + 1; b < clique.size(); ++b)
            max_pair = std::max(max_pair, distance(pts[clique[a]], pts[clique[b]]));
    const double ratio = max_pair > h ? h / max_pair : 1.0;
    for (int v : clique) pts[v] = center + (pts[v] - center) * ratio;

    // Anchor for the fallback slide: any clique member works, since the
    // whole clique sits within h of each of them.
    int anchor = clique[0];
    for (int v : clique)
        if (distance(pts[v], center) < distance(pts[anchor], center)) anchor = v;

    std::vector<Vec3> placed;
    placed.reserve(n);
    for (int v : clique) placed.push_back(pts[v]);

    // Phase 2: remaining robots join nearest-first, sliding toward the
    // centroid until k placed robots are in range.
    for (int idx = k + 1; idx < n; ++idx) {
        const int r = by_center_dist[idx];
        bool done = false;
        {
            const Vec3 dir = center - pts[r];
            const double len = norm(dir);
            if (len > 0) {
                const Vec3 u = dir * (1.0 / len);
                if (const auto t = min_slide_with_cover(pts[r], u, len, placed, h, k)) {
                    pts[r] += u * *t;
                    done = true;
                }
            } else if (min_slide_with_cover(pts[r], {1, 0, 0}, 0.0, placed, h, k)) {
                done = true;  // already at the centroid with enough neighbors
            }
        }
        if (!done) {
            // No point on the centroid ray works; slide toward the clique
            // anchor instead, which always succeeds by the clique property.
            const Vec3 dir = pts[anchor] - pts[r];
            const double len = norm(dir);
            const Vec3 u = len > 0 ? dir * (1.0 / len) : Vec3{1, 0, 0};
            const auto t = min_slide_with_cover(pts[r], u, len, placed, h, k);
            if (!t) throw Error("net_builder: could not attach robot " + std::to_string(r));
            pts[r] += u * *t;
        }
        placed.push_back(pts[r]);
    }

    Instance moved = instance;
    moved.positions = pts;
    if (!is_k_connected(build_comm_graph(moved), k))
        throw Error("net_builder: result failed the k-connectivity check");
    return finalize_plan(instance, std::move(pts));
}

RestorationPlan block_translation(const Instance& instance) {
    instance.validate();
    const int n = instance.n();
    if (n < 3) throw Infeasible("block_translation: 2-connectivity needs at least 3 robots");
    const double h = instance.h;

    std::vector<Vec3> pts = instance.positions;
    {
        const CommGraph g0 = build_comm_graph(instance);
        if (!is_connected(g0))
            throw Infeasible("block_translation: communication graph must be connected");
    }

    Instance work = instance;
    const int max_iters = 4 * n + 8;
    std::size_t prev_blocks = std::numeric_limits<std::size_t>::max();
    for (int iter = 0;; ++iter) {
        work.positions = pts;
        const CommGraph g = build_comm_graph(work);
        if (is_biconnected(g)) break;
        if (iter >= max_iters)
            throw Error("block_translation: exceeded the iteration budget");

        const BlockCutTree bct = block_cut_tree(g);
        if (bct.blocks.size() >= prev_blocks)
            std::cerr << "block_translation: block count did not decrease (n=" << n
                      << ", iter=" << iter << ", blocks=" << bct.blocks.size() << ")\n";
        prev_blocks = bct.blocks.size();

        // First leaf block in sorted order (blocks are sorted by their
        // smallest vertex already).
        int leaf = -1;
        for (std::size_t b = 0; b < bct.blocks.size(); ++b) {
            if (bct.block_cuts[b].size() == 1) {
                leaf = static_cast<int>(b);
                break;
            }
        }
        if (leaf < 0) throw Error("block_translation: no leaf block found");
        const int cut = bct.block_cuts[leaf][0];

        std::vector<int> movers;
        std::vector<char> in_block(n, 0);
        for (int v : bct.blocks[leaf]) in_block[v] = 1;
        for (int v : bct.blocks[leaf])
            if (v != cut) movers.push_back(v);
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (!in_block[v]) rest.push_back(v);

        std::vector<Vec3> mover_pts;
        for (int v : movers) mover_pts.push_back(pts[v]);
        Vec3 dir = pts[cut] - centroid(mover_pts);
        double len = norm(dir);

        // First contact of the rigidly translated block with the rest of
        // the graph along direction u.
        auto first_contact = [&](const Vec3& u) -> std::optional<double> {
            std::optional<double> best;
            for (int a : movers) {
                for (int b : rest) {
                    const Vec3 rel = pts[a] - pts[b];
                    const double beta = dot(u, rel);
                    const double gamma = dot(rel, rel) - h * h;
                    const double disc = beta * beta - gamma;
                    if (disc < 0 || beta >= 0) continue;  // never reaches / moving away
                    const double t = -beta - std::sqrt(disc);
                    if (t > 0 && (!best || t < *best)) best = t;
                }
            }
            return best;
        };

        Vec3 u = len > 0 ? dir * (1.0 / len) : Vec3{0, 0, 0};
        std::optional<double> t = len > 0 ? first_contact(u) : std::nullopt;
        if (!t) {
            // The cut-vertex ray never meets the rest; aim the closest
            // block/rest pair at each other instead.
            double best = std::numeric_limits<double>::infinity();
            int ba = movers[0], bb = rest[0];
            for (int a : movers)
                for (int b : rest) {
                    const double d = distance(pts[a], pts[b]);
                    if (d < best) {
                        best = d;
                        ba = a;
                        bb = b;
                    }
                }
            u = (pts[bb] - pts[ba]) * (1.0 / best);
            t = first_contact(u);
            if (!t) throw Error("block_translation: no feasible translation found");
        }
        for (int v : movers) pts[v] += u * *t;
    }
    return finalize_plan(instance, std::move(pts));
}

}  // namespace kconn
