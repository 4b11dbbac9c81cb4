#include "kconn/relocation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "kconn/connectivity.hpp"
#include "kconn/errors.hpp"

namespace kconn {

namespace {

// Slack below which an edge counts as intact during repairs. Much tighter
// than kDistEps so repaired edges stay well inside the radius predicate.
constexpr double kRepairTol = 1e-12;

void pull_toward(std::vector<Vec3>& pts, int v, int target, double amount) {
    const Vec3 dir = pts[target] - pts[v];
    const double len = norm(dir);
    pts[v] += dir * (amount / len);
}

}  // namespace

RelocateStats relocate(std::vector<Vec3>& positions, double h, const CommGraph& graph, int i,
                       int j, double d) {
    const int n = graph.num_vertices();
    if (static_cast<int>(positions.size()) != n)
        throw std::invalid_argument("relocate: positions/graph size mismatch");
    if (i < 0 || i >= n || j < 0 || j >= n) throw std::out_of_range("relocate: vertex out of range");
    if (i == j) throw std::invalid_argument("relocate: i == j");
    if (d < 0) throw std::invalid_argument("relocate: negative distance");

    const Vec3 dir = positions[j] - positions[i];
    const double len = norm(dir);
    if (len == 0.0)
        throw DegenerateDirection("relocate: robots " + std::to_string(i) + " and " +
                                  std::to_string(j) + " coincide");

    RelocateStats stats;
    const BfsTree tree = bfs(graph, i);
    positions[i] += dir * (d / len);

    for (std::size_t idx = 1; idx < tree.order.size(); ++idx) {
        const int v = tree.order[idx];
        const int p = tree.parent[v];
        const double slack = distance(positions[v], positions[p]) - h;
        if (slack > 0) {
            pull_toward(positions, v, p, slack);
            ++stats.parent_moves;
        }
    }

    // The cascade above only repairs BFS-tree edges; an edge between two
    // vertices that both moved can still end up overstretched. Sweep all
    // edges, pulling the later-visited endpoint toward the earlier one (the
    // anchor i never moves), until everything fits again.
    std::vector<int> visit_pos(n, -1);
    for (std::size_t idx = 0; idx < tree.order.size(); ++idx) visit_pos[tree.order[idx]] = static_cast<int>(idx);

    int passes = 0;
    while (true) {
        bool moved = false;
        for (std::size_t idx = 1; idx < tree.order.size(); ++idx) {
            const int v = tree.order[idx];
            for (int u = 0; u < n; ++u) {
                if (!graph.edge(v, u)) continue;
                if (visit_pos[u] < 0 || visit_pos[u] >= visit_pos[v]) continue;
                const double slack = distance(positions[v], positions[u]) - h;
                if (slack > kRepairTol) {
                    pull_toward(positions, v, u, slack);
                    moved = true;
                    ++stats.safety_moves;
                }
            }
        }
        if (!moved) break;
        if (++passes > n)
            throw Error("relocate: could not restore all edges within the pass budget");
    }
    stats.safety_passes = passes;
    return stats;
}

RestorationPlan scr(const Instance& instance, const AugmentationSet& aug) {
    instance.validate();
    const double h = instance.h;
    std::vector<Vec3> pts = instance.positions;
    CommGraph preserved = build_comm_graph(instance);

    std::vector<WeightedNonEdge> ordered = aug.edges;
    std::sort(ordered.begin(), ordered.end(),
              [](const WeightedNonEdge& a, const WeightedNonEdge& b) {
                  if (a.w != b.w) return a.w < b.w;
                  if (a.i != b.i) return a.i < b.i;
                  return a.j < b.j;
              });

    PlanStats stats;
    for (const WeightedNonEdge& e : ordered) {
        if (e.i < 0 || e.i >= instance.n() || e.j < 0 || e.j >= instance.n() || e.i == e.j)
            throw std::invalid_argument("scr: augmentation edge references invalid robots");
        int rounds = 0;
        while (true) {
            const double d = distance(pts[e.i], pts[e.j]) - h;
            if (d <= kRepairTol) break;  // already inside the radius
            const RelocateStats a = relocate(pts, h, preserved, e.i, e.j, d / 2);
            const RelocateStats b = relocate(pts, h, preserved, e.j, e.i, d / 2);
            stats.relocate_calls += 2;
            stats.parent_moves += a.parent_moves + b.parent_moves;
            stats.safety_passes += a.safety_passes + b.safety_passes;
            stats.safety_moves += a.safety_moves + b.safety_moves;
            // Cascades may drag an endpoint, leaving the pair slightly
            // apart; re-split the residual. One round suffices when the
            // endpoints' surroundings stay put.
            if (++rounds > instance.n())
                throw Error("scr: could not establish edge (" + std::to_string(e.i) + "," +
                            std::to_string(e.j) + ")");
        }
        stats.residual_rounds += std::max(0, rounds - 1);
        // Later cascades must not break this edge either, so it joins the
        // preserved graph from now on.
        preserved.add_edge(e.i, e.j);
    }
    return finalize_plan(instance, std::move(pts), stats);
}

RestorationPlan finalize_plan(const Instance& instance, std::vector<Vec3> final_positions,
                              PlanStats stats) {
    if (final_positions.size() != instance.positions.size())
        throw std::invalid_argument("finalize_plan: position count mismatch");
    RestorationPlan plan;
    plan.original = instance;
    plan.final_positions = std::move(final_positions);
    plan.per_robot.resize(plan.final_positions.size());
    for (std::size_t i = 0; i < plan.final_positions.size(); ++i) {
        plan.per_robot[i] = distance(plan.final_positions[i], instance.positions[i]);
        plan.minmax = std::max(plan.minmax, plan.per_robot[i]);
        plan.total += plan.per_robot[i];
    }
    plan.stats = stats;
    return plan;
}

PlanReport verify_plan(const Instance& instance, const RestorationPlan& plan,
                       const AugmentationSet& aug, int k, bool check_edge_retention) {
    PlanReport report;
    auto fail = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

    instance.validate();
    if (plan.final_positions.size() != instance.positions.size()) {
        fail("final position count does not match the instance");
        return report;
    }
    if (plan.per_robot.size() != plan.final_positions.size())
        fail("per-robot displacement count does not match");

    const double reach = instance.h + kDistEps;
    if (check_edge_retention) {
        const CommGraph g0 = build_comm_graph(instance);
        for (const auto& [i, j] : g0.edges()) {
            if (distance(plan.final_positions[i], plan.final_positions[j]) > reach)
                fail("original edge (" + std::to_string(i) + "," + std::to_string(j) +
                     ") no longer holds");
        }
        for (const WeightedNonEdge& e : aug.edges) {
            if (e.i < 0 || e.i >= instance.n() || e.j < 0 || e.j >= instance.n() || e.i == e.j) {
                fail("augmentation edge (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                     ") references invalid robots");
                continue;
            }
            if (distance(plan.final_positions[e.i], plan.final_positions[e.j]) > reach)
                fail("augmentation edge (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                     ") was not established");
        }
    }

    Instance moved = instance;
    moved.positions = plan.final_positions;
    if (!is_k_connected(build_comm_graph(moved), k))
        fail("final graph is not " + std::to_string(k) + "-connected");

    if (plan.per_robot.size() == plan.final_positions.size()) {
        double minmax = 0.0, total = 0.0;
        for (std::size_t i = 0; i < plan.final_positions.size(); ++i) {
            const double d = distance(plan.final_positions[i], instance.positions[i]);
            if (std::abs(d - plan.per_robot[i]) > 1e-9)
                fail("per-robot displacement of robot " + std::to_string(i) + " is inconsistent");
            minmax = std::max(minmax, d);
            total += d;
        }
        if (std::abs(minmax - plan.minmax) > 1e-9) fail("minmax metric is inconsistent");
        if (std::abs(total - plan.total) > 1e-9) fail("total metric is inconsistent");
    }
    return report;
}

}  // namespace kconn
