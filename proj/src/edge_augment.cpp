#include "kconn/edge_augment.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kconn/errors.hpp"
#include "kconn/max_flow.hpp"

namespace kconn {

namespace {

void require_feasible(const Instance& instance, int k, const char* who) {
    if (k < 1) throw std::invalid_argument(std::string(who) + ": k must be >= 1");
    if (instance.n() <= k)
        throw Infeasible(std::string(who) + ": k-connectivity needs at least k+1 robots (n=" +
                         std::to_string(instance.n()) + ", k=" + std::to_string(k) + ")");
}

}  // namespace

AugmentationSet edge_augmentation(const Instance& instance, int k) {
    instance.validate();
    require_feasible(instance, k, "edge_augmentation");

    CommGraph g = build_comm_graph(instance);
    AugmentationSet result;
    result.k = k;
    if (is_k_connected(g, k)) return result;

    const std::vector<WeightedNonEdge> candidates = complement_edges(instance, g);
    std::size_t count = 0;
    // Insertion loop with a cached deficiency certificate: while the last
    // deficient pair still lacks k disjoint paths the graph cannot be
    // k-connected, so the full scan only reruns once that pair is fixed.
    // n > k guarantees the complete graph is k-connected, so the sorted
    // candidate list cannot run out before the loop exits.
    std::optional<std::pair<int, int>> witness;
    while (true) {
        if (!witness || max_disjoint_paths(g, witness->first, witness->second, k) >= k) {
            witness = k_deficient_pair(g, k);
            if (!witness) break;
        }
        if (count >= candidates.size())
            throw std::logic_error("edge_augmentation: ran out of candidate edges");
        const WeightedNonEdge& e = candidates[count++];
        g.add_edge(e.i, e.j);
    }

    // The graph stays k-connected throughout this sweep, so dropping (u,v)
    // keeps it k-connected iff u and v retain k internally disjoint paths:
    // any smaller cutset of the reduced graph must separate u from v, or it
    // would already have cut the full graph. One max-flow per candidate
    // instead of a global test.
    for (std::size_t i = 0; i < count; ++i) {
        const WeightedNonEdge& e = candidates[i];
        g.remove_edge(e.i, e.j);
        const bool still_k =
            g.min_degree() >= k && max_disjoint_paths(g, e.i, e.j, k) >= k;
        if (!still_k) {
            g.add_edge(e.i, e.j);
            result.edges.push_back(e);
        }
    }
    for (const WeightedNonEdge& e : result.edges)
        result.bottleneck = std::max(result.bottleneck, e.w);
    return result;
}

double bottleneck_threshold(const Instance& instance, int k) {
    instance.validate();
    require_feasible(instance, k, "bottleneck_threshold");

    const int n = instance.n();
    auto graph_at = [&](double t) {
        CommGraph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (distance(instance.positions[i], instance.positions[j]) <= t + kDistEps)
                    g.add_edge(i, j);
        return g;
    };

    if (is_k_connected(graph_at(instance.h), k)) return instance.h;

    std::vector<double> dists;
    dists.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            dists.push_back(distance(instance.positions[i], instance.positions[j]));
    std::sort(dists.begin(), dists.end());
    dists.erase(std::unique(dists.begin(), dists.end()), dists.end());

    // Monotone in t; the answer is one of the pairwise distances.
    std::size_t lo = 0, hi = dists.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (is_k_connected(graph_at(dists[mid]), k)) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return dists[lo];
}

AugmentationReport verify_augmentation(const Instance& instance, int k,
                                       const AugmentationSet& aug) {
    instance.validate();
    AugmentationReport report;

    CommGraph g = build_comm_graph(instance);
    for (const WeightedNonEdge& e : aug.edges) {
        if (g.edge(e.i, e.j))
            report.violations.push_back("edge (" + std::to_string(e.i) + "," +
                                        std::to_string(e.j) + ") already present in G(X)");
        g.add_edge(e.i, e.j);
    }

    report.achieves_k = is_k_connected(g, k);
    if (!report.achieves_k)
        report.violations.push_back("augmented graph is not " + std::to_string(k) +
                                    "-connected");

    report.minimal = true;
    for (const WeightedNonEdge& e : aug.edges) {
        g.remove_edge(e.i, e.j);
        if (is_k_connected(g, k)) {
            report.minimal = false;
            report.violations.push_back("edge (" + std::to_string(e.i) + "," +
                                        std::to_string(e.j) + ") is redundant");
        }
        g.add_edge(e.i, e.j);
    }

    for (const WeightedNonEdge& e : aug.edges)
        report.bottleneck = std::max(report.bottleneck, e.w);
    report.threshold = bottleneck_threshold(instance, k);
    report.bottleneck_optimal =
        aug.edges.empty() || std::abs(report.bottleneck - report.threshold) <= kDistEps;
    if (!aug.edges.empty() && report.bottleneck > report.threshold + kDistEps)
        report.violations.push_back("bottleneck exceeds the threshold certificate");
    return report;
}

}  // namespace kconn
