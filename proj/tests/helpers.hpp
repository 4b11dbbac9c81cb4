#pragma once

#include <utility>
#include <vector>

#include "kconn/bench.hpp"
#include "kconn/comm_graph.hpp"
#include "kconn/geometry.hpp"
#include "kconn/rng.hpp"

namespace kconn::test {

inline Instance make_instance(std::vector<Vec3> pts, double h, int dim = 2) {
    Instance inst;
    inst.dim = dim;
    inst.h = h;
    inst.positions = std::move(pts);
    return inst;
}

inline CommGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    CommGraph g(n);
    for (const auto& [i, j] : edges) g.add_edge(i, j);
    return g;
}

// Erdos-Renyi style random graph for connectivity stress tests.
inline CommGraph random_graph(int n, double p, Rng& rng) {
    CommGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform() < p) g.add_edge(i, j);
    return g;
}

// Connected uniform 2D instance at benchmark density.
inline Instance random_instance(int n, std::uint64_t seed, double h = 1.0) {
    GeneratorConfig cfg;
    cfg.kind = DatasetKind::Uniform;
    cfg.n = n;
    cfg.h = h;
    cfg.side = default_side(n, h);
    cfg.seed = seed;
    return generate_instance(cfg);
}

}  // namespace kconn::test
