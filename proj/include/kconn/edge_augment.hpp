#pragma once

#include <string>
#include <vector>

#include "kconn/comm_graph.hpp"
#include "kconn/connectivity.hpp"

namespace kconn {

// Non-edges whose addition makes the communication graph k-connected. The
// set is minimal: dropping any member breaks k-connectivity again.
struct AugmentationSet {
    std::vector<WeightedNonEdge> edges;  // ascending (weight, i, j)
    double bottleneck = 0.0;             // max weight, 0 when empty
    int k = 1;
};

// Greedy augmentation: insert complement edges in ascending weight order
// until the graph is k-connected, then sweep the inserted edges in the same
// order and drop every one whose removal keeps k-connectivity.
// Throws Infeasible when n <= k.
AugmentationSet edge_augmentation(const Instance& instance, int k);

// Smallest radius t at which the graph on all pairs within distance t is
// k-connected; this is the bottleneck weight any optimal augmentation must
// pay. Reports h when the instance is already k-connected.
double bottleneck_threshold(const Instance& instance, int k);

struct AugmentationReport {
    bool achieves_k = false;
    bool minimal = false;
    double bottleneck = 0.0;
    double threshold = 0.0;
    bool bottleneck_optimal = false;  // bottleneck == threshold (or empty set)
    std::vector<std::string> violations;

    bool ok() const { return achieves_k && minimal; }
};

// Checks the AugmentationSet invariants against an instance and compares the
// bottleneck with the independent threshold value.
AugmentationReport verify_augmentation(const Instance& instance, int k,
                                       const AugmentationSet& aug);

}  // namespace kconn
