#pragma once

#include <string>
#include <vector>

#include "kconn/edge_augment.hpp"
#include "kconn/geometry.hpp"

namespace kconn {

struct RelocateStats {
    int parent_moves = 0;   // vertices pulled back toward their BFS parent
    int safety_passes = 0;  // extra whole-graph repair sweeps
    int safety_moves = 0;
};

struct PlanStats {
    int relocate_calls = 0;
    int residual_rounds = 0;  // re-established edges whose endpoints drifted
    int parent_moves = 0;
    int safety_passes = 0;
    int safety_moves = 0;
};

// New positions for every robot plus the movement summary.
struct RestorationPlan {
    Instance original;
    std::vector<Vec3> final_positions;
    std::vector<double> per_robot;  // displacement of each robot
    double minmax = 0.0;
    double total = 0.0;
    PlanStats stats;  // diagnostics, not part of the serialized plan
};

// Moves robot i a distance d toward robot j, then repairs the edges of
// `graph` outward from i: every robot, in BFS order from i, is pulled
// minimally toward its BFS parent whenever that edge got overstretched.
// The cascade only repairs tree edges, so a final sweep re-checks all of
// them and runs extra passes until every edge of `graph` fits within h
// again (robots unreachable from i never move).
// Throws DegenerateDirection when robots i and j coincide.
RelocateStats relocate(std::vector<Vec3>& positions, double h, const CommGraph& graph, int i,
                       int j, double d);

// Establishes every augmentation edge by moving its endpoints toward each
// other by half the missing distance, cascading repairs so that already
// existing edges (and previously established augmentation edges) survive.
RestorationPlan scr(const Instance& instance, const AugmentationSet& aug);

struct PlanReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Checks a plan: original edges still hold (optional), augmentation edges
// hold, the final graph is k-connected, and the stored metrics match the
// positions. Baseline algorithms rebuild the topology rather than preserve
// it, so they are verified with check_edge_retention = false.
PlanReport verify_plan(const Instance& instance, const RestorationPlan& plan,
                       const AugmentationSet& aug, int k, bool check_edge_retention = true);

// Fills per-robot displacements and the minmax/total summary.
RestorationPlan finalize_plan(const Instance& instance, std::vector<Vec3> final_positions,
                              PlanStats stats = {});

}  // namespace kconn
