#pragma once

#include <array>
#include <string>
#include <vector>

#include "kconn/geometry.hpp"

namespace kconn {

enum class VarKind { Continuous, Binary };

struct QcpVariable {
    std::string name;
    VarKind kind = VarKind::Continuous;
    double lo = 0.0;
    double hi = 0.0;

    bool operator==(const QcpVariable&) const = default;
};

// Constraint families of the quadratic program:
//   MaxMovement      squared displacement of each robot bounded by zstar
//   EdgeIndicator    big-M coupling of e_{ij} with the squared distance
//   EdgeUse          path arcs only over edges that exist (z <= e)
//   FlowConservation k units of flow from source to destination
//   VertexDisjoint   internal vertices carry at most one path
enum class ConstraintFamily { MaxMovement, EdgeIndicator, EdgeUse, FlowConservation, VertexDisjoint };

// Short stable tag used in exports and reports.
const char* family_tag(ConstraintFamily family);

struct LinTerm {
    int var;
    double coeff;
    bool operator==(const LinTerm&) const = default;
};

struct QuadTerm {
    int a, b;
    double coeff;
    bool operator==(const QuadTerm&) const = default;
};

// lo <= constant + sum(lin) + sum(quad) <= hi, with +-infinity for one-sided
// rows.
struct QcpConstraint {
    ConstraintFamily family;
    std::array<int, 4> idx{-1, -1, -1, -1};
    double lo = 0.0;
    double hi = 0.0;
    double constant = 0.0;
    std::vector<LinTerm> lin;
    std::vector<QuadTerm> quad;

    bool operator==(const QcpConstraint&) const = default;
};

// Symbolic quadratically constrained program for the restoration problem:
// minimize zstar subject to the five constraint families above. Binary edge
// indicators e_{ij} exist for all ordered i != j (e_{ii} is fixed to zero and
// gets no variable); path variables z_{s,d,i,j} exist for all ordered s != d
// and ordered i != j.
class QcpModel {
  public:
    int n = 0;
    int dim = 2;
    int k = 1;
    double h = 1.0;
    double big_m = 0.0;
    std::vector<Vec3> original_positions;

    std::vector<QcpVariable> vars;
    std::vector<QcpConstraint> constraints;

    int zstar_var() const { return 0; }
    int xstar_var(int i, int c) const { return 1 + i * dim + c; }
    bool e_fixed_zero(int i, int j) const { return i == j; }
    // -1 for i == j (fixed zero, not a variable).
    int e_var(int i, int j) const;
    // -1 when undefined (s == d or i == j).
    int z_var(int s, int d, int i, int j) const;

    int num_e_vars() const { return n * (n - 1); }
    int num_z_vars() const { return n * (n - 1) * n * (n - 1); }

    bool operator==(const QcpModel&) const = default;

  private:
    // Ordered pair (a, b), a != b, ranked lexicographically.
    int pair_index(int a, int b) const { return a * (n - 1) + b - (b > a ? 1 : 0); }
};

// Throws Infeasible when n <= k.
QcpModel build_qcp(const Instance& instance, int k);

enum class QcpExportFormat { Text };

// Deterministic text serialization; identical models export byte-identically.
std::string export_qcp(const QcpModel& model, QcpExportFormat format = QcpExportFormat::Text);

// Parses the text format back into a structurally identical model.
QcpModel parse_qcp(const std::string& text);

enum class WitnessStrategy { MaxFlowWitness };

struct QcpViolation {
    ConstraintFamily family;
    std::array<int, 4> idx;
    double residual;
};

struct FeasibilityReport {
    bool feasible = false;
    std::vector<QcpViolation> violations;
    double objective_zstar = 0.0;
};

// Evaluates candidate positions against the model: edge indicators come from
// the candidate geometry, path variables from k vertex-disjoint paths per
// source/destination pair found by max-flow, and every constraint is checked
// with absolute tolerance 1e-6.
FeasibilityReport check_feasible(const QcpModel& model, const std::vector<Vec3>& candidate,
                                 WitnessStrategy strategy = WitnessStrategy::MaxFlowWitness);

// Certified lower bound on the optimal minmax movement: moving every robot
// at most mu stretches original pairwise distances by at most 2*mu, so a
// k-connected result forces the graph on all pairs originally within
// h + 2*mu to be k-connected already. With t* the bottleneck threshold,
// any feasible plan satisfies mu >= (t* - h) / 2.
double fcr_lower_bound(const Instance& instance, int k);

}  // namespace kconn
