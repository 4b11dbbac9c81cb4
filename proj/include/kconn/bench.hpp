#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kconn/edge_augment.hpp"
#include "kconn/geometry.hpp"
#include "kconn/relocation.hpp"

namespace kconn {

enum class DatasetKind { Uniform, Gmm };

struct GmmParams {
    int components = 3;
    std::vector<Vec3> means;       // defaults: drawn uniformly in the workspace
    std::vector<double> stds;      // defaults: side / 6
    std::vector<double> weights;   // defaults: equal; must sum to 1
};

struct GeneratorConfig {
    DatasetKind kind = DatasetKind::Uniform;
    int n = 8;
    double h = 1.0;
    double side = 2.0;  // square workspace side length
    std::optional<GmmParams> gmm;
    std::uint64_t seed = 0;
};

// Workspace side that keeps the expected density roughly constant across n.
double default_side(int n, double h);

// Samples 2D positions in the workspace (uniform or GMM, truncated to the
// square) and rejects layouts whose communication graph is disconnected.
// Throws GenerationFailed after 10,000 rejections.
Instance generate_instance(const GeneratorConfig& cfg);

struct Metrics {
    double minmax = 0.0;
    double total = 0.0;
};

Metrics compute_metrics(const Instance& instance, const RestorationPlan& plan);

enum class Algo { EaScr, NetBuilder, BlockTranslation };

const char* algo_name(Algo algo);
std::optional<Algo> algo_from_name(const std::string& name);

// Runs one restoration algorithm; for EaScr the augmentation set used is
// returned through out_aug when requested.
RestorationPlan run_algorithm(const Instance& instance, int k, Algo algo,
                              AugmentationSet* out_aug = nullptr);

struct InstanceRow {
    Algo algo;
    int n = 0;
    int k = 0;
    std::uint64_t seed = 0;
    double minmax = 0.0;
    double total = 0.0;
    std::int64_t runtime_ns = 0;
    bool feasible = false;
};

struct AggregateRow {
    Algo algo;
    int n = 0;
    int k = 0;
    int trials = 0;
    double minmax_mean = 0.0;
    double minmax_std = 0.0;
    double total_mean = 0.0;
    double total_std = 0.0;
    double runtime_mean_ns = 0.0;
    double runtime_std_ns = 0.0;
};

struct ExperimentConfig {
    std::vector<Algo> algos;
    std::vector<int> n_values;
    int k = 2;
    int trials = 1;
    std::uint64_t seed0 = 0;
    double h = 1.0;
    double side_override = 0.0;  // 0 means default_side(n, h)
    int jobs = 1;
};

struct ExperimentResult {
    std::vector<InstanceRow> rows;         // sorted by (algo, n, k, seed)
    std::vector<AggregateRow> aggregates;  // sorted by (algo, n, k)
    bool all_feasible = true;
};

// All algorithms run on the same generated instance per (n, trial); every
// plan passes through the k-connectivity verification gate, and solve time
// excludes generation and verification. Throws std::invalid_argument for
// conflicting configurations (BlockTranslation with k != 2).
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// CSV serializations. Metric files are byte-stable across reruns with the
// same configuration; the runtime files hold the wall-clock columns and vary
// by machine, which is why they are kept separate.
std::string results_csv(const ExperimentResult& result);
std::string aggregate_csv(const ExperimentResult& result);
std::string runtime_csv(const ExperimentResult& result);
std::string runtime_aggregate_csv(const ExperimentResult& result);

}  // namespace kconn
