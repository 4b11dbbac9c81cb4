#include "kconn/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "kconn/baselines.hpp"
#include "kconn/connectivity.hpp"
#include "kconn/errors.hpp"
#include "kconn/rng.hpp"

namespace kconn {

namespace {

constexpr int kMaxGenerationAttempts = 10000;

std::string fmt9(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

GmmParams default_gmm(const GeneratorConfig& cfg, Rng& rng) {
    GmmParams p;
    p.components = 3;
    for (int c = 0; c < p.components; ++c) {
        const double x = rng.uniform(0.0, cfg.side);
        const double y = rng.uniform(0.0, cfg.side);
        p.means.push_back({x, y, 0.0});
        p.stds.push_back(cfg.side / 6.0);
        p.weights.push_back(1.0 / p.components);
    }
    return p;
}

Vec3 sample_point(const GeneratorConfig& cfg, const GmmParams* gmm, Rng& rng) {
    if (cfg.kind == DatasetKind::Uniform)
        return {rng.uniform(0.0, cfg.side), rng.uniform(0.0, cfg.side), 0.0};
    // Pick a component, then sample its isotropic Gaussian truncated to the
    // workspace square.
    const double pick = rng.uniform();
    double acc = 0.0;
    int comp = gmm->components - 1;
    for (int c = 0; c < gmm->components; ++c) {
        acc += gmm->weights[c];
        if (pick < acc) {
            comp = c;
            break;
        }
    }
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const double x = gmm->means[comp].x + gmm->stds[comp] * rng.normal();
        const double y = gmm->means[comp].y + gmm->stds[comp] * rng.normal();
        if (x >= 0.0 && x <= cfg.side && y >= 0.0 && y <= cfg.side) return {x, y, 0.0};
    }
    return {std::clamp(gmm->means[comp].x, 0.0, cfg.side),
            std::clamp(gmm->means[comp].y, 0.0, cfg.side), 0.0};
}

void validate_config(const GeneratorConfig& cfg) {
    if (cfg.n < 2) throw std::invalid_argument("generate_instance: n must be >= 2");
    if (!(cfg.side > 0.0)) throw std::invalid_argument("generate_instance: side must be > 0");
    if (!(cfg.h > 0.0)) throw std::invalid_argument("generate_instance: h must be > 0");
    if (cfg.gmm) {
        const GmmParams& p = *cfg.gmm;
        if (p.components < 1 || static_cast<int>(p.means.size()) != p.components ||
            static_cast<int>(p.stds.size()) != p.components ||
            static_cast<int>(p.weights.size()) != p.components)
            throw std::invalid_argument("generate_instance: malformed GMM parameters");
        double sum = 0.0;
        for (double w : p.weights) sum += w;
        if (std::abs(sum - 1.0) > 1e-9)
            throw std::invalid_argument("generate_instance: GMM weights must sum to 1");
    }
}

}  // namespace

double default_side(int n, double h) { return std::sqrt(static_cast<double>(n)) * h / 2.0; }

Instance generate_instance(const GeneratorConfig& cfg) {
    validate_config(cfg);
    Rng rng(cfg.seed);
    GmmParams gmm_storage;
    const GmmParams* gmm = nullptr;
    if (cfg.kind == DatasetKind::Gmm) {
        gmm_storage = cfg.gmm ? *cfg.gmm : default_gmm(cfg, rng);
        gmm = &gmm_storage;
    }

    Instance inst;
    inst.dim = 2;
    inst.h = cfg.h;
    for (int attempt = 0; attempt < kMaxGenerationAttempts; ++attempt) {
        inst.positions.clear();
        for (int i = 0; i < cfg.n; ++i) inst.positions.push_back(sample_point(cfg, gmm, rng));
        if (is_connected(build_comm_graph(inst))) return inst;
    }
    const double degree =
        (cfg.n - 1) * std::min(1.0, 3.14159265358979323846 * cfg.h * cfg.h / (cfg.side * cfg.side));
    throw GenerationFailed("generate_instance: no connected layout in " +
                           std::to_string(kMaxGenerationAttempts) + " attempts (n=" +
                           std::to_string(cfg.n) + ", h=" + fmt9(cfg.h) + ", side=" +
                           fmt9(cfg.side) + ", expected mean degree ~" + fmt9(degree) + ")");
}

Metrics compute_metrics(const Instance& instance, const RestorationPlan& plan) {
    if (plan.final_positions.size() != instance.positions.size())
        throw std::invalid_argument("compute_metrics: plan does not match the instance");
    Metrics m;
    for (std::size_t i = 0; i < plan.final_positions.size(); ++i) {
        const double d = distance(plan.final_positions[i], instance.positions[i]);
        m.minmax = std::max(m.minmax, d);
        m.total += d;
    }
    return m;
}

const char* algo_name(Algo algo) {
    switch (algo) {
        case Algo::EaScr: return "eascr";
        case Algo::NetBuilder: return "nb";
        case Algo::BlockTranslation: return "bt";
    }
    return "?";
}

std::optional<Algo> algo_from_name(const std::string& name) {
    if (name == "eascr") return Algo::EaScr;
    if (name == "nb") return Algo::NetBuilder;
    if (name == "bt") return Algo::BlockTranslation;
    return std::nullopt;
}

RestorationPlan run_algorithm(const Instance& instance, int k, Algo algo,
                              AugmentationSet* out_aug) {
    switch (algo) {
        case Algo::EaScr: {
            AugmentationSet aug = edge_augmentation(instance, k);
            RestorationPlan plan = scr(instance, aug);
            if (out_aug) *out_aug = std::move(aug);
            return plan;
        }
        case Algo::NetBuilder:
            if (out_aug) *out_aug = {};
            return net_builder(instance, k);
        case Algo::BlockTranslation:
            if (k != 2)
                throw std::invalid_argument("block translation supports k = 2 only");
            if (out_aug) *out_aug = {};
            return block_translation(instance);
    }
    throw std::invalid_argument("run_algorithm: unknown algorithm");
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    if (cfg.algos.empty()) throw std::invalid_argument("run_experiment: no algorithms");
    if (cfg.n_values.empty()) throw std::invalid_argument("run_experiment: no team sizes");
    if (cfg.trials < 1) throw std::invalid_argument("run_experiment: trials must be >= 1");
    if (cfg.k < 1) throw std::invalid_argument("run_experiment: k must be >= 1");
    for (Algo a : cfg.algos)
        if (a == Algo::BlockTranslation && cfg.k != 2)
            throw std::invalid_argument("run_experiment: bt requires k = 2");
    for (int n : cfg.n_values)
        if (n <= cfg.k)
            throw std::invalid_argument("run_experiment: needs n > k for every team size");

    struct Task {
        int n;
        int trial;
    };
    std::vector<Task> tasks;
    for (int n : cfg.n_values)
        for (int t = 0; t < cfg.trials; ++t) tasks.push_back({n, t});

    std::vector<std::vector<InstanceRow>> task_rows(tasks.size());
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    auto worker = [&]() {
        while (true) {
            const std::size_t ti = next.fetch_add(1);
            if (ti >= tasks.size()) return;
            try {
                const Task task = tasks[ti];
                GeneratorConfig gen;
                gen.kind = DatasetKind::Uniform;
                gen.n = task.n;
                gen.h = cfg.h;
                gen.side = cfg.side_override > 0.0 ? cfg.side_override
                                                   : default_side(task.n, cfg.h);
                gen.seed = mix_seed(cfg.seed0, mix_seed(static_cast<std::uint64_t>(task.n),
                                                        static_cast<std::uint64_t>(task.trial)));
                const Instance inst = generate_instance(gen);
                for (Algo algo : cfg.algos) {
                    InstanceRow row;
                    row.algo = algo;
                    row.n = task.n;
                    row.k = cfg.k;
                    row.seed = gen.seed;
                    AugmentationSet aug;
                    const auto t0 = std::chrono::steady_clock::now();
                    const RestorationPlan plan = run_algorithm(inst, cfg.k, algo, &aug);
                    const auto t1 = std::chrono::steady_clock::now();
                    row.runtime_ns =
                        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
                    const Metrics m = compute_metrics(inst, plan);
                    row.minmax = m.minmax;
                    row.total = m.total;
                    row.feasible =
                        verify_plan(inst, plan, aug, cfg.k, algo == Algo::EaScr).ok();
                    task_rows[ti].push_back(row);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
        for (std::thread& t : threads) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    ExperimentResult result;
    for (auto& rows : task_rows)
        for (InstanceRow& row : rows) {
            result.all_feasible = result.all_feasible && row.feasible;
            result.rows.push_back(row);
        }
    std::sort(result.rows.begin(), result.rows.end(),
              [](const InstanceRow& a, const InstanceRow& b) {
                  if (a.algo != b.algo) return static_cast<int>(a.algo) < static_cast<int>(b.algo);
                  if (a.n != b.n) return a.n < b.n;
                  if (a.k != b.k) return a.k < b.k;
                  return a.seed < b.seed;
              });

    std::size_t i = 0;
    while (i < result.rows.size()) {
        std::size_t j = i;
        AggregateRow agg;
        agg.algo = result.rows[i].algo;
        agg.n = result.rows[i].n;
        agg.k = result.rows[i].k;
        double sm = 0, st = 0, sr = 0;
        while (j < result.rows.size() && result.rows[j].algo == agg.algo &&
               result.rows[j].n == agg.n && result.rows[j].k == agg.k) {
            sm += result.rows[j].minmax;
            st += result.rows[j].total;
            sr += static_cast<double>(result.rows[j].runtime_ns);
            ++j;
        }
        agg.trials = static_cast<int>(j - i);
        agg.minmax_mean = sm / agg.trials;
        agg.total_mean = st / agg.trials;
        agg.runtime_mean_ns = sr / agg.trials;
        if (agg.trials > 1) {
            double vm = 0, vt = 0, vr = 0;
            for (std::size_t r = i; r < j; ++r) {
                vm += (result.rows[r].minmax - agg.minmax_mean) *
                      (result.rows[r].minmax - agg.minmax_mean);
                vt += (result.rows[r].total - agg.total_mean) *
                      (result.rows[r].total - agg.total_mean);
                vr += (result.rows[r].runtime_ns - agg.runtime_mean_ns) *
                      (result.rows[r].runtime_ns - agg.runtime_mean_ns);
            }
            agg.minmax_std = std::sqrt(vm / (agg.trials - 1));
            agg.total_std = std::sqrt(vt / (agg.trials - 1));
            agg.runtime_std_ns = std::sqrt(vr / (agg.trials - 1));
        }
        result.aggregates.push_back(agg);
        i = j;
    }
    return result;
}

std::string results_csv(const ExperimentResult& result) {
    std::ostringstream out;
    out << "algo,n,k,seed,minmax,total,feasible\n";
    for (const InstanceRow& r : result.rows)
        out << algo_name(r.algo) << "," << r.n << "," << r.k << "," << r.seed << ","
            << fmt9(r.minmax) << "," << fmt9(r.total) << "," << (r.feasible ? 1 : 0) << "\n";
    return out.str();
}

std::string aggregate_csv(const ExperimentResult& result) {
    std::ostringstream out;
    out << "algo,n,k,trials,minmax_mean,minmax_std,total_mean,total_std\n";
    for (const AggregateRow& r : result.aggregates)
        out << algo_name(r.algo) << "," << r.n << "," << r.k << "," << r.trials << ","
            << fmt9(r.minmax_mean) << "," << fmt9(r.minmax_std) << "," << fmt9(r.total_mean)
            << "," << fmt9(r.total_std) << "\n";
    return out.str();
}

std::string runtime_csv(const ExperimentResult& result) {
    std::ostringstream out;
    out << "algo,n,k,seed,runtime_ns\n";
    for (const InstanceRow& r : result.rows)
        out << algo_name(r.algo) << "," << r.n << "," << r.k << "," << r.seed << ","
            << r.runtime_ns << "\n";
    return out.str();
}

std::string runtime_aggregate_csv(const ExperimentResult& result) {
    std::ostringstream out;
    out << "algo,n,k,trials,runtime_mean_ns,runtime_std_ns\n";
    for (const AggregateRow& r : result.aggregates)
        out << algo_name(r.algo) << "," << r.n << "," << r.k << "," << r.trials << ","
            << fmt9(r.runtime_mean_ns) << "," << fmt9(r.runtime_std_ns) << "\n";
    return out.str();
}

}  // namespace kconn
