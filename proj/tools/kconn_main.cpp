#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kconn/baselines.hpp"
#include "kconn/bench.hpp"
#include "kconn/connectivity.hpp"
#include "kconn/edge_augment.hpp"
#include "kconn/errors.hpp"
#include "kconn/json_io.hpp"
#include "kconn/qcp_model.hpp"
#include "kconn/render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

std::uint64_t env_seed() {
    if (const char* s = std::getenv("KCONN_SEED")) return std::strtoull(s, nullptr, 10);
    return 0;
}

std::optional<kconn::ConnectivityMethod> method_from_name(const std::string& name) {
    using M = kconn::ConnectivityMethod;
    if (name == "auto") return M::Auto;
    if (name == "dfs") return M::DfsSpecialized;
    if (name == "reduction") return M::VertexRemovalReduction;
    if (name == "maxflow") return M::MaxFlow;
    if (name == "brute") return M::BruteForce;
    return std::nullopt;
}

struct GenOptions {
    std::string kind = "uniform";
    int n = 8;
    double h = 1.0;
    double side = 0.0;
    std::uint64_t seed = env_seed();
    bool seed_given = false;
    std::string out;
};

struct CheckOptions {
    std::string instance;
    int k = 2;
    std::string method = "auto";
    bool report_kappa = false;
};

struct RestoreOptions {
    std::string instance;
    int k = 2;
    std::string algo = "eascr";
    std::string out;
    std::string dump_augmentation;
    bool allow_invalid = false;
};

struct BenchOptions {
    std::string config;
    std::string algos = "eascr,nb,bt";
    std::string n_list = "8,16,32";
    int k = 2;
    int trials = 10;
    std::uint64_t seed = env_seed();
    double h = 1.0;
    double side = 0.0;
    int jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string out_dir = ".";
};

struct ExportOptions {
    std::string instance;
    int k = 2;
    std::string out;
};

struct RenderOptions {
    std::string instance;
    std::string plan;
    std::string out;
};

struct VerifyOptions {
    std::string instance;
    std::string plan;
    int k = 2;
    std::string aug;
    bool no_retention = false;
};

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int cmd_gen(const GenOptions& opt) {
    kconn::GeneratorConfig cfg;
    if (opt.kind == "uniform") {
        cfg.kind = kconn::DatasetKind::Uniform;
    } else if (opt.kind == "gmm") {
        cfg.kind = kconn::DatasetKind::Gmm;
    } else {
        std::cerr << "gen: unknown kind '" << opt.kind << "' (uniform|gmm)\n";
        return kExitUsage;
    }
    cfg.n = opt.n;
    cfg.h = opt.h;
    cfg.side = opt.side > 0.0 ? opt.side : kconn::default_side(opt.n, opt.h);
    cfg.seed = opt.seed;
    const kconn::Instance inst = kconn::generate_instance(cfg);
    if (opt.out.empty()) {
        std::cout << kconn::instance_to_json(inst);
    } else {
        kconn::save_instance(inst, opt.out);
        std::cerr << "wrote " << opt.out << "\n";
    }
    return kExitOk;
}

int cmd_check(const CheckOptions& opt) {
    const auto method = method_from_name(opt.method);
    if (!method) {
        std::cerr << "check: unknown method '" << opt.method
                  << "' (auto|dfs|reduction|maxflow|brute)\n";
        return kExitUsage;
    }
    const kconn::Instance inst = kconn::load_instance(opt.instance);
    const kconn::CommGraph g = kconn::build_comm_graph(inst);
    const bool ok = kconn::is_k_connected(g, opt.k, *method);
    std::cout << "k-connected: " << (ok ? "true" : "false") << "\n";
    if (opt.report_kappa && inst.n() >= 2)
        std::cout << "vertex-connectivity: " << kconn::vertex_connectivity(g) << "\n";
    return kExitOk;
}

int cmd_restore(const RestoreOptions& opt) {
    const auto algo = kconn::algo_from_name(opt.algo);
    if (!algo) {
        std::cerr << "restore: unknown algorithm '" << opt.algo << "' (eascr|nb|bt)\n";
        return kExitUsage;
    }
    if (*algo == kconn::Algo::BlockTranslation && opt.k != 2) {
        std::cerr << "restore: bt supports k = 2 only\n";
        return kExitUsage;
    }
    if (!opt.dump_augmentation.empty() && *algo != kconn::Algo::EaScr) {
        std::cerr << "restore: --dump-augmentation requires --algo eascr\n";
        return kExitUsage;
    }

    const kconn::Instance inst = kconn::load_instance(opt.instance);
    kconn::AugmentationSet aug;
    const kconn::RestorationPlan plan = kconn::run_algorithm(inst, opt.k, *algo, &aug);
    if (!opt.dump_augmentation.empty()) kconn::save_augmentation(aug, opt.dump_augmentation);

    const kconn::PlanReport report =
        kconn::verify_plan(inst, plan, aug, opt.k, *algo == kconn::Algo::EaScr);
    if (!report.ok()) {
        for (const std::string& v : report.violations) std::cerr << "verify: " << v << "\n";
        if (!opt.allow_invalid) {
            std::cerr << "restore: plan failed verification; not writing (use --allow-invalid "
                         "to keep it)\n";
            return kExitDomain;
        }
    }
    if (opt.out.empty()) {
        std::cout << kconn::plan_to_json(plan);
    } else {
        kconn::save_plan(plan, opt.out);
        std::cerr << "wrote " << opt.out << "\n";
    }
    return kExitOk;
}

// Experiment config file (JSON object); explicit flags win over file values,
// file values win over defaults.
int apply_bench_config(BenchOptions& opt, const CLI::App* cmd) {
    const std::string text = kconn::read_text_file(opt.config);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw kconn::Error(std::string("bench config: invalid JSON: ") + e.what());
    }
    auto list_field = [&](const char* key, std::string& into) {
        if (!j.contains(key)) return;
        if (j[key].is_string()) {
            into = j[key].get<std::string>();
            return;
        }
        into.clear();
        for (const auto& item : j[key]) {
            if (!into.empty()) into += ",";
            into += item.is_string() ? item.get<std::string>()
                                     : std::to_string(item.get<long long>());
        }
    };
    try {
        if (cmd->count("--algos") == 0) list_field("algos", opt.algos);
        if (cmd->count("--n") == 0) list_field("n", opt.n_list);
        if (cmd->count("--k") == 0 && j.contains("k")) opt.k = j["k"].get<int>();
        if (cmd->count("--trials") == 0 && j.contains("trials"))
            opt.trials = j["trials"].get<int>();
        if (cmd->count("--seed") == 0 && j.contains("seed"))
            opt.seed = j["seed"].get<std::uint64_t>();
        if (cmd->count("--radius") == 0 && j.contains("radius"))
            opt.h = j["radius"].get<double>();
        if (cmd->count("--side") == 0 && j.contains("side")) opt.side = j["side"].get<double>();
        if (cmd->count("--jobs") == 0 && j.contains("jobs")) opt.jobs = j["jobs"].get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw kconn::Error(std::string("bench config: invalid JSON: ") + e.what());
    }
    return kExitOk;
}

int cmd_bench(BenchOptions opt, const CLI::App* cmd) {
    if (!opt.config.empty()) {
        const int rc = apply_bench_config(opt, cmd);
        if (rc != kExitOk) return rc;
    }
    kconn::ExperimentConfig cfg;
    for (const std::string& name : split_list(opt.algos)) {
        const auto algo = kconn::algo_from_name(name);
        if (!algo) {
            std::cerr << "bench: unknown algorithm '" << name << "'\n";
            return kExitUsage;
        }
        cfg.algos.push_back(*algo);
        if (*algo == kconn::Algo::BlockTranslation && opt.k != 2) {
            std::cerr << "bench: bt supports k = 2 only\n";
            return kExitUsage;
        }
    }
    for (const std::string& tok : split_list(opt.n_list)) cfg.n_values.push_back(std::stoi(tok));
    cfg.k = opt.k;
    cfg.trials = opt.trials;
    cfg.seed0 = opt.seed;
    cfg.h = opt.h;
    cfg.side_override = opt.side;
    cfg.jobs = opt.jobs;

    const kconn::ExperimentResult result = kconn::run_experiment(cfg);
    namespace fs = std::filesystem;
    fs::create_directories(opt.out_dir);
    const fs::path dir(opt.out_dir);
    kconn::write_text_file((dir / "results.csv").string(), kconn::results_csv(result));
    kconn::write_text_file((dir / "aggregate.csv").string(), kconn::aggregate_csv(result));
    kconn::write_text_file((dir / "runtime.csv").string(), kconn::runtime_csv(result));
    kconn::write_text_file((dir / "runtime_aggregate.csv").string(),
                           kconn::runtime_aggregate_csv(result));
    std::cerr << "wrote " << (dir / "results.csv").string() << " (+aggregate, runtime)\n";
    if (!result.all_feasible) {
        std::cerr << "bench: at least one plan failed verification\n";
        return kExitDomain;
    }
    return kExitOk;
}

int cmd_export(const ExportOptions& opt) {
    const kconn::Instance inst = kconn::load_instance(opt.instance);
    const kconn::QcpModel model = kconn::build_qcp(inst, opt.k);
    const std::string text = kconn::export_qcp(model);
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        kconn::write_text_file(opt.out, text);
        std::cerr << "wrote " << opt.out << "\n";
    }
    return kExitOk;
}

int cmd_render(const RenderOptions& opt) {
    const kconn::Instance inst = kconn::load_instance(opt.instance);
    const kconn::CommGraph g = kconn::build_comm_graph(inst);
    std::string svg;
    if (opt.plan.empty()) {
        svg = kconn::render_svg(inst, g);
    } else {
        const kconn::RestorationPlan plan = kconn::load_plan(opt.plan, inst);
        svg = kconn::render_svg(inst, g, &plan);
    }
    if (opt.out.empty()) {
        std::cout << svg;
    } else {
        kconn::write_text_file(opt.out, svg);
        std::cerr << "wrote " << opt.out << "\n";
    }
    return kExitOk;
}

int cmd_verify(const VerifyOptions& opt) {
    const kconn::Instance inst = kconn::load_instance(opt.instance);
    const kconn::RestorationPlan plan = kconn::load_plan(opt.plan, inst);
    kconn::AugmentationSet aug;
    if (!opt.aug.empty()) aug = kconn::load_augmentation(opt.aug, opt.k);
    const kconn::PlanReport report =
        kconn::verify_plan(inst, plan, aug, opt.k, !opt.no_retention);
    if (report.ok()) {
        std::cout << "plan: valid\n";
        return kExitOk;
    }
    for (const std::string& v : report.violations) std::cerr << "verify: " << v << "\n";
    std::cout << "plan: invalid (" << report.violations.size() << " violations)\n";
    return kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-connectivity restoration toolkit"};
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App* c_gen = app.add_subcommand("gen", "Generate a random connected instance");
    c_gen->add_option("--kind", gen.kind, "uniform|gmm");
    c_gen->add_option("--n", gen.n, "robot count")->required();
    c_gen->add_option("--radius", gen.h, "communication radius");
    c_gen->add_option("--side", gen.side, "workspace side (default sqrt(n)*h/2)");
    c_gen->add_option("--seed", gen.seed, "RNG seed (default $KCONN_SEED)");
    c_gen->add_option("--out", gen.out, "output instance JSON (default stdout)");

    CheckOptions check;
    CLI::App* c_check = app.add_subcommand("check", "Test k-connectivity of an instance");
    c_check->add_option("--instance", check.instance, "instance JSON")->required();
    c_check->add_option("--k", check.k, "connectivity degree")->required();
    c_check->add_option("--method", check.method, "auto|dfs|reduction|maxflow|brute");
    c_check->add_flag("--vertex-connectivity", check.report_kappa,
                      "also print the exact vertex connectivity");

    RestoreOptions restore;
    CLI::App* c_restore = app.add_subcommand("restore", "Compute a restoration plan");
    c_restore->add_option("--instance", restore.instance, "instance JSON")->required();
    c_restore->add_option("--k", restore.k, "connectivity degree")->required();
    c_restore->add_option("--algo", restore.algo, "eascr|nb|bt");
    c_restore->add_option("--out", restore.out, "output plan JSON (default stdout)");
    c_restore->add_option("--dump-augmentation", restore.dump_augmentation,
                          "write the augmentation set JSON (eascr only)");
    c_restore->add_flag("--allow-invalid", restore.allow_invalid,
                        "write the plan even when verification fails");

    BenchOptions bench;
    CLI::App* c_bench = app.add_subcommand("bench", "Run the benchmark harness");
    c_bench->add_option("--config", bench.config, "experiment config JSON (flags override)");
    c_bench->add_option("--algos", bench.algos, "comma list: eascr,nb,bt");
    c_bench->add_option("--n", bench.n_list, "comma list of team sizes");
    c_bench->add_option("--k", bench.k, "connectivity degree");
    c_bench->add_option("--trials", bench.trials, "trials per team size");
    c_bench->add_option("--seed", bench.seed, "base seed (default $KCONN_SEED)");
    c_bench->add_option("--radius", bench.h, "communication radius");
    c_bench->add_option("--side", bench.side, "workspace side override");
    c_bench->add_option("--jobs", bench.jobs, "parallel workers");
    c_bench->add_option("--out", bench.out_dir, "output directory")->required();

    ExportOptions exp;
    CLI::App* c_export = app.add_subcommand("export-qcp", "Export the exact model");
    c_export->add_option("--instance", exp.instance, "instance JSON")->required();
    c_export->add_option("--k", exp.k, "connectivity degree")->required();
    c_export->add_option("--out", exp.out, "output .qcp.txt (default stdout)");

    RenderOptions render;
    CLI::App* c_render = app.add_subcommand("render", "Render an instance (and plan) to SVG");
    c_render->add_option("--instance", render.instance, "instance JSON")->required();
    c_render->add_option("--plan", render.plan, "plan JSON");
    c_render->add_option("--out", render.out, "output SVG (default stdout)");

    VerifyOptions verify;
    CLI::App* c_verify = app.add_subcommand("verify", "Verify a plan against an instance");
    c_verify->add_option("--instance", verify.instance, "instance JSON")->required();
    c_verify->add_option("--plan", verify.plan, "plan JSON")->required();
    c_verify->add_option("--k", verify.k, "connectivity degree")->required();
    c_verify->add_option("--aug", verify.aug, "augmentation set JSON to check establishment");
    c_verify->add_flag("--no-retention", verify.no_retention,
                       "skip the original-edge retention check (baseline plans)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (c_gen->parsed()) return cmd_gen(gen);
        if (c_check->parsed()) return cmd_check(check);
        if (c_restore->parsed()) return cmd_restore(restore);
        if (c_bench->parsed()) return cmd_bench(bench, c_bench);
        if (c_export->parsed()) return cmd_export(exp);
        if (c_render->parsed()) return cmd_render(render);
        if (c_verify->parsed()) return cmd_verify(verify);
    } catch (const kconn::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
