// End-to-end checks of the command line tool. The binary path arrives via
// the KCONN_BIN environment variable (set by ctest).

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "kconn/json_io.hpp"

namespace fs = std::filesystem;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (ok) {
        std::printf("[ ok ] %s\n", what.c_str());
    } else {
        std::printf("[FAIL] %s\n", what.c_str());
        ++failures;
    }
}

int run(const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    if (status < 0) return -1;
    return WEXITSTATUS(status);
}

}  // namespace

int main() {
    const char* bin = std::getenv("KCONN_BIN");
    if (!bin) {
        std::fprintf(stderr, "KCONN_BIN not set\n");
        return 1;
    }
    const std::string kconn = bin;
    const fs::path dir =
        fs::temp_directory_path() / ("kconn_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string quiet = " 2> " + (dir / "stderr.txt").string();

    // Fixtures.
    const fs::path tri = dir / "tri.json";
    kconn::write_text_file(tri.string(),
                           "{\"dim\": 2, \"h\": 1.0, \"positions\": "
                           "[[0,0],[1,0],[0.5,0.8]]}\n");
    const fs::path line3 = dir / "line3.json";
    kconn::write_text_file(line3.string(),
                           "{\"dim\": 2, \"h\": 1.0, \"positions\": [[0,0],[1,0],[2,0]]}\n");

    // check: triangle is 2-connected, exit 0, answer on stdout.
    const fs::path out = dir / "out.txt";
    int rc = run(kconn + " check --instance " + tri.string() + " --k 2 > " + out.string() + quiet);
    expect(rc == 0, "check exits 0");
    expect(kconn::read_text_file(out.string()) == "k-connected: true\n",
           "check prints k-connected: true");

    rc = run(kconn + " check --instance " + line3.string() + " --k 2 > " + out.string() + quiet);
    expect(rc == 0, "check exits 0 on a negative answer");
    expect(kconn::read_text_file(out.string()) == "k-connected: false\n",
           "check prints k-connected: false");

    // restore: collinear fixture has minmax 0.5; plan and augmentation dump.
    const fs::path plan_path = dir / "plan.json";
    const fs::path aug_path = dir / "aug.json";
    rc = run(kconn + " restore --instance " + line3.string() + " --k 2 --algo eascr --out " +
             plan_path.string() + " --dump-augmentation " + aug_path.string() + quiet);
    expect(rc == 0, "restore exits 0");
    {
        const kconn::Instance inst = kconn::load_instance(line3.string());
        const kconn::RestorationPlan plan = kconn::load_plan(plan_path.string(), inst);
        expect(std::abs(plan.minmax - 0.5) < 1e-9, "restored plan has minmax 0.5");
        const kconn::AugmentationSet aug = kconn::load_augmentation(aug_path.string(), 2);
        expect(aug.edges.size() == 1 && aug.edges[0].i == 0 && aug.edges[0].j == 2,
               "augmentation dump holds the long hop");
    }

    // verify: the written plan passes with the dumped augmentation.
    rc = run(kconn + " verify --instance " + line3.string() + " --plan " + plan_path.string() +
             " --k 2 --aug " + aug_path.string() + " > " + out.string() + quiet);
    expect(rc == 0, "verify accepts the plan");

    // usage errors exit 2.
    rc = run(kconn + " restore --instance " + line3.string() + " --k 3 --algo bt" + quiet);
    expect(rc == 2, "bt with k != 2 is a usage error");
    rc = run(kconn + " restore --instance " + line3.string() + " --k 2 --algo nope" + quiet);
    expect(rc == 2, "unknown algorithm is a usage error");
    rc = run(kconn + " check --instance " + tri.string() + quiet);  // missing --k
    expect(rc == 2, "missing required flag is a usage error");

    // domain errors exit 1.
    rc = run(kconn + " restore --instance " + tri.string() + " --k 3 --algo eascr" + quiet);
    expect(rc == 1, "infeasible restoration (n <= k) is a domain error");
    rc = run(kconn + " check --instance " + (dir / "missing.json").string() + " --k 2" + quiet);
    expect(rc == 1, "missing file is a domain error");

    // gen respects the seed and produces loadable instances.
    const fs::path gen1 = dir / "gen1.json";
    const fs::path gen2 = dir / "gen2.json";
    rc = run(kconn + " gen --n 8 --seed 5 --out " + gen1.string() + quiet);
    expect(rc == 0, "gen exits 0");
    rc = run(kconn + " gen --n 8 --seed 5 --out " + gen2.string() + quiet);
    expect(rc == 0, "gen exits 0 again");
    expect(kconn::read_text_file(gen1.string()) == kconn::read_text_file(gen2.string()),
           "gen is seed-deterministic");

    // KCONN_SEED provides the default seed.
    const fs::path gen3 = dir / "gen3.json";
    rc = run("KCONN_SEED=5 " + kconn + " gen --n 8 --out " + gen3.string() + quiet);
    expect(rc == 0, "gen with KCONN_SEED exits 0");
    expect(kconn::read_text_file(gen1.string()) == kconn::read_text_file(gen3.string()),
           "KCONN_SEED matches --seed");

    // export-qcp writes the model file.
    const fs::path model_path = dir / "line3.qcp.txt";
    rc = run(kconn + " export-qcp --instance " + line3.string() + " --k 2 --out " +
             model_path.string() + quiet);
    expect(rc == 0, "export-qcp exits 0");
    expect(kconn::read_text_file(model_path.string()).rfind("kconn-qcp 1\n", 0) == 0,
           "export starts with the format header");

    // render produces an SVG.
    const fs::path svg_path = dir / "scene.svg";
    rc = run(kconn + " render --instance " + line3.string() + " --plan " + plan_path.string() +
             " --out " + svg_path.string() + quiet);
    expect(rc == 0, "render exits 0");
    expect(kconn::read_text_file(svg_path.string()).find("<svg") != std::string::npos,
           "render wrote an SVG");

    // bench: two runs, identical metric CSVs; runtime files exist.
    const fs::path bench1 = dir / "bench1";
    const fs::path bench2 = dir / "bench2";
    const std::string bench_flags = " bench --algos eascr,nb --n 8 --k 2 --trials 2 --seed 11";
    rc = run(kconn + bench_flags + " --out " + bench1.string() + quiet);
    expect(rc == 0, "bench exits 0");
    rc = run(kconn + bench_flags + " --jobs 2 --out " + bench2.string() + quiet);
    expect(rc == 0, "bench exits 0 with --jobs 2");
    expect(kconn::read_text_file((bench1 / "results.csv").string()) ==
               kconn::read_text_file((bench2 / "results.csv").string()),
           "bench metric rows are byte-identical across runs");
    expect(kconn::read_text_file((bench1 / "aggregate.csv").string()) ==
               kconn::read_text_file((bench2 / "aggregate.csv").string()),
           "bench aggregates are byte-identical across runs");
    expect(fs::exists(bench1 / "runtime.csv") && fs::exists(bench1 / "runtime_aggregate.csv"),
           "bench wrote runtime files");

    // config file with flag precedence: file matches the flag run except for
    // the seed, which the flag overrides.
    const fs::path bench_cfg = dir / "bench_cfg.json";
    kconn::write_text_file(bench_cfg.string(),
                           "{\"algos\": [\"eascr\", \"nb\"], \"n\": [8], \"k\": 2, "
                           "\"trials\": 2, \"seed\": 999}\n");
    const fs::path bench3 = dir / "bench3";
    rc = run(kconn + " bench --config " + bench_cfg.string() + " --seed 11 --out " +
             bench3.string() + quiet);
    expect(rc == 0, "bench accepts a config file");
    expect(kconn::read_text_file((bench3 / "results.csv").string()) ==
               kconn::read_text_file((bench1 / "results.csv").string()),
           "bench config supplies defaults and flags override them");

    fs::remove_all(dir);
    if (failures == 0) std::printf("cli tests passed\n");
    return failures == 0 ? 0 : 1;
}
