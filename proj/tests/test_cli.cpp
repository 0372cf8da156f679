#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hsgn/cli.hpp"

using namespace hsgn;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path fresh_dir(const std::string& name) {
    fs::path dir = fs::path("cli_test_out") / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

// numeric CSV reader; leading # comment lines are skipped
Csv read_csv(const fs::path& p) {
    Csv csv;
    std::ifstream in(p);
    REQUIRE(in);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ','))
            cells.push_back(cell);
        if (csv.header.empty()) {
            csv.header = cells;
            continue;
        }
        std::vector<double> row;
        for (const std::string& c : cells)
            row.push_back(std::strtod(c.c_str(), nullptr));
        csv.rows.push_back(row);
    }
    return csv;
}

} // namespace

TEST_CASE("run command produces the full output set", "[cli]") {
    const fs::path dir = fresh_dir("run_lake");
    RunConfig cfg;
    cfg.scenario = "lake_at_rest";
    cfg.nx = 20;
    cfg.ny = 20;
    cfg.t_final = 1.0;
    cfg.output_dir = dir.string();
    cfg.gauges_set = true;
    cfg.gauges = {{0.0, 0.0}};
    cfg.snapshots_set = true;
    cfg.snapshot_times = {0.0, 0.5};
    cfg.cross_section_set = true;
    cfg.cross_section_y = 0.0;

    std::ostringstream log;
    const int code = cmd_run(cfg, log);
    CHECK(code == 0);
    CHECK(fs::exists(dir / "conservation.csv"));
    CHECK(fs::exists(dir / "gauges.csv"));
    CHECK(fs::exists(dir / "run_meta.json"));
    CHECK(fs::exists(dir / "cross_section.csv"));
    CHECK(fs::exists(dir / "snapshot_t0.csv"));
    CHECK(fs::exists(dir / "snapshot_t0.5.csv"));

    SECTION("conserved totals stay constant over the flat surface") {
        Csv cons = read_csv(dir / "conservation.csv");
        REQUIRE(cons.header ==
                std::vector<std::string>{"t", "total_mass", "total_energy",
                                         "semidiscrete_energy_rate"});
        REQUIRE(cons.rows.size() >= 2);
        const double m0 = cons.rows.front()[1];
        const double e0 = cons.rows.front()[2];
        for (const auto& row : cons.rows) {
            CHECK(std::abs(row[1] - m0) <= 1e-12 * std::abs(m0));
            CHECK(std::abs(row[2] - e0) <= 1e-12 * std::abs(e0));
            CHECK(std::abs(row[3]) <= 1e-11 * std::abs(e0));
        }
    }
    SECTION("the gauge sits on the undisturbed surface") {
        Csv gauges = read_csv(dir / "gauges.csv");
        REQUIRE(gauges.header == std::vector<std::string>{"t", "gauge_1"});
        for (const auto& row : gauges.rows)
            CHECK(row[1] == Catch::Approx(1.0).margin(1e-12));
    }
    SECTION("the metadata ledger is self-consistent") {
        nlohmann::json meta;
        std::ifstream(dir / "run_meta.json") >> meta;
        CHECK(meta["status"] == "ok");
        CHECK(meta["command"] == "run");
        CHECK(meta["scenario"]["name"] == "lake_at_rest");
        CHECK(meta["grid"]["nx"] == 20);
        CHECK(meta["grid"]["boundary_x"] == "periodic");
        CHECK(meta["time"]["t_reached"] == 1.0);
        const std::int64_t acc = meta["steps"]["accepted"];
        const std::int64_t rej = meta["steps"]["rejected"];
        const std::int64_t evals = meta["steps"]["rhs_evals"];
        const std::int64_t setup = meta["steps"]["rhs_evals_setup"];
        CHECK(evals == 3 * (acc + rej) + 1 + setup);
        CHECK(std::abs(meta["conservation"]["mass_drift_rel"].get<double>()) <= 1e-12);
        REQUIRE(meta["snapshots"].size() == 2);
        CHECK(meta["snapshots"][0]["target"] == 0.0);
        CHECK(meta["snapshots"][0]["file"] == "snapshot_t0.csv");
    }
    SECTION("snapshot tables carry the expected columns") {
        Csv snap = read_csv(dir / "snapshot_t0.csv");
        REQUIRE(snap.header == std::vector<std::string>{"x", "y", "h", "u", "v", "w",
                                                        "eta", "b"});
        CHECK(snap.rows.size() == 20 * 20);
    }
}

TEST_CASE("reruns are byte-identical", "[cli]") {
    auto run_into = [](const std::string& name) {
        const fs::path dir = fresh_dir(name);
        RunConfig cfg;
        cfg.scenario = "lake_at_rest";
        cfg.nx = 16;
        cfg.ny = 16;
        cfg.t_final = 0.5;
        cfg.output_dir = dir.string();
        cfg.gauges_set = true;
        cfg.gauges = {{1.0, -1.0}};
        cfg.snapshots_set = true;
        cfg.snapshot_times = {0.25};
        std::ostringstream log;
        REQUIRE(cmd_run(cfg, log) == 0);
        return dir;
    };
    const fs::path a = run_into("rerun_a");
    const fs::path b = run_into("rerun_b");
    CHECK(slurp(a / "conservation.csv") == slurp(b / "conservation.csv"));
    CHECK(slurp(a / "gauges.csv") == slurp(b / "gauges.csv"));
    CHECK(slurp(a / "snapshot_t0.25.csv") == slurp(b / "snapshot_t0.25.csv"));
}

TEST_CASE("run aborts surface as a nonzero exit and a partial record", "[cli]") {
    const fs::path dir = fresh_dir("run_abort");
    RunConfig cfg;
    cfg.scenario = "lake_at_rest";
    cfg.nx = 16;
    cfg.ny = 16;
    cfg.t_final = 5.0;
    cfg.output_dir = dir.string();
    cfg.integrator.max_steps = 1;
    std::ostringstream log;
    const int code = cmd_run(cfg, log);
    CHECK(code == 1);
    nlohmann::json meta;
    std::ifstream(dir / "run_meta.json") >> meta;
    CHECK(meta["status"] == "aborted");
    CHECK(meta["abort_reason"].get<std::string>().find("step budget") !=
          std::string::npos);
    CHECK(meta["time"]["t_reached"].get<double>() < 5.0);
    Csv cons = read_csv(dir / "conservation.csv");
    CHECK(cons.rows.size() >= 1);  // partial series still flushed
}

TEST_CASE("unknown scenarios fail before touching the disk", "[cli]") {
    RunConfig cfg;
    cfg.scenario = "maelstrom";
    cfg.output_dir = "cli_test_out/should_not_exist";
    std::ostringstream log;
    CHECK_THROWS_AS(cmd_run(cfg, log), std::invalid_argument);
    CHECK_FALSE(fs::exists(cfg.output_dir));
}

TEST_CASE("convergence command tabulates a refinement ladder", "[cli]") {
    const fs::path dir = fresh_dir("converge_mms");
    RunConfig cfg;
    cfg.scenario = "manufactured";
    cfg.t_final = 0.5;
    cfg.resolutions = {16, 32};
    cfg.integrator.abs_tol = 1e-8;
    cfg.integrator.rel_tol = 1e-8;
    cfg.tolerances_set = true;
    cfg.output_dir = dir.string();
    std::ostringstream log;
    const int code = cmd_converge(cfg, log);
    CHECK(code == 0);
    Csv table = read_csv(dir / "convergence.csv");
    REQUIRE(table.header.size() == 2 + 2 * 5 + 1);
    CHECK(table.header[0] == "nx");
    CHECK(table.header[1] == "dx");
    CHECK(table.header[2] == "err_h");
    CHECK(table.header.back() == "status");
    REQUIRE(table.rows.size() == 2);
    CHECK(table.rows[0][0] == 16.0);
    CHECK(table.rows[1][0] == 32.0);
    CHECK(table.rows[1][2] < table.rows[0][2]);  // err_h shrinks
    nlohmann::json meta;
    std::ifstream(dir / "run_meta.json") >> meta;
    CHECK(meta["status"] == "ok");
    CHECK(meta["row_status"][0] == "ok");
    SECTION("a scenario without a reference refuses the study") {
        RunConfig bad = cfg;
        bad.scenario = "still_water";
        CHECK_THROWS_WITH(cmd_converge(bad, log),
                          Catch::Matchers::ContainsSubstring("no exact solution"));
    }
    SECTION("fewer than two rungs is a configuration error") {
        RunConfig bad = cfg;
        bad.resolutions = {8};
        CHECK_THROWS_WITH(cmd_converge(bad, log),
                          Catch::Matchers::ContainsSubstring(">= 2"));
    }
}

TEST_CASE("benchmark command measures a ladder and validates it first", "[cli]") {
    const fs::path dir = fresh_dir("bench_small");
    RunConfig cfg;
    cfg.bench_resolutions = {4, 6, 8};
    cfg.bench_repetitions = 3;
    cfg.bench_warmups = 1;
    cfg.output_dir = dir.string();
    std::ostringstream log;
    const int code = cmd_bench(cfg, log);
    CHECK(code == 0);
    Csv bench = read_csv(dir / "bench.csv");
    REQUIRE(bench.header ==
            std::vector<std::string>{"nx", "ny", "n_total", "seconds_per_rhs",
                                     "seconds_per_rhs_min", "threads"});
    REQUIRE(bench.rows.size() == 3);
    for (const auto& row : bench.rows) {
        CHECK(row[2] == row[0] * row[1]);
        CHECK(row[3] > 0.0);
        CHECK(row[4] > 0.0);
        CHECK(row[4] <= row[3]);  // min <= median
    }
    SECTION("rungs below the minimum grid are rejected before measuring") {
        RunConfig bad = cfg;
        bad.bench_resolutions = {2, 4};
        bad.output_dir = "cli_test_out/bench_bad";
        fs::remove_all(bad.output_dir);
        CHECK_THROWS_WITH(cmd_bench(bad, log),
                          Catch::Matchers::ContainsSubstring("4-node minimum"));
        CHECK_FALSE(fs::exists(bad.output_dir));
    }
    SECTION("repetition counts are validated") {
        RunConfig bad = cfg;
        bad.bench_repetitions = 0;
        CHECK_THROWS_WITH(cmd_bench(bad, log),
                          Catch::Matchers::ContainsSubstring("repetitions"));
    }
}
