#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>

#include "hsgn/config.hpp"

using namespace hsgn;

namespace {

// restores the previous THREADS value when the test section ends
struct ThreadsEnvGuard {
    std::string saved;
    bool had = false;
    ThreadsEnvGuard() {
        if (const char* v = std::getenv("THREADS")) {
            saved = v;
            had = true;
        }
    }
    ~ThreadsEnvGuard() {
        if (had)
            setenv("THREADS", saved.c_str(), 1);
        else
            unsetenv("THREADS");
    }
};

} // namespace

TEST_CASE("full configuration round trip", "[config]") {
    const std::string text = R"(# solver configuration
[run]
scenario = soliton
nx = 400
ny = 4
t_final = 2.5
threads = 2

[scenario]
amplitude = 0.1
half_length = 30

[integrator]
abs_tol = 1e-9
rel_tol = 1e-9
dt_max = 0.5

[output]
directory = results/soliton
gauges = 0, 0; 1.5, -2.25
snapshot_times = 0.5, 1.0, 2.5
conservation_stride = 10
cross_section_y = 0.25

[converge]
resolutions = 100, 200, 400
ny = 4

[bench]
resolutions = 32, 48, 64, 96
repetitions = 7
warmups = 2
)";
    RunConfig cfg = parse_config_text(text);
    CHECK(cfg.scenario == "soliton");
    CHECK(cfg.nx == 400);
    CHECK(cfg.ny == 4);
    CHECK(std::isnan(cfg.t0));
    CHECK(cfg.t_final == 2.5);
    CHECK(cfg.threads == 2);
    CHECK(cfg.scenario_params.at("amplitude") == 0.1);
    CHECK(cfg.scenario_params.at("half_length") == 30.0);
    CHECK(cfg.integrator.abs_tol == 1e-9);
    CHECK(cfg.integrator.rel_tol == 1e-9);
    CHECK(cfg.integrator.dt_max == 0.5);
    CHECK(cfg.tolerances_set);
    CHECK(cfg.output_dir == "results/soliton");
    REQUIRE(cfg.gauges.size() == 2);
    CHECK(cfg.gauges_set);
    CHECK(cfg.gauges[1][0] == 1.5);
    CHECK(cfg.gauges[1][1] == -2.25);
    REQUIRE(cfg.snapshot_times.size() == 3);
    CHECK(cfg.snapshots_set);
    CHECK(cfg.snapshot_times[2] == 2.5);
    CHECK(cfg.conservation_stride == 10);
    CHECK(cfg.cross_section_set);
    CHECK(cfg.cross_section_y == 0.25);
    CHECK(cfg.resolutions == std::vector<int>{100, 200, 400});
    CHECK(cfg.converge_ny == 4);
    CHECK(cfg.bench_resolutions == std::vector<int>{32, 48, 64, 96});
    CHECK(cfg.bench_repetitions == 7);
    CHECK(cfg.bench_warmups == 2);
}

TEST_CASE("defaults survive an empty configuration", "[config]") {
    RunConfig cfg = parse_config_text("");
    CHECK(cfg.scenario.empty());
    CHECK(cfg.nx == 0);
    CHECK(cfg.threads == 0);
    CHECK_FALSE(cfg.tolerances_set);
    CHECK_FALSE(cfg.gauges_set);
    CHECK_FALSE(cfg.snapshots_set);
    CHECK_FALSE(cfg.cross_section_set);
    CHECK(cfg.conservation_stride == 1);
    CHECK(cfg.output_dir == "out");
    CHECK(cfg.bench_resolutions == std::vector<int>{128, 181, 256, 362, 512});
    CHECK(cfg.bench_repetitions == 50);
    CHECK(cfg.bench_warmups == 5);
    CHECK(cfg.integrator.abs_tol == 1e-6);
}

TEST_CASE("parse errors carry the offending line number", "[config]") {
    SECTION("unknown key") {
        try {
            parse_config_text("[run]\nscenario = x\nnz = 4\n");
            FAIL("expected a parse error");
        } catch (const std::runtime_error& e) {
            const std::string msg = e.what();
            CHECK(msg.find("line 3") != std::string::npos);
            CHECK(msg.find("nz") != std::string::npos);
        }
    }
    SECTION("unknown section") {
        CHECK_THROWS_WITH(parse_config_text("[rnu]\n"),
                          Catch::Matchers::ContainsSubstring("line 1") &&
                              Catch::Matchers::ContainsSubstring("unknown section"));
    }
    SECTION("missing equals sign") {
        CHECK_THROWS_WITH(parse_config_text("[run]\nscenario soliton\n"),
                          Catch::Matchers::ContainsSubstring("line 2"));
    }
    SECTION("key before any section") {
        CHECK_THROWS_WITH(parse_config_text("scenario = x\n"),
                          Catch::Matchers::ContainsSubstring("outside any [section]"));
    }
    SECTION("malformed section header") {
        CHECK_THROWS_WITH(parse_config_text("[run\n"),
                          Catch::Matchers::ContainsSubstring("malformed section"));
    }
    SECTION("non-numeric value") {
        CHECK_THROWS_WITH(parse_config_text("[run]\nnx = many\n"),
                          Catch::Matchers::ContainsSubstring("expected a number"));
    }
    SECTION("fractional integer") {
        CHECK_THROWS_WITH(parse_config_text("[run]\nnx = 2.5\n"),
                          Catch::Matchers::ContainsSubstring("expected an integer"));
    }
    SECTION("gauge pair with a missing coordinate") {
        CHECK_THROWS_WITH(parse_config_text("[output]\ngauges = 1.0; 2.0, 3.0\n"),
                          Catch::Matchers::ContainsSubstring("exactly x, y"));
    }
    SECTION("zero conservation stride") {
        CHECK_THROWS_WITH(parse_config_text("[output]\nconservation_stride = 0\n"),
                          Catch::Matchers::ContainsSubstring("stride"));
    }
    SECTION("scenario parameters must be numeric") {
        CHECK_THROWS_WITH(parse_config_text("[scenario]\namplitude = big\n"),
                          Catch::Matchers::ContainsSubstring("expected a number"));
    }
}

TEST_CASE("comments and spacing are ignored", "[config]") {
    RunConfig cfg = parse_config_text(
        "# leading comment\n\n  [run]  \n   scenario   =   favre   \n\n# done\n");
    CHECK(cfg.scenario == "favre");
}

TEST_CASE("missing configuration files fail loudly", "[config]") {
    CHECK_THROWS_WITH(parse_config_file("/nonexistent/path.cfg"),
                      Catch::Matchers::ContainsSubstring("cannot open"));
}

TEST_CASE("thread-count precedence", "[config]") {
    ThreadsEnvGuard guard;
    SECTION("environment fills an unset config") {
        setenv("THREADS", "3", 1);
        RunConfig cfg = parse_config_text("");
        apply_thread_env(cfg);
        CHECK(cfg.threads == 3);
    }
    SECTION("the config key wins over the environment") {
        setenv("THREADS", "8", 1);
        RunConfig cfg = parse_config_text("[run]\nthreads = 2\n");
        apply_thread_env(cfg);
        CHECK(cfg.threads == 2);
    }
    SECTION("no environment leaves the default") {
        unsetenv("THREADS");
        RunConfig cfg = parse_config_text("");
        apply_thread_env(cfg);
        CHECK(cfg.threads == 0);
    }
    SECTION("garbage in the environment is rejected") {
        setenv("THREADS", "lots", 1);
        RunConfig cfg = parse_config_text("");
        CHECK_THROWS_WITH(apply_thread_env(cfg),
                          Catch::Matchers::ContainsSubstring("THREADS"));
    }
}
