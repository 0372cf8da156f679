#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hsgn/cli.hpp"

namespace {

/** Shared flag handling: --config, --output, --threads. The command-line
 *  thread count overrides the config key, which overrides the THREADS
 *  environment variable. */
struct CommonArgs {
    std::string config_path;
    std::string output_dir;
    int threads = 0;

    void attach(CLI::App* cmd, bool config_required) {
        auto* c = cmd->add_option("--config", config_path,
                                  "Path to the key = value configuration file");
        if (config_required)
            c->required();
        cmd->add_option("--output", output_dir,
                        "Output directory (overrides the config file)");
        cmd->add_option("--threads", threads,
                        "Worker thread count (overrides config and THREADS)");
    }

    hsgn::RunConfig resolve() const {
        hsgn::RunConfig cfg;
        if (!config_path.empty())
            cfg = hsgn::parse_config_file(config_path);
        hsgn::apply_thread_env(cfg);
        if (threads > 0)
            cfg.threads = threads;
        if (!output_dir.empty())
            cfg.output_dir = output_dir;
        return cfg;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dispersive shallow-water solver: split-form finite differences "
                 "for the hyperbolic Serre-Green-Naghdi equations"};
    app.require_subcommand(1);

    CommonArgs run_args, conv_args, bench_args;
    CLI::App* run = app.add_subcommand("run", "Integrate one scenario and record results");
    run_args.attach(run, true);
    CLI::App* conv = app.add_subcommand("converge", "Grid-refinement study against an exact solution");
    conv_args.attach(conv, true);
    CLI::App* bench = app.add_subcommand("bench", "Tendency-evaluation throughput over a resolution ladder");
    bench_args.attach(bench, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return hsgn::cmd_run(run_args.resolve(), std::cout);
        if (conv->parsed())
            return hsgn::cmd_converge(conv_args.resolve(), std::cout);
        if (bench->parsed())
            return hsgn::cmd_bench(bench_args.resolve(), std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
