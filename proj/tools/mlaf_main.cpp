#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mlaf/config.hpp"
#include "mlaf/error.hpp"
#include "mlaf/fault.hpp"
#include "mlaf/runner.hpp"
#include "mlaf/verify.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string outdir;
    std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "INI run configuration");
    cmd->add_option("--outdir", args.outdir, "Output directory (overrides paths.outdir)");
    cmd->add_option("--seed", args.seed, "Forcing seed (overrides forcing.seed)");
}

mlaf::RunConfig resolve_config(const CommonArgs& args) {
    mlaf::RunConfig config =
        args.config_path.empty() ? mlaf::RunConfig{} : mlaf::load_config(args.config_path);
    if (!args.outdir.empty()) {
        config.paths.outdir = args.outdir;
    }
    if (args.seed) {
        config.forcing.seed = *args.seed;
    }
    config.validate();
    return config;
}

mlaf::fault::Flags parse_fault(const std::vector<std::string>& names) {
    mlaf::fault::Flags f;
    for (const auto& name : names) {
        if (name == "dealias") {
            f.skip_dealias = true;
        } else if (name == "projection") {
            f.skip_projection = true;
        } else {
            throw mlaf::ConfigError("--inject-fault: unknown fault '" + name + "'");
        }
    }
    return f;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pseudo-spectral solver for the modified Leray-alpha model on the 3-torus"};
    app.require_subcommand(1);

    std::vector<std::string> faults;
    app.add_option("--inject-fault", faults)->group("")->delimiter(',');

    CommonArgs sim_args;
    std::optional<std::string> resume;
    auto* simulate = app.add_subcommand("simulate", "Run one simulation and write CSV, checkpoint and report");
    add_common(simulate, sim_args);
    simulate->add_option("--resume", resume,
                         "Continue from a checkpoint (default <outdir>/final.ckpt)")
        ->expected(0, 1);

    auto* verify = app.add_subcommand("verify", "Run the property suite on fixed small problems");

    CommonArgs sweep_args;
    std::string axis;
    std::vector<double> values;
    auto* sweep = app.add_subcommand("sweep", "One run per value on the alpha or amplitude axis");
    add_common(sweep, sweep_args);
    sweep->add_option("--axis", axis, "alpha or amplitude")->required();
    sweep->add_option("--values", values, "Comma-separated axis values")->required()->delimiter(',');

    std::string report_dir;
    auto* report = app.add_subcommand("report", "Rebuild report.json from an existing run directory");
    report->add_option("--outdir", report_dir, "Run directory holding diagnostics.csv")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return mlaf::kExitConfig;
    }

    try {
        const mlaf::fault::ScopedFault fault(parse_fault(faults));

        if (*simulate) {
            const mlaf::RunConfig config = resolve_config(sim_args);
            mlaf::SimulateOptions opts;
            opts.log = &std::cerr;
            if (simulate->count("--resume") > 0) {
                opts.resume_from = resume && !resume->empty()
                                       ? *resume
                                       : (std::filesystem::path(config.paths.outdir) / "final.ckpt")
                                             .string();
            }
            const mlaf::SimulateResult r = mlaf::run_simulate(config, opts);
            if (!r.message.empty()) {
                (r.exit_code == mlaf::kExitOk ? std::cout : std::cerr) << r.message << "\n";
            }
            return r.exit_code;
        }
        if (*verify) {
            const auto results = mlaf::run_verify_suite(&std::cerr);
            mlaf::print_check_table(std::cout, results);
            int failed = 0;
            for (const auto& r : results) {
                if (!r.passed) {
                    std::cerr << "failed: " << r.name << "\n";
                    ++failed;
                }
            }
            return failed == 0 ? mlaf::kExitOk : mlaf::kExitFailure;
        }
        if (*sweep) {
            const mlaf::RunConfig config = resolve_config(sweep_args);
            const mlaf::SweepResult r =
                mlaf::run_sweep(config, mlaf::parse_sweep_axis(axis), values, &std::cerr);
            if (!r.message.empty()) {
                (r.exit_code == mlaf::kExitOk ? std::cout : std::cerr) << r.message << "\n";
            }
            return r.exit_code;
        }
        if (*report) {
            return mlaf::run_report(report_dir, std::cerr);
        }
    } catch (const mlaf::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return mlaf::kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return mlaf::kExitFailure;
    }
    return mlaf::kExitFailure;
}
