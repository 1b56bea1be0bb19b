#include "mlaf/runner.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "mlaf/checkpoint.hpp"
#include "mlaf/csv_io.hpp"
#include "mlaf/error.hpp"
#include "mlaf/spectral_ops.hpp"

namespace mlaf {

namespace fs = std::filesystem;

namespace {

bool finite_field(const SpectralVectorField& u) {
    for (int c = 0; c < 3; ++c) {
        for (const Complex& v : u.component(c)) {
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                return false;
            }
        }
    }
    return true;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::pair<std::string, std::string>> header_entries(const RunConfig& config,
                                                                double dt) {
    auto entries = config_entries(config);
    entries.emplace_back("run.dt", format_double(dt));
    entries.emplace_back("run.forcing", "shell |m| = " + std::to_string(config.forcing.shell_m) +
                                            ", f_rms = " + format_double(config.forcing.amplitude) +
                                            ", seed = " + std::to_string(config.forcing.seed));
    return entries;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw FormatError("cannot open '" + path.string() + "' for writing");
    }
    out << text;
}

class SeriesWriter {
public:
    SeriesWriter(const fs::path& dir, const RunConfig& config, double dt,
                 const std::vector<DiagnosticsRecord>& kept)
        : diag_(dir / "diagnostics.csv", std::ios::trunc), rates_(dir / "rates.csv", std::ios::trunc) {
        if (!diag_ || !rates_) {
            throw FormatError("cannot open CSV files in '" + dir.string() + "'");
        }
        const auto entries = header_entries(config, dt);
        write_comment_block(diag_, entries);
        write_comment_block(rates_, entries);
        diag_ << diagnostics_header(config.diagnostics.N_max) << "\n";
        rates_ << rates_header(config.diagnostics.N_max) << "\n";
        for (const auto& r : kept) {
            add(r);
        }
    }

    void add(const DiagnosticsRecord& r) {
        diag_ << diagnostics_row(r) << "\n";
        rates_ << rates_row(r) << "\n";
        diag_.flush();
        rates_.flush();
    }

private:
    std::ofstream diag_;
    std::ofstream rates_;
};

std::vector<DiagnosticsRecord> rows_before(const fs::path& dir, double t) {
    const fs::path d = dir / "diagnostics.csv";
    const fs::path r = dir / "rates.csv";
    if (!fs::exists(d) || !fs::exists(r)) {
        return {};
    }
    auto all = records_from_tables(read_csv_file(d.string()), read_csv_file(r.string()));
    std::vector<DiagnosticsRecord> kept;
    for (auto& rec : all) {
        if (rec.t < t) {
            kept.push_back(std::move(rec));
        }
    }
    return kept;
}

void check_resume_compatible(const Checkpoint& c, const RunConfig& config) {
    auto mismatch = [](const std::string& key) {
        throw ConfigError(key + ": differs from the checkpoint being resumed");
    };
    if (c.n != config.grid.n) mismatch("grid.n");
    if (c.L != config.grid.L) mismatch("grid.L");
    if (c.nu != config.model.nu) mismatch("model.nu");
    if (c.alpha != config.model.alpha) mismatch("model.alpha");
    if (c.kind != config.model.kind) mismatch("model.kind");
    if (c.seed != config.forcing.seed) mismatch("forcing.seed");
    if (config.time.dt && *config.time.dt != c.dt) mismatch("time.dt");
}

} // namespace

SpectralVectorField make_forcing(const RunConfig& config) {
    return narrowband_force(config_grid(config), config.forcing);
}

SimState initial_state(const RunConfig& config) {
    const TorusGrid grid = config_grid(config);
    SpectralVectorField u(grid);
    switch (config.initial.kind) {
    case InitialKind::Random: {
        RandomFieldSpec spec;
        spec.rms = config.initial.amplitude;
        spec.kmax = config.initial.kmax;
        spec.kpeak = config.initial.kpeak;
        spec.seed = config.initial.seed;
        u = random_solenoidal(grid, spec);
        break;
    }
    case InitialKind::TaylorGreen: u = taylor_green(grid, config.initial.amplitude); break;
    case InitialKind::Zero: break;
    }
    return SimState{0.0, std::move(u), config.model, make_forcing(config), 0};
}

double run_time_step(const RunConfig& config, const SimState& initial) {
    if (config.time.dt) {
        return *config.time.dt;
    }
    return kDtSafety * cfl_dt(initial);
}

SimulateResult run_simulate(const RunConfig& config, const SimulateOptions& options) {
    config.validate();
    const fs::path dir(config.paths.outdir);
    fs::create_directories(dir);

    SimState state = initial_state(config);
    double dt = run_time_step(config, state);
    std::vector<DiagnosticsRecord> series;
    if (options.resume_from) {
        const Checkpoint c = load_checkpoint(*options.resume_from);
        check_resume_compatible(c, config);
        state.u = c.u;
        state.t = c.t;
        state.step = c.step;
        dt = c.dt;
        series = rows_before(dir, c.t);
    }

    const std::uint64_t total_steps =
        static_cast<std::uint64_t>(std::ceil(config.time.t_end / dt - 1e-9));
    const int nmax = config.diagnostics.N_max;
    const auto every = static_cast<std::uint64_t>(config.time.output_every);
    SeriesWriter writer(dir, config, dt, series);

    auto emit = [&](const SimState& s) {
        series.push_back(record(s, nmax));
        writer.add(series.back());
    };

    SimulateResult result;
    result.dt = dt;
    if (state.step % every == 0 || state.step == total_steps) {
        emit(state);
    }
    try {
        while (state.step < total_steps) {
            StepOptions so;
            so.check_cfl = state.step % kCflRecheckInterval == 0;
            SimState next = step(state, dt, so);
            if (!finite_field(next.u)) {
                throw BlowupError("non-finite velocity at t = " + format_double(next.t) +
                                  " (step " + std::to_string(next.step) + ")");
            }
            state = std::move(next);
            if (state.step % every == 0 || state.step == total_steps) {
                emit(state);
            }
            if (config.time.checkpoint_every > 0 &&
                state.step % static_cast<std::uint64_t>(config.time.checkpoint_every) == 0) {
                save_checkpoint((dir / "checkpoint.ckpt").string(),
                                make_checkpoint(state, config.forcing.seed, dt));
            }
            if (options.log && state.step % (every * 20) == 0) {
                *options.log << "step " << state.step << "/" << total_steps << " t = " << state.t
                             << "\n";
            }
        }
    } catch (const BlowupError& e) {
        save_checkpoint((dir / "last_good.ckpt").string(),
                        make_checkpoint(state, config.forcing.seed, dt));
        result.exit_code = kExitInstability;
        result.message = e.what();
        result.series = std::move(series);
        return result;
    } catch (const CflError& e) {
        save_checkpoint((dir / "last_good.ckpt").string(),
                        make_checkpoint(state, config.forcing.seed, dt));
        result.exit_code = kExitInstability;
        result.message = e.what();
        result.series = std::move(series);
        return result;
    }

    save_checkpoint((dir / "final.ckpt").string(), make_checkpoint(state, config.forcing.seed, dt));
    {
        std::ostringstream spectrum;
        write_comment_block(spectrum, {{"t", format_double(state.t)},
                                       {"filter_alpha", format_double(state.params.filter_alpha())}});
        write_spectrum(spectrum, energy_spectrum(state.u, state.params.filter_alpha()));
        write_text(dir / "spectrum.csv", spectrum.str());
    }
    if (options.write_report && series.size() >= 3) {
        result.analysis = analyze_run(config, series);
        write_text(dir / "report.json", report_json(config, *result.analysis));
    }
    result.series = std::move(series);
    result.final_state = std::move(state);
    return result;
}

SweepAxis parse_sweep_axis(const std::string& text) {
    if (text == "alpha") return SweepAxis::Alpha;
    if (text == "amplitude") return SweepAxis::Amplitude;
    throw ConfigError("sweep.axis: expected alpha or amplitude, got '" + text + "'");
}

SweepResult run_sweep(const RunConfig& config, SweepAxis axis, const std::vector<double>& values,
                      std::ostream* log) {
    if (values.size() < 3) {
        throw ConfigError("sweep.values: need at least 3 values, got " +
                          std::to_string(values.size()));
    }
    if (std::set<double>(values.begin(), values.end()).size() != values.size()) {
        throw ConfigError("sweep.values: repeated values would write overlapping outdirs");
    }
    const char* name = axis == SweepAxis::Alpha ? "alpha" : "amplitude";
    const fs::path root(config.paths.outdir);
    fs::create_directories(root);

    SweepResult out;
    std::optional<SpectralVectorField> reference;
    if (axis == SweepAxis::Alpha) {
        RunConfig ref = config;
        ref.model.alpha = 0.0;
        ref.paths.outdir = (root / "alpha_ref").string();
        SimulateOptions so;
        so.log = log;
        SimulateResult r = run_simulate(ref, so);
        if (r.exit_code != kExitOk) {
            out.exit_code = r.exit_code;
            out.message = "alpha = 0 reference: " + r.message;
            return out;
        }
        reference = r.final_state->u;
    }

    for (std::size_t i = 0; i < values.size(); ++i) {
        RunConfig c = config;
        if (axis == SweepAxis::Alpha) {
            c.model.alpha = values[i];
        } else {
            c.forcing.amplitude = values[i];
        }
        c.paths.outdir = (root / (std::string(name) + "_" + std::to_string(i))).string();
        SimulateOptions so;
        so.log = log;
        SimulateResult r = run_simulate(c, so);
        if (r.exit_code != kExitOk) {
            out.exit_code = r.exit_code;
            out.message = std::string(name) + " = " + format_double(values[i]) + ": " + r.message;
            return out;
        }
        if (!r.analysis) {
            throw DomainError("sweep: run produced fewer than 3 samples; lower time.output_every");
        }
        SweepRow row;
        row.value = values[i];
        row.analysis = *r.analysis;
        if (reference) {
            const SpectralVectorField diff = r.final_state->u - *reference;
            row.rel_diff_alpha0 =
                std::sqrt(sobolev_moment(diff, 0) / sobolev_moment(*reference, 0));
        }
        out.rows.push_back(std::move(row));
    }

    std::ostringstream csv;
    write_comment_block(csv, config_entries(config));
    csv << "# sweep.axis = " << name << "\n";
    csv << "value,Re,Gr,eps,ell_lambda_k_inv";
    for (int n = 1; n <= kReportMaxRung; ++n) {
        csv << ",ell2_kappa_" << n << "0";
    }
    csv << ",grashof_over_re2_plus_re,agmon_ubar,agmon_grad_ubar";
    for (int n = 1; n <= 3; ++n) {
        csv << ",ladder_C" << n;
    }
    if (axis == SweepAxis::Alpha) {
        csv << ",rel_diff_alpha0";
    }
    csv << "\n";
    for (const SweepRow& row : out.rows) {
        const BoundReport& b = row.analysis.bounds;
        auto cell = [&](double v) { csv << "," << format_double(v); };
        csv << format_double(row.value);
        cell(b.re);
        cell(b.gr);
        cell(b.eps);
        cell(b.ell_lambda_k_inv);
        for (int n = 1; n <= kReportMaxRung; ++n) {
            double v = std::nan("");
            for (const auto& k : b.kappa) {
                if (k.n == n && k.r == 0) {
                    v = b.ell * b.ell * k.mean_square;
                }
            }
            cell(v);
        }
        cell(b.grashof_ratio);
        cell(b.agmon_c);
        cell(b.agmon_grad_c);
        for (int n = 1; n <= 3; ++n) {
            cell(n < static_cast<int>(row.analysis.ladders.size())
                     ? row.analysis.ladders[n].fitted_c
                     : std::nan(""));
        }
        if (axis == SweepAxis::Alpha) {
            cell(row.rel_diff_alpha0.value_or(std::nan("")));
        }
        csv << "\n";
    }
    write_text(root / "sweep_summary.csv", csv.str());
    return out;
}

int run_report(const std::string& dir_text, std::ostream& err) {
    const fs::path dir(dir_text);
    try {
        const CsvTable diag = read_csv_file((dir / "diagnostics.csv").string());
        const CsvTable rates = read_csv_file((dir / "rates.csv").string());
        std::ostringstream ini;
        std::string section;
        for (const auto& [key, value] : diag.comments) {
            const auto dot = key.find('.');
            if (dot == std::string::npos || key.rfind("run.", 0) == 0) {
                continue;
            }
            const std::string sec = key.substr(0, dot);
            if (sec != section) {
                ini << "[" << sec << "]\n";
                section = sec;
            }
            ini << key.substr(dot + 1) << " = " << value << "\n";
        }
        RunConfig config = parse_config_string(ini.str());
        config.paths.outdir = dir.string();
        const auto series = records_from_tables(diag, rates);
        const RunAnalysis analysis = analyze_run(config, series);
        write_text(dir / "report.json", report_json(config, analysis));
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

} // namespace mlaf
