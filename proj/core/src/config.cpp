#include "mlaf/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "mlaf/error.hpp"

namespace mlaf {

namespace pt = boost::property_tree;

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(const std::string& key, const std::string& text) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument(text);
        }
        return v;
    } catch (const std::exception&) {
        throw ConfigError(key + ": expected a number, got '" + text + "'");
    }
}

long long parse_int(const std::string& key, const std::string& text) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument(text);
        }
        return v;
    } catch (const std::exception&) {
        throw ConfigError(key + ": expected an integer, got '" + text + "'");
    }
}

std::optional<double> parse_auto(const std::string& key, const std::string& text) {
    if (text == "auto") {
        return std::nullopt;
    }
    return parse_double(key, text);
}

InitialKind parse_initial_kind(const std::string& text) {
    if (text == "random") return InitialKind::Random;
    if (text == "taylor-green") return InitialKind::TaylorGreen;
    if (text == "zero") return InitialKind::Zero;
    throw ConfigError("initial.kind: expected one of random, taylor-green, zero; got '" + text +
                      "'");
}

using Setter = std::function<void(RunConfig&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table = {
        {"grid.n", [](RunConfig& c, const std::string& v) {
             c.grid.n = static_cast<int>(parse_int("grid.n", v));
         }},
        {"grid.L", [](RunConfig& c, const std::string& v) { c.grid.L = parse_double("grid.L", v); }},
        {"model.kind",
         [](RunConfig& c, const std::string& v) { c.model.kind = parse_model_kind(v); }},
        {"model.nu",
         [](RunConfig& c, const std::string& v) { c.model.nu = parse_double("model.nu", v); }},
        {"model.alpha", [](RunConfig& c, const std::string& v) {
             c.model.alpha = parse_double("model.alpha", v);
         }},
        {"forcing.shell_m", [](RunConfig& c, const std::string& v) {
             c.forcing.shell_m = static_cast<int>(parse_int("forcing.shell_m", v));
         }},
        {"forcing.amplitude", [](RunConfig& c, const std::string& v) {
             c.forcing.amplitude = parse_double("forcing.amplitude", v);
         }},
        {"forcing.seed", [](RunConfig& c, const std::string& v) {
             c.forcing.seed = static_cast<std::uint64_t>(parse_int("forcing.seed", v));
         }},
        {"time.t_end",
         [](RunConfig& c, const std::string& v) { c.time.t_end = parse_double("time.t_end", v); }},
        {"time.output_every", [](RunConfig& c, const std::string& v) {
             c.time.output_every = static_cast<int>(parse_int("time.output_every", v));
         }},
        {"time.spinup",
         [](RunConfig& c, const std::string& v) { c.time.spinup = parse_auto("time.spinup", v); }},
        {"time.dt", [](RunConfig& c, const std::string& v) { c.time.dt = parse_auto("time.dt", v); }},
        {"time.checkpoint_every", [](RunConfig& c, const std::string& v) {
             c.time.checkpoint_every = static_cast<int>(parse_int("time.checkpoint_every", v));
         }},
        {"diagnostics.N_max", [](RunConfig& c, const std::string& v) {
             c.diagnostics.N_max = static_cast<int>(parse_int("diagnostics.N_max", v));
         }},
        {"diagnostics.ladder_C_ref", [](RunConfig& c, const std::string& v) {
             c.diagnostics.ladder_C_ref = parse_double("diagnostics.ladder_C_ref", v);
         }},
        {"paths.outdir", [](RunConfig& c, const std::string& v) { c.paths.outdir = v; }},
        {"initial.kind",
         [](RunConfig& c, const std::string& v) { c.initial.kind = parse_initial_kind(v); }},
        {"initial.amplitude", [](RunConfig& c, const std::string& v) {
             c.initial.amplitude = parse_double("initial.amplitude", v);
         }},
        {"initial.kmax", [](RunConfig& c, const std::string& v) {
             c.initial.kmax = static_cast<int>(parse_int("initial.kmax", v));
         }},
        {"initial.kpeak", [](RunConfig& c, const std::string& v) {
             c.initial.kpeak = parse_double("initial.kpeak", v);
         }},
        {"initial.seed", [](RunConfig& c, const std::string& v) {
             c.initial.seed = static_cast<std::uint64_t>(parse_int("initial.seed", v));
         }},
    };
    return table;
}

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw ConfigError(message);
    }
}

} // namespace

std::string to_string(InitialKind kind) {
    switch (kind) {
    case InitialKind::Random: return "random";
    case InitialKind::TaylorGreen: return "taylor-green";
    case InitialKind::Zero: return "zero";
    }
    return "unknown";
}

void RunConfig::validate() const {
    const TorusGrid g = make_grid(grid.n, grid.L);
    model.validate();
    require(forcing.shell_m >= 2 && forcing.shell_m <= g.dealias_cut() - 1,
            "forcing.shell_m: must lie in [2, " + std::to_string(g.dealias_cut() - 1) +
                "] for grid.n = " + std::to_string(grid.n));
    require(forcing.amplitude >= 0.0 && std::isfinite(forcing.amplitude),
            "forcing.amplitude: must be >= 0");
    require(time.t_end > 0.0 && std::isfinite(time.t_end), "time.t_end: must be > 0");
    require(time.output_every >= 1, "time.output_every: must be >= 1");
    require(!time.spinup || *time.spinup >= 0.0, "time.spinup: must be >= 0 or auto");
    require(!time.dt || (*time.dt > 0.0 && std::isfinite(*time.dt)),
            "time.dt: must be > 0 or auto");
    require(time.checkpoint_every >= 0, "time.checkpoint_every: must be >= 0");
    require(diagnostics.N_max >= 3 && diagnostics.N_max <= 12,
            "diagnostics.N_max: must lie in [3, 12]");
    require(diagnostics.ladder_C_ref >= 0.0, "diagnostics.ladder_C_ref: must be >= 0");
    require(!paths.outdir.empty(), "paths.outdir: must not be empty");
    require(initial.amplitude >= 0.0 && std::isfinite(initial.amplitude),
            "initial.amplitude: must be >= 0");
    if (initial.kind == InitialKind::Random) {
        require(initial.kmax >= 1 && initial.kmax <= g.dealias_cut(),
                "initial.kmax: must lie in [1, " + std::to_string(g.dealias_cut()) + "]");
        require(initial.kpeak > 0.0, "initial.kpeak: must be > 0");
    }
}

RunConfig parse_config(std::istream& in) {
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(std::string("config: ") + e.message() + " at line " +
                          std::to_string(e.line()));
    }
    RunConfig cfg;
    const auto& table = setters();
    for (const auto& [section, body] : tree) {
        if (body.empty()) {
            throw ConfigError(section + ": key outside of any section");
        }
        for (const auto& [key, value] : body) {
            const std::string full = section + "." + key;
            const auto it = table.find(full);
            if (it == table.end()) {
                throw ConfigError(full + ": unknown key");
            }
            it->second(cfg, value.get_value<std::string>());
        }
    }
    cfg.validate();
    return cfg;
}

RunConfig parse_config_string(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config: cannot open '" + path + "'");
    }
    return parse_config(in);
}

std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& c) {
    auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : "auto"; };
    return {
        {"grid.n", std::to_string(c.grid.n)},
        {"grid.L", format_double(c.grid.L)},
        {"model.kind", to_string(c.model.kind)},
        {"model.nu", format_double(c.model.nu)},
        {"model.alpha", format_double(c.model.alpha)},
        {"forcing.shell_m", std::to_string(c.forcing.shell_m)},
        {"forcing.amplitude", format_double(c.forcing.amplitude)},
        {"forcing.seed", std::to_string(c.forcing.seed)},
        {"time.t_end", format_double(c.time.t_end)},
        {"time.output_every", std::to_string(c.time.output_every)},
        {"time.spinup", opt(c.time.spinup)},
        {"time.dt", opt(c.time.dt)},
        {"time.checkpoint_every", std::to_string(c.time.checkpoint_every)},
        {"diagnostics.N_max", std::to_string(c.diagnostics.N_max)},
        {"diagnostics.ladder_C_ref", format_double(c.diagnostics.ladder_C_ref)},
        {"paths.outdir", c.paths.outdir},
        {"initial.kind", to_string(c.initial.kind)},
        {"initial.amplitude", format_double(c.initial.amplitude)},
        {"initial.kmax", std::to_string(c.initial.kmax)},
        {"initial.kpeak", format_double(c.initial.kpeak)},
        {"initial.seed", std::to_string(c.initial.seed)},
    };
}

std::string render_config(const RunConfig& config) {
    std::ostringstream out;
    std::string section;
    for (const auto& [key, value] : config_entries(config)) {
        const auto dot = key.find('.');
        const std::string sec = key.substr(0, dot);
        if (sec != section) {
            out << (section.empty() ? "" : "\n") << "[" << sec << "]\n";
            section = sec;
        }
        out << key.substr(dot + 1) << " = " << value << "\n";
    }
    return out.str();
}

TorusGrid config_grid(const RunConfig& config) { return make_grid(config.grid.n, config.grid.L); }

double config_ell(const RunConfig& config) {
    return forcing_length(config_grid(config), config.forcing.shell_m);
}

} // namespace mlaf
