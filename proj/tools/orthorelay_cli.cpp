// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The orthorelay Authors
//
// orthorelay: single-point rates, generic sweeps and figure presets.
//
// Exit status: 0 on success, 1 on a configuration error, 2 on a numeric
// failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orthorelay/orthorelay.hpp"

namespace {

using namespace orthorelay;

constexpr int kExitConfig = 1;
constexpr int kExitNumeric = 2;

// Config keys exposed as --<key> flags, applied in this order after any
// preset or config file.
const std::vector<std::string> kPointKeys{
    "p_s_db", "p_r_db", "p_i_db", "r_i",  "h_sr", "h_sd", "h_rd", "h_i",
    "k_sr",   "k_sd",   "k_rd",   "k_i",  "mc_samples", "seed", "grid_resolution"};
const std::vector<std::string> kSweepKeys{"schemes", "sweep", "from", "to", "step", "jobs"};

struct Flags {
    std::map<std::string, std::string> values;
    std::string config_path;
    std::string out_path;
    std::string format = "csv";

    void bind(CLI::App& app, const std::vector<std::string>& keys) {
        for (const auto& k : keys) app.add_option("--" + k, values[k], "config key " + k);
    }

    void apply(ConfigBuilder& b) const {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw ConfigError(0, "cannot open config '" + config_path + "'");
            std::stringstream text;
            text << in.rdbuf();
            apply_config(b, text.str());
        }
        auto set_if = [&](const std::string& k) {
            const auto it = values.find(k);
            if (it != values.end() && !it->second.empty()) b.set(it->first, it->second, 0);
        };
        set_if("preset");
        for (const auto& k : kSweepKeys) set_if(k);
        for (const auto& k : kPointKeys) set_if(k);
    }

    [[nodiscard]] OutputFormat output_format() const {
        if (format == "csv") return OutputFormat::csv;
        if (format == "plot") return OutputFormat::plot;
        throw ConfigError(0, "format: expected csv or plot, got '" + format + "'");
    }
};

void write_table(const SweepTable& t, const Flags& f) {
    const OutputFormat fmt = f.output_format();
    if (f.out_path.empty()) {
        emit(t, fmt, std::cout);
        return;
    }
    std::ofstream out(f.out_path, std::ios::binary);
    if (!out) throw ConfigError(0, "cannot open output '" + f.out_path + "'");
    emit(t, fmt, out);
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void print_rate(Scheme s, const RateResult& r, std::ostream& out) {
    out << "scheme " << scheme_name(s) << '\n';
    out << "rate " << num(r.rate) << '\n';
    out << "std_error " << num(r.std_error) << '\n';
    const SchemeParams& p = r.argmax;
    out << "gamma " << num(p.gamma) << '\n';
    out << "alpha " << num(p.alpha) << '\n';
    out << "r_q " << num(p.r_q) << '\n';
    for (const auto& [name, c] : p.rho) out << name << ' ' << num(c) << '\n';
    for (const auto& [name, c] : p.rho_bar) out << name << ' ' << num(c) << '\n';
    for (const auto& b : r.branch_values) out << "branch " << b.label << ' ' << num(b.value) << '\n';
}

int run_rate(const Flags& f, const std::string& scheme_text) {
    const auto scheme = parse_scheme(scheme_text);
    if (!scheme) throw ConfigError(0, "scheme: unknown scheme '" + scheme_text + "'");
    ConfigBuilder b;
    f.apply(b);
    b.set("schemes", scheme_text, 0);
    const SweepSpec spec = b.build();
    std::optional<GainSampleBatch> batch;
    if (is_fading(*scheme)) batch = GainSampleBatch::generate(*spec.fading, spec.gains, spec.mc);
    const RateResult r =
        evaluate_scheme(*scheme, spec.gains, spec.budget, batch ? &*batch : nullptr, spec.optimizer);
    if (f.out_path.empty()) {
        print_rate(*scheme, r, std::cout);
    } else {
        std::ofstream out(f.out_path, std::ios::binary);
        if (!out) throw ConfigError(0, "cannot open output '" + f.out_path + "'");
        print_rate(*scheme, r, out);
    }
    return 0;
}

int run_sweep_cmd(const Flags& f) {
    ConfigBuilder b;
    f.apply(b);
    write_table(run_sweep(b.build()), f);
    return 0;
}

int run_figure(Flags f, const std::string& name) {
    if (!figure_preset(name)) {
        std::string known;
        for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
        throw ConfigError(0, "unknown figure '" + name + "' (known: " + known + ")");
    }
    f.values["preset"] = name;
    ConfigBuilder b;
    f.apply(b);
    write_table(run_sweep(b.build()), f);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Achievable rates of relay schemes with structured interference"};
    app.require_subcommand(1);

    Flags rate_flags, sweep_flags, figure_flags;
    std::string scheme_text, figure_name;

    auto* rate = app.add_subcommand("rate", "rate of one scheme at one point");
    rate->add_option("--scheme", scheme_text, "scheme name")->required();
    rate->add_option("--config", rate_flags.config_path, "config file for the point parameters");
    rate->add_option("--out", rate_flags.out_path, "output path (default stdout)");
    rate->add_option("--preset", rate_flags.values["preset"], "start from a figure preset");
    rate_flags.bind(*rate, kPointKeys);

    auto* sweep = app.add_subcommand("sweep", "sweep from a config file and/or flags");
    sweep->add_option("--config", sweep_flags.config_path, "config file");
    sweep->add_option("--out", sweep_flags.out_path, "output path (default stdout)");
    sweep->add_option("--format", sweep_flags.format, "csv or plot");
    sweep->add_option("--preset", sweep_flags.values["preset"], "start from a figure preset");
    sweep_flags.bind(*sweep, kSweepKeys);
    sweep_flags.bind(*sweep, kPointKeys);

    auto* figure = app.add_subcommand("figure", "run a named figure preset");
    figure->add_option("name", figure_name, "preset name")->required();
    figure->add_option("--out", figure_flags.out_path, "output path (default stdout)");
    figure->add_option("--format", figure_flags.format, "csv or plot");
    figure_flags.bind(*figure, kSweepKeys);
    figure_flags.bind(*figure, kPointKeys);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*rate) return run_rate(rate_flags, scheme_text);
        if (*sweep) return run_sweep_cmd(sweep_flags);
        return run_figure(figure_flags, figure_name);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const DomainError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const InfeasibleSpaceError& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumeric;
    }
}
