// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The orthorelay Authors
//
// Sweep engine: scheme registry, figure presets, plain-text configs and
// CSV / whitespace output.

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "orthorelay/awgn_rates.hpp"
#include "orthorelay/core.hpp"
#include "orthorelay/fading.hpp"
#include "orthorelay/fading_rates.hpp"
#include "orthorelay/optimizer.hpp"

namespace orthorelay {

/// Invalid sweep or config. line() is the 1-based config line, 0 when the
/// problem is not tied to one line.
class ConfigError : public std::runtime_error {
public:
    ConfigError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    [[nodiscard]] int line() const { return line_; }

private:
    int line_;
};

enum class Scheme {
    nr, ni, du, cu, cs1, cs2, aid, nldf,
    f_p2p_u, f_p2p_s, f_du, f_ds, f_cu, f_cs1, f_cs2, f_aid, f_ni,
};

inline constexpr std::string_view kSchemeNames[] = {
    "nr", "ni", "du", "cu", "cs1", "cs2", "aid", "nldf",
    "f_p2p_u", "f_p2p_s", "f_du", "f_ds", "f_cu", "f_cs1", "f_cs2", "f_aid", "f_ni",
};

inline std::string_view scheme_name(Scheme s) { return kSchemeNames[static_cast<int>(s)]; }

inline std::optional<Scheme> parse_scheme(std::string_view name) {
    for (std::size_t k = 0; k < std::size(kSchemeNames); ++k) {
        if (kSchemeNames[k] == name) return static_cast<Scheme>(k);
    }
    return std::nullopt;
}

inline bool is_fading(Scheme s) { return static_cast<int>(s) >= static_cast<int>(Scheme::f_p2p_u); }

/// Schemes whose formulas assume h_sd = 0.
inline bool needs_multihop(Scheme s) {
    switch (s) {
        case Scheme::nldf:
        case Scheme::f_du:
        case Scheme::f_ds:
        case Scheme::f_cu:
        case Scheme::f_cs1:
        case Scheme::f_cs2:
        case Scheme::f_aid:
            return true;
        default:
            return false;
    }
}

enum class SweepVar { p_i_db, r_i, k_factor };

inline std::string_view sweep_var_name(SweepVar v) {
    switch (v) {
        case SweepVar::p_i_db: return "p_i_db";
        case SweepVar::r_i: return "r_i";
        case SweepVar::k_factor: return "k_factor";
    }
    return "";
}

inline std::optional<SweepVar> parse_sweep_var(std::string_view s) {
    for (SweepVar v : {SweepVar::p_i_db, SweepVar::r_i, SweepVar::k_factor}) {
        if (sweep_var_name(v) == s) return v;
    }
    return std::nullopt;
}

struct SweepRange {
    double from = -10.0;
    double to = 30.0;
    double step = 1.0;

    /// from + k * step for k = 0..n, with the last point snapped onto `to`
    /// when it lands within rounding of it.
    [[nodiscard]] std::vector<double> values() const {
        const double span = (to - from) / step;
        const auto n = static_cast<long long>(std::floor(span + 1e-9));
        std::vector<double> v;
        v.reserve(static_cast<std::size_t>(n) + 1);
        for (long long k = 0; k <= n; ++k) v.push_back(from + static_cast<double>(k) * step);
        if (std::abs(v.back() - to) <= 1e-9 * std::max(1.0, std::abs(step))) v.back() = to;
        return v;
    }
};

struct SweepSpec {
    std::vector<Scheme> schemes;
    SweepVar sweep_var = SweepVar::p_i_db;
    SweepRange range;
    ChannelGains gains;
    PowerBudget budget;
    std::optional<FadingSpec> fading;
    MonteCarloCfg mc;
    OptimizerConfig optimizer;
    /// Rows computed concurrently; output order never depends on it.
    int jobs = 1;

    void validate() const {
        if (schemes.empty()) throw ConfigError(0, "no schemes selected");
        if (!std::isfinite(range.from) || !std::isfinite(range.to) || !std::isfinite(range.step)) {
            throw ConfigError(0, "sweep range must be finite");
        }
        if (!(range.step > 0.0)) throw ConfigError(0, "step must be > 0");
        if (range.from > range.to) throw ConfigError(0, "from must be <= to");
        if (jobs < 1) throw ConfigError(0, "jobs must be >= 1");
        try {
            gains.validate();
            budget.validate();
            mc.validate();
            optimizer.validate();
            if (fading) fading->validate();
        } catch (const std::exception& e) {
            throw ConfigError(0, e.what());
        }
        if (sweep_var == SweepVar::k_factor && range.from < 0.0) {
            throw ConfigError(0, "k_factor sweep must start at >= 0");
        }
        for (Scheme s : schemes) {
            const std::string name(scheme_name(s));
            if (is_fading(s) && !fading) {
                throw ConfigError(0, "scheme " + name + " needs a fading spec (set k_sr/k_sd/k_rd/k_i)");
            }
            if (sweep_var == SweepVar::k_factor && !is_fading(s)) {
                throw ConfigError(0, "sweep k_factor does not apply to no-fading scheme " + name);
            }
            if (needs_multihop(s) && !gains.is_multihop()) {
                throw ConfigError(0, "scheme " + name + " needs a multihop channel (h_sd = 0)");
            }
            if (s == Scheme::f_ni && !gains.is_multihop() && gains.has_relay()) {
                throw ConfigError(0, "scheme f_ni needs h_sd = 0 or a relay-free channel (h_sr or h_rd = 0)");
            }
        }
    }
};

/// Dispatches one scheme at one parameter point. `batch` must be non-null
/// for fading schemes.
inline RateResult evaluate_scheme(Scheme s, const ChannelGains& g, const PowerBudget& b,
                                  const GainSampleBatch* batch, const OptimizerConfig& cfg) {
    if (is_fading(s) && batch == nullptr) {
        throw ConfigError(0, "scheme " + std::string(scheme_name(s)) + " needs a fading batch");
    }
    switch (s) {
        case Scheme::nr: return rate_nr(g, b);
        case Scheme::ni: return rate_ni(g, b, cfg);
        case Scheme::du: return rate_du(g, b, cfg);
        case Scheme::cu: return rate_cu(g, b, cfg);
        case Scheme::cs1: return rate_cs1(g, b, cfg);
        case Scheme::cs2: return rate_cs2(g, b, cfg);
        case Scheme::aid: return rate_aid(g, b, cfg);
        case Scheme::nldf: return rate_nldf(g, b);
        case Scheme::f_p2p_u: return rate_fading_p2p_u(*batch, b, cfg);
        case Scheme::f_p2p_s: return rate_fading_p2p_s(*batch, b, cfg);
        case Scheme::f_du: return rate_fading_du(*batch, b, cfg);
        case Scheme::f_ds: return rate_fading_ds(*batch, b, cfg);
        case Scheme::f_cu: return rate_fading_cu(*batch, b, cfg);
        case Scheme::f_cs1: return rate_fading_cs1(*batch, b, cfg);
        case Scheme::f_cs2: return rate_fading_cs2(*batch, b, cfg);
        case Scheme::f_aid: return rate_fading_aid(*batch, b, cfg);
        case Scheme::f_ni: return rate_fading_ni(*batch, g, b);
    }
    throw std::logic_error("evaluate_scheme: unknown scheme");
}

struct Cell {
    double rate = 0.0;
    double std_error = 0.0;
};

struct CsvRow {
    double sweep_value = 0.0;
    std::vector<Cell> cells;  // one per scheme, in SweepSpec order
};

struct SweepTable {
    SweepVar sweep_var = SweepVar::p_i_db;
    std::vector<Scheme> schemes;
    std::vector<CsvRow> rows;

    /// Column of `s`; throws std::out_of_range if the scheme is absent.
    [[nodiscard]] std::vector<double> column(Scheme s) const {
        const auto it = std::find(schemes.begin(), schemes.end(), s);
        if (it == schemes.end()) throw std::out_of_range("SweepTable: scheme not in table");
        const auto k = static_cast<std::size_t>(it - schemes.begin());
        std::vector<double> v;
        for (const auto& r : rows) v.push_back(r.cells[k].rate);
        return v;
    }
    [[nodiscard]] std::vector<double> std_errors(Scheme s) const {
        const auto k = static_cast<std::size_t>(std::find(schemes.begin(), schemes.end(), s) - schemes.begin());
        if (k == schemes.size()) throw std::out_of_range("SweepTable: scheme not in table");
        std::vector<double> v;
        for (const auto& r : rows) v.push_back(r.cells[k].std_error);
        return v;
    }
    [[nodiscard]] std::vector<double> sweep_values() const {
        std::vector<double> v;
        for (const auto& r : rows) v.push_back(r.sweep_value);
        return v;
    }
};

/// Parameters of one sweep point.
struct SweepPoint {
    ChannelGains gains;
    PowerBudget budget;
    std::optional<FadingSpec> fading;
};

inline SweepPoint sweep_point(const SweepSpec& spec, double value) {
    SweepPoint p{spec.gains, spec.budget, spec.fading};
    switch (spec.sweep_var) {
        case SweepVar::p_i_db: p.budget.p_i = db_to_linear(value); break;
        case SweepVar::r_i: p.budget.r_i = value; break;
        case SweepVar::k_factor: p.fading = FadingSpec::uniform(value); break;
    }
    return p;
}

inline CsvRow compute_row(const SweepSpec& spec, double value) {
    const SweepPoint p = sweep_point(spec, value);
    std::optional<GainSampleBatch> batch;
    if (std::any_of(spec.schemes.begin(), spec.schemes.end(), is_fading)) {
        batch = GainSampleBatch::generate(*p.fading, p.gains, spec.mc);
    }
    CsvRow row{value, {}};
    for (Scheme s : spec.schemes) {
        const RateResult r =
            evaluate_scheme(s, p.gains, p.budget, batch ? &*batch : nullptr, spec.optimizer);
        row.cells.push_back({r.rate, r.std_error});
    }
    return row;
}

inline SweepTable run_sweep(const SweepSpec& spec) {
    spec.validate();
    const auto values = spec.range.values();
    SweepTable t{spec.sweep_var, spec.schemes, std::vector<CsvRow>(values.size())};
    const auto workers = static_cast<std::size_t>(std::min<long long>(spec.jobs, static_cast<long long>(values.size())));
    if (workers <= 1) {
        for (std::size_t k = 0; k < values.size(); ++k) t.rows[k] = compute_row(spec, values[k]);
        return t;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(values.size());
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t k = next++; k < values.size(); k = next++) {
                try {
                    t.rows[k] = compute_row(spec, values[k]);
                } catch (...) {
                    errors[k] = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return t;
}

// ---------------------------------------------------------------------------
// Output.

enum class OutputFormat { csv, plot };

namespace detail {

inline std::string fixed6(double v) {
    if (std::abs(v) < 5e-7) v = 0.0;  // no "-0.000000"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

inline std::vector<std::string> header_fields(const SweepTable& t) {
    std::vector<std::string> h{std::string(sweep_var_name(t.sweep_var))};
    for (Scheme s : t.schemes) {
        h.emplace_back(scheme_name(s));
        if (is_fading(s)) h.push_back(std::string(scheme_name(s)) + "_se");
    }
    return h;
}

inline std::vector<std::string> row_fields(const SweepTable& t, const CsvRow& r) {
    std::vector<std::string> f{fixed6(r.sweep_value)};
    for (std::size_t k = 0; k < t.schemes.size(); ++k) {
        f.push_back(fixed6(r.cells[k].rate));
        if (is_fading(t.schemes[k])) f.push_back(fixed6(r.cells[k].std_error));
    }
    return f;
}

inline void write_joined(std::ostream& out, const std::vector<std::string>& fields, char sep) {
    for (std::size_t k = 0; k < fields.size(); ++k) {
        if (k > 0) out << sep;
        out << fields[k];
    }
    out << '\n';
}

}  // namespace detail

/// Comma-separated, header first, LF endings, 6 decimals; fading schemes
/// get a `<name>_se` column right after their rate.
inline void emit_csv(const SweepTable& t, std::ostream& out) {
    if (t.rows.empty()) throw std::invalid_argument("emit_csv: no rows");
    detail::write_joined(out, detail::header_fields(t), ',');
    for (const auto& r : t.rows) detail::write_joined(out, detail::row_fields(t, r), ',');
    if (!out) throw std::runtime_error("emit_csv: write failed");
}

/// Whitespace-separated twin of emit_csv with a '#'-prefixed header, for
/// gnuplot.
inline void emit_plot(const SweepTable& t, std::ostream& out) {
    if (t.rows.empty()) throw std::invalid_argument("emit_plot: no rows");
    out << "# ";
    detail::write_joined(out, detail::header_fields(t), ' ');
    for (const auto& r : t.rows) detail::write_joined(out, detail::row_fields(t, r), ' ');
    if (!out) throw std::runtime_error("emit_plot: write failed");
}

inline void emit(const SweepTable& t, OutputFormat f, std::ostream& out) {
    if (f == OutputFormat::csv) {
        emit_csv(t, out);
    } else {
        emit_plot(t, out);
    }
}

inline std::string to_csv(const SweepTable& t) {
    std::ostringstream s;
    emit_csv(t, s);
    return s.str();
}

// ---------------------------------------------------------------------------
// Figure presets. Names follow the figure labels; aliases use the printed
// figure numbers.

inline const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"fig1", "fig2", "fig3", "fig5",
                                                "fading_fig1", "fading_fig2", "fading_fig3"};
    return names;
}

inline std::string canonical_preset_name(std::string_view name) {
    static const std::map<std::string, std::string, std::less<>> aliases{
        {"fig6", "fig2"}, {"fig7", "fig3"}, {"fig8", "fig5"},
        {"fig9", "fading_fig2"}, {"fig10", "fading_fig1"}, {"fig11", "fading_fig3"}};
    if (const auto it = aliases.find(name); it != aliases.end()) return it->second;
    return std::string(name);
}

inline std::optional<SweepSpec> figure_preset(std::string_view raw_name) {
    const std::string name = canonical_preset_name(raw_name);
    using S = Scheme;
    SweepSpec s;
    s.range = {-10.0, 30.0, 1.0};
    s.budget = {db_to_linear(10.0), db_to_linear(10.0), db_to_linear(10.0), 1.0};
    const std::vector<Scheme> awgn{S::ni, S::du, S::cu, S::cs1, S::cs2, S::aid, S::nr};
    if (name == "fig1") {
        s.schemes = awgn;
        s.gains = ChannelGains::unit();
    } else if (name == "fig2") {
        s.schemes = awgn;
        s.gains = ChannelGains::real(2.0, 1.0, 1.0, 1.0);
    } else if (name == "fig3") {
        s.schemes = awgn;
        s.gains = ChannelGains::real(2.0, 1.0, 1.0, 1.0);
        s.budget.r_i = 3.0;
    } else if (name == "fig5") {
        s.schemes = {S::ni, S::du, S::cu, S::cs1, S::cs2, S::aid, S::nldf};
        s.sweep_var = SweepVar::r_i;
        s.range = {0.0, 4.0, 0.1};
        s.gains = ChannelGains::real(1.0, 0.0, 1.0, 1.0);
    } else if (name == "fading_fig2") {
        s.schemes = {S::f_ni, S::f_p2p_u, S::f_p2p_s};
        s.gains = ChannelGains::real(0.0, 1.0, 0.0, 1.0);
        s.budget = {db_to_linear(5.0), 0.0, db_to_linear(10.0), 1.0};
        s.fading = FadingSpec::uniform(1.0);
    } else if (name == "fading_fig1") {
        s.schemes = {S::f_ni, S::f_p2p_u, S::f_p2p_s};
        s.sweep_var = SweepVar::k_factor;
        s.range = {0.0, 20.0, 1.0};
        s.gains = ChannelGains::real(0.0, 1.0, 0.0, 1.0);
        s.budget = {db_to_linear(5.0), 0.0, db_to_linear(5.0), 0.5};
        s.fading = FadingSpec::uniform(1.0);
    } else if (name == "fading_fig3") {
        s.schemes = {S::f_ni, S::f_du, S::f_ds, S::f_cu, S::f_cs2, S::f_aid};
        s.gains = ChannelGains::real(1.0, 0.0, 1.0, 1.0);
        s.budget = {db_to_linear(10.0), db_to_linear(7.0), db_to_linear(10.0), 0.4};
        s.fading = FadingSpec::uniform(1.0);
    } else {
        return std::nullopt;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Config parsing.

namespace detail {

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

inline double parse_number(const std::string& key, const std::string& v, int line, bool allow_inf = false) {
    if (allow_inf && (v == "inf" || v == "infinity")) return kDeterministicK;
    std::size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(v, &used);
    } catch (const std::exception&) {
        throw ConfigError(line, key + ": cannot parse '" + v + "' as a number");
    }
    if (used != v.size() || !std::isfinite(x)) {
        throw ConfigError(line, key + ": cannot parse '" + v + "' as a number");
    }
    return x;
}

inline long long parse_integer(const std::string& key, const std::string& v, int line) {
    std::size_t used = 0;
    long long x = 0;
    try {
        x = std::stoll(v, &used);
    } catch (const std::exception&) {
        throw ConfigError(line, key + ": cannot parse '" + v + "' as an integer");
    }
    if (used != v.size()) throw ConfigError(line, key + ": cannot parse '" + v + "' as an integer");
    return x;
}

}  // namespace detail

/// Applies key=value settings on top of a base spec (defaults or a preset).
/// Shared by parse_config and the CLI flags.
class ConfigBuilder {
public:
    ConfigBuilder() {
        spec_.range = {-10.0, 30.0, 1.0};
        spec_.budget = {db_to_linear(10.0), db_to_linear(10.0), db_to_linear(10.0), 1.0};
    }

    void use_preset(const std::string& name, int line) {
        auto p = figure_preset(name);
        if (!p) throw ConfigError(line, "unknown preset '" + name + "'");
        spec_ = *p;
        lines_.clear();
    }

    void set(const std::string& key, const std::string& value, int line) {
        using detail::parse_number;
        lines_[key] = line;
        if (key == "preset") {
            use_preset(value, line);
        } else if (key == "schemes") {
            spec_.schemes.clear();
            std::stringstream ss(value);
            std::string item;
            while (std::getline(ss, item, ',')) {
                item = detail::trim(item);
                if (item.empty()) continue;
                const auto s = parse_scheme(item);
                if (!s) throw ConfigError(line, "schemes: unknown scheme '" + item + "'");
                spec_.schemes.push_back(*s);
            }
            if (spec_.schemes.empty()) throw ConfigError(line, "schemes: empty list");
        } else if (key == "sweep") {
            const auto v = parse_sweep_var(value);
            if (!v) throw ConfigError(line, "sweep: unknown variable '" + value + "' (p_i_db, r_i, k_factor)");
            spec_.sweep_var = *v;
        } else if (key == "from") {
            spec_.range.from = parse_number(key, value, line);
        } else if (key == "to") {
            spec_.range.to = parse_number(key, value, line);
        } else if (key == "step") {
            spec_.range.step = parse_number(key, value, line);
            if (!(spec_.range.step > 0.0)) throw ConfigError(line, "step must be > 0");
        } else if (key == "p_s_db") {
            spec_.budget.p_s = db_to_linear(parse_number(key, value, line));
        } else if (key == "p_r_db") {
            spec_.budget.p_r = db_to_linear(parse_number(key, value, line));
        } else if (key == "p_i_db") {
            spec_.budget.p_i = db_to_linear(parse_number(key, value, line));
        } else if (key == "r_i") {
            spec_.budget.r_i = nonneg(key, parse_number(key, value, line), line);
        } else if (key == "h_sr") {
            spec_.gains.h_sr = parse_number(key, value, line);
        } else if (key == "h_sd") {
            spec_.gains.h_sd = parse_number(key, value, line);
        } else if (key == "h_rd") {
            spec_.gains.h_rd = parse_number(key, value, line);
        } else if (key == "h_i") {
            spec_.gains.h_i = parse_number(key, value, line);
        } else if (key == "k_sr" || key == "k_sd" || key == "k_rd" || key == "k_i") {
            const double k = nonneg(key, parse_number(key, value, line, true), line);
            if (!spec_.fading) spec_.fading = FadingSpec{};
            auto& f = *spec_.fading;
            (key == "k_sr" ? f.k_sr : key == "k_sd" ? f.k_sd : key == "k_rd" ? f.k_rd : f.k_i) = k;
        } else if (key == "mc_samples") {
            const long long n = detail::parse_integer(key, value, line);
            if (n < 1) throw ConfigError(line, "mc_samples must be >= 1");
            spec_.mc.samples = static_cast<std::size_t>(n);
        } else if (key == "seed") {
            const long long n = detail::parse_integer(key, value, line);
            if (n < 0) throw ConfigError(line, "seed must be >= 0");
            spec_.mc.seed = static_cast<std::uint64_t>(n);
        } else if (key == "grid_resolution") {
            const double r = parse_number(key, value, line);
            if (!(r > 0.0 && r <= 1.0)) throw ConfigError(line, "grid_resolution must be in (0, 1]");
            spec_.optimizer.grid_resolution = r;
        } else if (key == "jobs") {
            const long long n = detail::parse_integer(key, value, line);
            if (n < 1) throw ConfigError(line, "jobs must be >= 1");
            spec_.jobs = static_cast<int>(n);
        } else {
            throw ConfigError(line, "unknown key '" + key + "'");
        }
    }

    /// Validates and returns the spec. Errors point at the line of the key
    /// most closely tied to them.
    [[nodiscard]] SweepSpec build() const {
        try {
            spec_.validate();
        } catch (const ConfigError& e) {
            throw ConfigError(blame(e.what()), e.what());
        }
        return spec_;
    }

private:
    static double nonneg(const std::string& key, double v, int line) {
        if (v < 0.0) throw ConfigError(line, key + " must be >= 0");
        return v;
    }

    int line_of(const std::string& key) const {
        const auto it = lines_.find(key);
        return it == lines_.end() ? 0 : it->second;
    }

    int blame(const std::string& msg) const {
        if (msg.find("from must be") != std::string::npos) return line_of("to");
        if (msg.find("must start at") != std::string::npos) return line_of("from");
        if (msg.find("fading spec") != std::string::npos || msg.find("sweep k_factor") != std::string::npos ||
            msg.find("multihop") != std::string::npos || msg.find("f_ni") != std::string::npos) {
            return line_of("schemes");
        }
        if (msg.find("no schemes") != std::string::npos) return line_of("schemes");
        return 0;
    }

    SweepSpec spec_;
    std::map<std::string, int> lines_;
};

/// Feeds key=value lines ('#' starts a comment) into a builder. A line
/// holding only a preset name expands that preset; later keys override it.
inline void apply_config(ConfigBuilder& b, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string s = detail::trim(raw);
        if (s.empty()) continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos) {
            if (figure_preset(s)) {
                b.use_preset(s, line);
                continue;
            }
            throw ConfigError(line, "expected key=value or a preset name, got '" + s + "'");
        }
        const std::string key = detail::trim(s.substr(0, eq));
        const std::string value = detail::trim(s.substr(eq + 1));
        if (key.empty()) throw ConfigError(line, "missing key before '='");
        if (value.empty()) throw ConfigError(line, key + ": missing value");
        b.set(key, value, line);
    }
}

inline SweepSpec parse_config(std::string_view text) {
    ConfigBuilder b;
    apply_config(b, text);
    return b.build();
}

}  // namespace orthorelay
