// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The orthorelay Authors
//
// Achievable rates without fading. Every scheme is a small class that knows
// its decision variables, its search space and its branch values; the
// public rate_* functions run maximize() over it.
//
// Variable names: rho_w1 / rho_w2 are the source correlations with the
// relayed (W') and direct (W'') message codewords, rho_wi with the
// interferer codeword, rho_u with the compression-index codeword; the
// rho_bar_* counterparts are the relay's.
//
// Ball groups whose objective is nondecreasing in one member are searched
// on the sphere, in hyperspherical angles over the first orthant: the
// eliminated member is cos(theta_1). The same happens for coefficients that
// only relax a coupled constraint (rho_u, rho_bar_u). Angles keep the
// objective smooth where the eliminated member reaches 0, which
// sqrt(1 - sum of squares) does not. With h_sd = 0 the source's
// direct-link variables cannot matter and gamma = 0 is optimal, so they are
// pinned.

#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orthorelay/core.hpp"
#include "orthorelay/optimizer.hpp"

namespace orthorelay {

namespace detail {

inline double min_of(std::span<const double> v) {
    double m = v.front();
    for (double x : v) m = std::min(m, x);
    return m;
}

/// Unit vector with nonnegative entries from N angles in [0, pi/2]:
/// c[0] = cos t0, c[k] = sin t0 ... sin t(k-1) cos tk, c[N] = sin t0 ... sin t(N-1).
template <std::size_t N>
std::array<double, N + 1> on_sphere(std::span<const double> t) {
    std::array<double, N + 1> c{};
    double carry = 1.0;
    for (std::size_t k = 0; k < N; ++k) {
        c[k] = carry * std::cos(t[k]);
        carry *= std::sin(t[k]);
    }
    c[N] = carry;
    return c;
}

inline constexpr double kQuarterTurn = 1.5707963267948966;

template <std::size_t N>
std::vector<BranchValue> label_branches(const std::array<const char*, N>& labels,
                                        const std::array<double, N>& values) {
    std::vector<BranchValue> out;
    out.reserve(N);
    for (std::size_t k = 0; k < N; ++k) out.push_back({labels[k], values[k]});
    return out;
}

/// Runs maximize() over a scheme and packages the RateResult. Scheme must
/// expose space(), objective(x), expand(x), values(point), params(point)
/// and a static `labels` array.
template <class Scheme>
RateResult evaluate_scheme(const Scheme& scheme, const OptimizerConfig& cfg) {
    const ParamSpace space = scheme.space();
    const Maximum m = maximize([&](std::span<const double> x) { return scheme.objective(x); },
                               space, cfg);
    const auto point = scheme.expand(m.argmax);
    const auto values = scheme.values(point);
    RateResult r;
    r.rate = pos_part(min_of(values));
    r.argmax = scheme.params(point);
    r.branch_values = label_branches(Scheme::labels, values);
    return r;
}

struct Magnitudes {
    double sr, sd, rd, i;
    explicit Magnitudes(const ChannelGains& g) : sr(g.sr()), sd(g.sd()), rd(g.rd()), i(g.i()) {}
};

}  // namespace detail

// ---------------------------------------------------------------------------
// (D,U): digital interference sharing, MU-DPC at source and relay.

struct DuPoint {
    double gamma = 0.0;
    double rho_w1 = 0.0;
    double rho_w2 = 0.0;
};

class DuScheme {
public:
    static constexpr std::array<const char*, 2> labels{"relay+direct", "sum"};

    DuScheme(const ChannelGains& g, const PowerBudget& b) : h_(g), b_(b) {}

    [[nodiscard]] ParamSpace space() const {
        const double hi = h_.sd > 0.0 ? 1.0 : 0.0;
        return ParamSpace{{{"gamma", 0.0, hi}, {"theta", 0.0, hi * detail::kQuarterTurn}}, {}, {}};
    }
    /// x = (gamma, theta): (rho_w1, rho_w2) = (cos theta, sin theta)
    [[nodiscard]] DuPoint expand(std::span<const double> x) const {
        const auto c = detail::on_sphere<1>(x.subspan(1, 1));
        return {x[0], c[0], c[1]};
    }
    [[nodiscard]] std::array<double, 2> values(const DuPoint& p) const {
        const double s = p.gamma * b_.p_s;
        const double a = h_.rd * std::sqrt(b_.p_r) + h_.sd * p.rho_w1 * std::sqrt(s);
        const double pw1 = a * a;
        const double pw2 = h_.sd * h_.sd * p.rho_w2 * p.rho_w2 * s;
        const double csr = cap_fn(h_.sr * h_.sr * (1.0 - p.gamma) * b_.p_s);
        return {cap_fn(pw2) + pos_part(csr - b_.r_i), cap_fn(pw2 + pw1)};
    }
    [[nodiscard]] double objective(std::span<const double> x) const {
        return detail::min_of(values(expand(x)));
    }
    [[nodiscard]] SchemeParams params(const DuPoint& p) const {
        SchemeParams s;
        s.gamma = p.gamma;
        s.rho = {{"rho_w1", p.rho_w1}, {"rho_w2", p.rho_w2}};
        return s;
    }
    [[nodiscard]] static DuPoint point(const SchemeParams& s) {
        return {s.gamma, s.rho_at("rho_w1"), s.rho_at("rho_w2")};
    }

private:
    detail::Magnitudes h_;
    PowerBudget b_;
};

// ---------------------------------------------------------------------------
// (C,U): compressed interference sharing, unstructured decoding.

struct CuPoint {
    double r_q = 0.0;
    double gamma = 0.0;
    double rho_w1 = 0.0;
    double rho_w2 = 0.0;
    double rho_wi = 0.0;
};

class CuScheme {
public:
    static constexpr std::array<const char*, 2> labels{"relay+direct", "destination"};

    CuScheme(const ChannelGains& g, const PowerBudget& b) : h_(g), b_(b) {}

    /// x = (gamma, theta, phi, r_q); (rho_w1, rho_w2, rho_wi) = on_sphere(theta, phi)
    [[nodiscard]] ParamSpace space() const {
        const double src = h_.sd > 0.0 ? detail::kQuarterTurn : 0.0;
        const double wi = (h_.sd > 0.0 && b_.p_i > 0.0) ? detail::kQuarterTurn : 0.0;
        const double rq_max = cap_fn(h_.sr * h_.sr * b_.p_s);
        ParamSpace sp{{{"gamma", 0.0, src > 0.0 ? 1.0 : 0.0}, {"theta", 0.0, src}, {"phi", 0.0, wi},
                       {"r_q", 0.0, rq_max}},
                      {},
                      {}};
        const auto h = h_;
        const auto b = b_;
        sp.coupled_constraints.push_back(
            {"r_q <= C(|h_sr|^2 (1-gamma) P_S)", [h, b](std::span<const double> x) {
                 return x[3] <= cap_fn(h.sr * h.sr * (1.0 - x[0]) * b.p_s) + kFeasibilityTolerance;
             }});
        return sp;
    }
    [[nodiscard]] CuPoint expand(std::span<const double> x) const {
        const auto c = detail::on_sphere<2>(x.subspan(1, 2));
        return {x[3], x[0], c[0], c[1], c[2]};
    }
    [[nodiscard]] double relay_rate(double gamma) const {
        return cap_fn(h_.sr * h_.sr * (1.0 - gamma) * b_.p_s);
    }
    [[nodiscard]] std::array<double, 2> values(const CuPoint& p) const {
        const double s = p.gamma * b_.p_s;
        double residual = 0.0;
        if (b_.p_i > 0.0) {
            // xi^2 D with xi = |h_i| - |h_sd| rho_wi sqrt(gamma P_S / P_I), D = P_I 2^-r_q
            const double xi_amp = h_.i * std::sqrt(b_.p_i) - h_.sd * p.rho_wi * std::sqrt(s);
            residual = xi_amp * xi_amp * std::exp2(-p.r_q);
        }
        const double pw2 = h_.sd * h_.sd * p.rho_w2 * p.rho_w2 * s;
        const double a = h_.rd * std::sqrt(b_.p_r) + h_.sd * p.rho_w1 * std::sqrt(s);
        const double pw1 = a * a / (1.0 + residual + pw2);
        const double c2 = cap_fn(pw2);
        return {pos_part(relay_rate(p.gamma) - p.r_q) + c2, cap_fn(pw1) + c2};
    }
    [[nodiscard]] double objective(std::span<const double> x) const {
        const auto p = expand(x);
        if (p.r_q > relay_rate(p.gamma) + kFeasibilityTolerance) return kNegativeInfinity;
        return detail::min_of(values(p));
    }
    [[nodiscard]] SchemeParams params(const CuPoint& p) const {
        SchemeParams s;
        s.gamma = p.gamma;
        s.r_q = p.r_q;
        s.rho = {{"rho_w1", p.rho_w1}, {"rho_w2", p.rho_w2}, {"rho_wi", p.rho_wi}};
        return s;
    }
    [[nodiscard]] static CuPoint point(const SchemeParams& s) {
        return {s.r_q, s.gamma, s.rho_at("rho_w1"), s.rho_at("rho_w2"), s.rho_at("rho_wi")};
    }

private:
    detail::Magnitudes h_;
    PowerBudget b_;
};

// ---------------------------------------------------------------------------
// (C,S,1): compressed sharing, relay forwards the quantized interference
// in analog form, destination decodes the interferer's message.

struct Cs1Point {
    double r_q = 0.0;
    double gamma = 0.0;
    double rho_w1 = 0.0;
    double rho_w2 = 0.0;
    double rho_wi = 0.0;
    double rho_bar_w1 = 0.0;
    double rho_bar_wi = 0.0;
};

class Cs1Scheme {
public:
    static constexpr std::array<const char*, 4> labels{"direct+relay", "direct+interference+relay",
                                                       "mac", "mac+interference"};

    Cs1Scheme(const ChannelGains& g, const PowerBudget& b) : h_(g), b_(b) {}

    /// x = (gamma, theta, phi, theta_bar, r_q);
    /// (rho_w1, rho_w2, rho_wi) = on_sphere(theta, phi), (rho_bar_w1, rho_bar_wi) = on_sphere(theta_bar)
    [[nodiscard]] ParamSpace space() const {
        const double src = h_.sd > 0.0 ? 1.0 : 0.0;
        const double rq_max = cap_fn(h_.sr * h_.sr * b_.p_s);
        ParamSpace sp{{{"gamma", 0.0, src},
                       {"theta", 0.0, src * detail::kQuarterTurn},
                       {"phi", 0.0, src * detail::kQuarterTurn},
                       {"theta_bar", 0.0, detail::kQuarterTurn},
                       {"r_q", 0.0, rq_max}},
                      {},
                      {}};
        const auto h = h_;
        const auto b = b_;
        sp.coupled_constraints.push_back(
            {"r_q <= C(|h_sr|^2 (1-gamma) P_S)", [h, b](std::span<const double> x) {
                 return x[4] <= cap_fn(h.sr * h.sr * (1.0 - x[0]) * b.p_s) + kFeasibilityTolerance;
             }});
        return sp;
    }
    [[nodiscard]] Cs1Point expand(std::span<const double> x) const {
        const auto c = detail::on_sphere<2>(x.subspan(1, 2));
        const auto cb = detail::on_sphere<1>(x.subspan(3, 1));
        return {x[4], x[0], c[0], c[1], c[2], cb[0], cb[1]};
    }
    [[nodiscard]] double relay_rate(double gamma) const {
        return cap_fn(h_.sr * h_.sr * (1.0 - gamma) * b_.p_s);
    }
    [[nodiscard]] std::array<double, 4> values(const Cs1Point& p) const {
        const double s = p.gamma * b_.p_s;
        const double q = std::exp2(-p.r_q);
        const double neq = h_.rd * h_.rd * p.rho_bar_wi * p.rho_bar_wi * b_.p_r * q + 1.0;
        const double a1 = h_.rd * p.rho_bar_w1 * std::sqrt(b_.p_r) + h_.sd * p.rho_w1 * std::sqrt(s);
        const double ai = h_.sd * p.rho_wi * std::sqrt(s) +
                          h_.rd * p.rho_bar_wi * std::sqrt(b_.p_r * (1.0 - q)) +
                          h_.i * std::sqrt(b_.p_i);
        const double pw1 = a1 * a1 / neq;
        const double pw2 = h_.sd * h_.sd * p.rho_w2 * p.rho_w2 * s / neq;
        const double pwi = ai * ai / neq;
        const double relay = pos_part(relay_rate(p.gamma) - p.r_q);
        return {cap_fn(pw2) + relay, pos_part(cap_fn(pw2 + pwi) - b_.r_i) + relay,
                cap_fn(pw2 + pw1), pos_part(cap_fn(pw2 + pw1 + pwi) - b_.r_i)};
    }
    [[nodiscard]] double objective(std::span<const double> x) const {
        const auto p = expand(x);
        if (p.r_q > relay_rate(p.gamma) + kFeasibilityTolerance) return kNegativeInfinity;
        return detail::min_of(values(p));
    }
    [[nodiscard]] SchemeParams params(const Cs1Point& p) const {
        SchemeParams s;
        s.gamma = p.gamma;
        s.r_q = p.r_q;
        s.rho = {{"rho_w1", p.rho_w1}, {"rho_w2", p.rho_w2}, {"rho_wi", p.rho_wi}};
        s.rho_bar = {{"rho_bar_w1", p.rho_bar_w1}, {"rho_bar_wi", p.rho_bar_wi}};
        return s;
    }
    [[nodiscard]] static Cs1Point point(const SchemeParams& s) {
        return {s.r_q,
                s.gamma,
                s.rho_at("rho_w1"),
                s.rho_at("rho_w2"),
                s.rho_at("rho_wi"),
                s.rho_bar_at("rho_bar_w1"),
                s.rho_bar_at("rho_bar_wi")};
    }

private:
    detail::Magnitudes h_;
    PowerBudget b_;
};

// ---------------------------------------------------------------------------
// (C,S,2): compressed sharing with Wyner-Ziv binning; the compression index
// is re-encoded (codeword U) by source and relay and decoded first.

struct Cs2Point {
    double r_q = 0.0;
    double gamma = 0.0;
    double rho_w1 = 0.0;
    double rho_w2 = 0.0;
    double rho_wi = 0.0;
    double rho_u = 0.0;
    double rho_bar_w1 = 0.0;
    double rho_bar_u = 0.0;
};

class Cs2Scheme {
public:
    static constexpr std::array<const char*, 4> labels{"direct+relay", "direct+interference+relay",
                                                       "mac", "mac+interference"};

    /// binning=false drops the destination side information (x = 0), which
    /// is the variant the fading analysis uses.
    Cs2Scheme(const ChannelGains& g, const PowerBudget& b, bool binning = true)
        : h_(g), b_(b), binning_(binning) {}

    /// x = (gamma, t1, t2, t3, theta_bar, r_q);
    /// (rho_u, rho_w1, rho_w2, rho_wi) = on_sphere(t1, t2, t3), (rho_bar_u, rho_bar_w1) = on_sphere(theta_bar)
    [[nodiscard]] ParamSpace space() const {
        const double src = h_.sd > 0.0 ? 1.0 : 0.0;
        const double rq_max = cap_fn(h_.sr * h_.sr * b_.p_s);
        ParamSpace sp{{{"gamma", 0.0, src},
                       {"t1", 0.0, src * detail::kQuarterTurn},
                       {"t2", 0.0, src * detail::kQuarterTurn},
                       {"t3", 0.0, src * detail::kQuarterTurn},
                       {"theta_bar", 0.0, detail::kQuarterTurn},
                       {"r_q", 0.0, rq_max}},
                      {},
                      {}};
        const Cs2Scheme self = *this;
        sp.coupled_constraints.push_back(
            {"r_q <= C(|h_sr|^2 (1-gamma) P_S)", [self](std::span<const double> x) {
                 return x[5] <= self.relay_rate(x[0]) + kFeasibilityTolerance;
             }});
        sp.coupled_constraints.push_back(
            {"r_q <= C(P_U / (P_W' + P_W'' + P_WI + 1))", [self](std::span<const double> x) {
                 const auto p = self.expand(x);
                 return p.r_q <= self.powers(p).index_rate + kFeasibilityTolerance;
             }});
        return sp;
    }
    [[nodiscard]] Cs2Point expand(std::span<const double> x) const {
        const auto c = detail::on_sphere<3>(x.subspan(1, 3));
        const auto cb = detail::on_sphere<1>(x.subspan(4, 1));
        return {x[5], x[0], c[1], c[2], c[3], c[0], cb[1], cb[0]};
    }
    [[nodiscard]] double relay_rate(double gamma) const {
        return cap_fn(h_.sr * h_.sr * (1.0 - gamma) * b_.p_s);
    }

    struct Powers {
        double pw1, pw2, pwi, index_rate;
    };
    [[nodiscard]] Powers powers(const Cs2Point& p) const {
        const double s = p.gamma * b_.p_s;
        const double a1 = h_.rd * p.rho_bar_w1 * std::sqrt(b_.p_r) + h_.sd * p.rho_w1 * std::sqrt(s);
        const double ai = h_.sd * p.rho_wi * std::sqrt(s) + h_.i * std::sqrt(b_.p_i);
        const double au = h_.sd * p.rho_u * std::sqrt(s) + h_.rd * p.rho_bar_u * std::sqrt(b_.p_r);
        Powers w{a1 * a1, h_.sd * h_.sd * p.rho_w2 * p.rho_w2 * s, ai * ai, 0.0};
        w.index_rate = cap_fn(au * au / (w.pw1 + w.pw2 + w.pwi + 1.0));
        return w;
    }
    [[nodiscard]] std::array<double, 4> values(const Cs2Point& p) const {
        return values(p, powers(p));
    }
    [[nodiscard]] std::array<double, 4> values(const Cs2Point& p, const Powers& w) const {
        const double x = binning_ ? w.pwi / (w.pw1 + w.pw2 + w.pwi + 1.0) : 0.0;
        // P_I / D with D = P_I 2^-r_q (1 - x) / (1 - x 2^-r_q)
        const double inv_distortion = (std::exp2(p.r_q) - x) / (1.0 - x);
        const double relay = pos_part(relay_rate(p.gamma) - p.r_q);
        return {cap_fn(w.pw2) + relay,
                pos_part(std::log2((1.0 + w.pw2) * inv_distortion + w.pwi) - b_.r_i) + relay,
                cap_fn(w.pw2 + w.pw1),
                pos_part(std::log2((1.0 + w.pw2 + w.pw1) * inv_distortion + w.pwi) - b_.r_i)};
    }
    [[nodiscard]] double objective(std::span<const double> x) const {
        const auto p = expand(x);
        if (p.r_q > relay_rate(p.gamma) + kFeasibilityTolerance) return kNegativeInfinity;
        const auto w = powers(p);
        if (p.r_q > w.index_rate + kFeasibilityTolerance) return kNegativeInfinity;
        return detail::min_of(values(p, w));
    }
    [[nodiscard]] SchemeParams params(const Cs2Point& p) const {
        SchemeParams s;
        s.gamma = p.gamma;
        s.r_q = p.r_q;
        s.rho = {{"rho_w1", p.rho_w1}, {"rho_w2", p.rho_w2}, {"rho_wi", p.rho_wi}, {"rho_u", p.rho_u}};
        s.rho_bar = {{"rho_bar_w1", p.rho_bar_w1}, {"rho_bar_u", p.rho_bar_u}};
        return s;
    }
    [[nodiscard]] static Cs2Point point(const SchemeParams& s) {
        return {s.r_q,
                s.gamma,
                s.rho_at("rho_w1"),
                s.rho_at("rho_w2"),
                s.rho_at("rho_wi"),
                s.rho_at("rho_u"),
                s.rho_bar_at("rho_bar_w1"),
                s.rho_bar_at("rho_bar_u")};
    }

private:
    detail::Magnitudes h_;
    PowerBudget b_;
    bool binning_;
};

// ---------------------------------------------------------------------------
// AID: the relay forwards a quantized version of the DPC codeword.

class AidScheme {
public:
    static constexpr std::array<const char*, 1> labels{"aid"};

    AidScheme(const ChannelGains& g, const PowerBudget& b) : h_(g), b_(b) {}

    [[nodiscard]] ParamSpace space() const { return ParamSpace{{{"gamma", 0.0, 1.0}}, {}, {}}; }
    [[nodiscard]] double expand(std::span<const double> x) const { return x[0]; }
    [[nodiscard]] std::array<double, 1> values(double gamma) const {
        const double d = b_.p_r / (h_.sr * h_.sr * (1.0 - gamma) * b_.p_s + 1.0);
        const double a = h_.sd * std::sqrt(gamma * b_.p_s) + h_.rd * std::sqrt(pos_part(b_.p_r - d));
        return {cap_fn(a * a / (1.0 + h_.rd * h_.rd * d))};
    }
    [[nodiscard]] double objective(std::span<const double> x) const { return values(x[0])[0]; }
    [[nodiscard]] SchemeParams params(double gamma) const {
        SchemeParams s;
        s.gamma = gamma;
        return s;
    }
    [[nodiscard]] static double point(const SchemeParams& s) { return s.gamma; }

private:
    detail::Magnitudes h_;
    PowerBudget b_;
};

// ---------------------------------------------------------------------------
// Public evaluators.

/// No relay: DPC on the direct link removes the known interference.
inline RateResult rate_nr(const ChannelGains& g, const PowerBudget& b) {
    g.validate();
    b.validate();
    RateResult r;
    r.rate = cap_fn(g.sd2() * b.p_s);
    r.argmax.gamma = 1.0;
    r.branch_values = {{"dpc", r.rate}};
    return r;
}

inline RateResult rate_du(const ChannelGains& g, const PowerBudget& b,
                          const OptimizerConfig& cfg = {}) {
    g.validate();
    b.validate();
    return detail::evaluate_scheme(DuScheme(g, b), cfg);
}

/// No interference: partial decode-and-forward capacity, (D,U) with R_I = 0.
inline RateResult rate_ni(const ChannelGains& g, const PowerBudget& b,
                          const OptimizerConfig& cfg = {}) {
    PowerBudget clean = b;
    clean.r_i = 0.0;
    return rate_du(g, clean, cfg);
}

inline RateResult rate_cu(const ChannelGains& g, const PowerBudget& b,
                          const OptimizerConfig& cfg = {}) {
    g.validate();
    b.validate();
    return detail::evaluate_scheme(CuScheme(g, b), cfg);
}

inline RateResult rate_cs1(const ChannelGains& g, const PowerBudget& b,
                           const OptimizerConfig& cfg = {}) {
    g.validate();
    b.validate();
    return detail::evaluate_scheme(Cs1Scheme(g, b), cfg);
}

inline RateResult rate_cs2(const ChannelGains& g, const PowerBudget& b,
                           const OptimizerConfig& cfg = {}, bool binning = true) {
    g.validate();
    b.validate();
    return detail::evaluate_scheme(Cs2Scheme(g, b, binning), cfg);
}

inline RateResult rate_aid(const ChannelGains& g, const PowerBudget& b,
                           const OptimizerConfig& cfg = {}) {
    g.validate();
    b.validate();
    return detail::evaluate_scheme(AidScheme(g, b), cfg);
}

/// Nested-lattice decode-and-forward for the multihop channel; h_sd is
/// ignored.
inline RateResult rate_nldf(const ChannelGains& g, const PowerBudget& b) {
    g.validate();
    b.validate();
    const double x = g.sr2() * b.p_s;
    const double y = g.rd2() * b.p_r;
    RateResult r;
    r.rate = pos_part(std::log2((x * y + x + y + 1.0) / (x + y + 2.0)));
    r.branch_values = {{"nldf", r.rate}};
    return r;
}

// Branch evaluators: recompute a scheme's branch values at a given
// parameter point, e.g. the argmax of a RateResult.

inline std::vector<BranchValue> branches_du(const ChannelGains& g, const PowerBudget& b,
                                            const SchemeParams& s) {
    return detail::label_branches(DuScheme::labels, DuScheme(g, b).values(DuScheme::point(s)));
}
inline std::vector<BranchValue> branches_cu(const ChannelGains& g, const PowerBudget& b,
                                            const SchemeParams& s) {
    return detail::label_branches(CuScheme::labels, CuScheme(g, b).values(CuScheme::point(s)));
}
inline std::vector<BranchValue> branches_cs1(const ChannelGains& g, const PowerBudget& b,
                                             const SchemeParams& s) {
    return detail::label_branches(Cs1Scheme::labels, Cs1Scheme(g, b).values(Cs1Scheme::point(s)));
}
inline std::vector<BranchValue> branches_cs2(const ChannelGains& g, const PowerBudget& b,
                                             const SchemeParams& s, bool binning = true) {
    return detail::label_branches(Cs2Scheme::labels,
                                  Cs2Scheme(g, b, binning).values(Cs2Scheme::point(s)));
}
inline std::vector<BranchValue> branches_aid(const ChannelGains& g, const PowerBudget& b,
                                             const SchemeParams& s) {
    return detail::label_branches(AidScheme::labels, AidScheme(g, b).values(AidScheme::point(s)));
}

// ---------------------------------------------------------------------------
// Parallel S-D and S-R-D links (interference only on R-D).

enum class RdStrategy { TreatAsNoise, JointDecoding };

struct RdLinkRate {
    double value = 0.0;
    RdStrategy strategy = RdStrategy::TreatAsNoise;
};

/// Best R-D rate when the relay does not know the interference: either
/// treat it as noise or decode it jointly with the message.
inline RdLinkRate c_srd_prime(const ChannelGains& g, const SplitPowerBudget& b) {
    g.validate();
    b.validate();
    const double rd = g.rd2() * b.p_r;
    const double in = g.i2() * b.p_i;
    const double noise = cap_fn(rd / (1.0 + in));
    const double joint = std::min(cap_fn(rd), pos_part(cap_fn(rd + in) - b.r_i));
    if (noise >= joint) return {noise, RdStrategy::TreatAsNoise};
    return {joint, RdStrategy::JointDecoding};
}

enum class CapacityRegime {
    /// C(|h_sr|^2 P_SR) >= R_I + C(|h_rd|^2 P_R): (D,U) is optimal.
    DigitalSharing,
    /// C(|h_sr|^2 P_SR) <= C'_SRD: the S-R link is the bottleneck.
    SourceRelayLimited,
};

struct CapacityResult {
    double capacity = 0.0;
    CapacityRegime regime = CapacityRegime::DigitalSharing;
};

/// Capacity of the parallel-link model in the two regimes where it is
/// known; std::nullopt in between. The caller asserts the factorization.
inline std::optional<CapacityResult> capacity_special(const ChannelGains& g,
                                                      const SplitPowerBudget& b) {
    g.validate();
    b.validate();
    const double c_sd = cap_fn(g.sd2() * b.p_sd);
    const double c_sr = cap_fn(g.sr2() * b.p_sr);
    const double c_rd = cap_fn(g.rd2() * b.p_r);
    if (c_sr >= b.r_i + c_rd) return CapacityResult{c_sd + c_rd, CapacityRegime::DigitalSharing};
    if (c_sr <= c_srd_prime(g, b).value) {
        return CapacityResult{c_sd + c_sr, CapacityRegime::SourceRelayLimited};
    }
    return std::nullopt;
}

}  // namespace orthorelay
