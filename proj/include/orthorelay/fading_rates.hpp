// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The orthorelay Authors
//
// Ergodic rates under Ricean fading, point-to-point and multihop.
//
// Every expectation is a Monte-Carlo mean over one GainSampleBatch that is
// shared by all candidate parameter vectors of a maximize() call (common
// random numbers), so each objective is a deterministic function of its
// parameters. The reported std_error is the standard error of the binding
// branch's expectation.
//
// The inflation factor alpha is optimized over real values in [0, 2]; the
// objectives only depend on Re(alpha) and |alpha|^2. Multihop schemes read
// h_sr, h_rd and h_i only.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "orthorelay/core.hpp"
#include "orthorelay/fading.hpp"
#include "orthorelay/optimizer.hpp"

namespace orthorelay {

/// Upper end of the r_q box for the compression-based fading schemes.
inline constexpr double kMaxFadingRq = 20.0;

struct FadingBranch {
    const char* label;
    double value;  // after the ( . - R)^+ adjustment, if any
    double std_error;
};

namespace detail {

inline double branch_min_value(const std::vector<FadingBranch>& br) {
    double m = br.front().value;
    for (const auto& b : br) m = std::min(m, b.value);
    return m;
}

/// log2 of the DPC ratio with inflation factor alpha, signal power s,
/// residual interference power q and noise-plus-known-interference n:
///   s (s + q + n) / (s q (1 - alpha)^2 + n (alpha^2 q + s)).
/// Zero when s = 0.
inline double dpc_term(double s, double q, double n, double alpha) {
    if (s <= 0.0) return 0.0;
    const double one_minus = 1.0 - alpha;
    return std::log2(s * (s + q + n) / (s * q * one_minus * one_minus + n * (alpha * alpha * q + s)));
}

inline Estimate link_capacity(const std::vector<double>& gain2, double power, const char* what) {
    Accumulator acc;
    for (double g : gain2) acc.add(cap_fn(g * power));
    return acc.finish(gain2.size(), what);
}

/// Packages a maximize() run over a fading scheme. Scheme exposes space(),
/// objective(x), branches(x) and params(x).
template <class Scheme>
RateResult evaluate_fading(const Scheme& scheme, const OptimizerConfig& cfg) {
    const Maximum m = maximize([&](std::span<const double> x) { return scheme.objective(x); },
                               scheme.space(), cfg);
    const auto br = scheme.branches(m.argmax);
    RateResult r;
    std::size_t binding = 0;
    for (std::size_t k = 0; k < br.size(); ++k) {
        r.branch_values.push_back({br[k].label, br[k].value});
        if (br[k].value < br[binding].value) binding = k;
    }
    r.rate = pos_part(br[binding].value);
    r.std_error = br[binding].std_error;
    r.argmax = scheme.params(m.argmax);
    return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Point-to-point (no relay): source with the interferer's codeword.

class FadingP2pUnstructured {
public:
    FadingP2pUnstructured(const GainSampleBatch& batch, const PowerBudget& b) : h_(batch), b_(b) {}

    [[nodiscard]] ParamSpace space() const { return ParamSpace{{{"alpha", 0.0, 2.0}}, {}, {}}; }
    [[nodiscard]] std::vector<FadingBranch> branches(std::span<const double> x) const {
        Accumulator acc;
        for (std::size_t j = 0; j < h_.size(); ++j) {
            acc.add(detail::dpc_term(h_.sd2[j] * b_.p_s, h_.i2[j] * b_.p_i, 1.0, x[0]));
        }
        const Estimate e = acc.finish(h_.size(), "rate_fading_p2p_u");
        return {{"dpc", e.mean, e.std_error}};
    }
    [[nodiscard]] double objective(std::span<const double> x) const { return branches(x)[0].value; }
    [[nodiscard]] SchemeParams params(std::span<const double> x) const {
        SchemeParams s;
        s.alpha = x[0];
        return s;
    }

private:
    const GainSampleBatch& h_;
    PowerBudget b_;
};

/// x = (rho_i, rho_i_prime); rho = sqrt(1 - rho_i^2 - rho_i_prime^2).
class FadingP2pStructured {
public:
    FadingP2pStructured(const GainSampleBatch& batch, const PowerBudget& b) : h_(batch), b_(b) {}

    [[nodiscard]] ParamSpace space() const {
        return ParamSpace{{{"rho_i", 0.0, 1.0}, {"rho_i_prime", 0.0, 1.0}}, {{0, 1}}, {}};
    }
    [[nodiscard]] std::vector<FadingBranch> branches(std::span<const double> x) const {
        const double ri = x[0], rip = x[1];
        const double rho2 = std::max(0.0, 1.0 - ri * ri - rip * rip);
        const double cross = 2.0 * ri * std::sqrt(b_.p_s * b_.p_i);
        Accumulator direct, forwarded;
        for (std::size_t j = 0; j < h_.size(); ++j) {
            const double own = h_.sd2[j] * rho2 * b_.p_s;
            const double coherent =
                h_.sd2[j] * ri * ri * b_.p_s + h_.i2[j] * b_.p_i + cross * h_.re_sd_i[j];
            direct.add(cap_fn(own));
            forwarded.add(cap_fn(own + h_.sd2[j] * rip * rip * b_.p_s + coherent));
        }
        const Estimate e1 = direct.finish(h_.size(), "rate_fading_p2p_s");
        const Estimate e2 = forwarded.finish(h_.size(), "rate_fading_p2p_s");
        return {{"message", e1.mean, e1.std_error},
                {"message+interference", pos_part(e2.mean - b_.r_i), e2.std_error}};
    }
    [[nodiscard]] double objective(std::span<const double> x) const {
        return detail::branch_min_value(branches(x));
    }
    [[nodiscard]] SchemeParams params(std::span<const double> x) const {
        SchemeParams s;
        s.rho = {{"rho", detail::sphere_rest(x[0] * x[0] + x[1] * x[1])},
                 {"rho_i", x[0]},
                 {"rho_i_prime", x[1]}};
        return s;
    }

private:
    const GainSampleBatch& h_;
    PowerBudget b_;
};

// ---------------------------------------------------------------------------
// Multihop (h_sd = 0).

class FadingDu {
public:
    FadingDu(const GainSampleBatch& batch, const PowerBudget& b)
        : h_(batch), b_(b), sr_(detail::link_capacity(batch.sr2, b.p_s, "rate_fading_du")) {}

    [[nodiscard]] ParamSpace space() const { return ParamSpace{{{"alpha", 0.0, 2.0}}, {}, {}}; }
    [[nodiscard]] std::vector<FadingBranch> branches(std::span<const double> x) const {
        Accumulator acc;
        for (std::size_t j = 0; j < h_.size(); ++j) {
            acc.add(detail::dpc_term(h_.rd2[j] * b_.p_r, h_.i2[j] * b_.p_i, 1.0, x[0]));
        }
        const Estimate e = acc.finish(h_.size(), "rate_fading_du");
        return {{"source-relay", pos_part(sr_.mean - b_.r_i), sr_.std_error},
                {"relay-destination", e.mean, e.std_error}};
    }
    [[nodiscard]] double objective(std::span<const double> x) const {
        return detail::branch_min_value(branches(x));
    }
    [[nodiscard]] SchemeParams params(std::span<const double> x) const {
        SchemeParams s;
        s.alpha = x[0];
        return s;
    }

private:
    const GainSampleBatch& h_;
    PowerBudget b_;
    Estimate sr_;
};

/// x = (rho_bar_i, rho_bar_i_prime); rho_bar on the sphere.
class FadingDs {
public:
    FadingDs(const GainSampleBatch& batch, const PowerBudget& b)
        : h_(batch), b_(b), sr_(detail::link_capacity(batch.sr2, b.p_s, "rate_fading_ds")) {}

    [[nodiscard]] ParamSpace space() const {
        return ParamSpace{{{"rho_bar_i", 0.0, 1.0}, {"rho_bar_i_prime", 0.0, 1.0}}, {{0, 1}}, {}};
    }
    [[nodiscard]] std::vector<FadingBranch> branches(std::span<const double> x) const {
        const double ri = x[0], rip = x[1];
        const double rho2 = std::max(0.0, 1.0 - ri * ri - rip * rip);
        const double cross = 2.0 * ri * std::sqrt(b_.p_r * b_.p_i);
        Accumulator direct, forwarded;
        for (std::size_t j = 0; j < h_.size(); ++j) {
            const double own = h_.rd2[j] * rho2 * b_.p_r;
            const double coherent =
                h_.rd2[j] * ri * ri * b_.p_r + h_.i2[j] * b_.p_i + cross * h_.re_rd_i[j];
            direct.add(cap_fn(own));
            forwarded.add(cap_fn(own + h_.rd2[j] * rip * rip * b_.p_r + coherent));
        }
        const Estimate e1 = direct.finish(h_.size(), "rate_fading_ds");
        const Estimate e2 = forwarded.finish(h_.size(), "rate_fading_ds");
        return {{"source-relay", pos_part(sr_.mean - b_.r_i), sr_.std_error},
                {"relay-destination", e1.mean, e1.std_error},
                {"relay-destination+interference", pos_part(e2.mean - b_.r_i), e2.std_error}};
    }
    [[nodiscard]] double objective(std::span<const double> x) const {
        return detail::branch_min_value(branches(x));
    }
    [[nodiscard]] SchemeParams params(std::span<const double> x) const {
        SchemeParams s;
        s.rho_bar = {{"rho_bar", detail::sphere_rest(x[0] * x[0] + x[1] * x[1])},
                     {"rho_bar_i", x[0]},
                     {"rho_bar_i_prime", x[1]}};
        return s;
    }

private:
    const GainSampleBatch& h_;
    PowerBudget b_;
    Estimate sr_;
};

/// x = (alpha, r_q). r_q beyond E[C(|h_SR|^2 P_S)] zeroes the first
/// branch, so the box stops there (and at kMaxFadingRq).
class FadingCu {
public:
    FadingCu(const GainSampleBatch& batch, const PowerBudget& b)
        : h_(batch), b_(b), sr_(detail::link_capacity(batch.sr2, b.p_s, "rate_fading_cu")) {}

    [[nodiscard]] ParamSpace space() const {
        const double rq_hi = b_.p_i > 0.0 ? std::min(kMaxFadingRq, sr_.mean) : 0.0;
        return ParamSpace{{{"alpha", 0.0, 2.0}, {"r_q", 0.0, rq_hi}}, {}, {}};
    }
    [[nodiscard]] std::vector<FadingBranch> branches(std::span<const double> x) const {
        const double alpha = x[0], r_q = x[1];
        const double d = b_.p_i * std::exp2(-r_q);
        const double residual = b_.p_i - d;
        Accumulator acc;
        for (std::size_t j = 0; j < h_.size(); ++j) {
            const double n = h_.i2[j] * d + 1.0;
            acc.add(detail::dpc_term(h_.rd2[j] * b_.p_r, h_.i2[j] * residual, n, alpha));
        }
        const Estimate e = acc.finish(h_.size(), "rate_fading_cu");
        return {{"source-relay", pos_part(sr_.mean - r_q), sr_.std_error},
                {"relay-destination", e.mean, e.std_error}};
    }
    [[nodiscard]] double objective(std::span<const double> x) const {
        return detail::branch_min_value(branches(x));
    }
    [[nodiscard]] SchemeParams params(std::span<const double> x) const {
        SchemeParams s;
        s.alpha = x[0];
        s.r_q = x[1];
        return s;
    }

private:
    const GainSampleBatch& h_;
    PowerBudget b_;
    Estimate sr_;
};

/// x = (rho_bar_i, rho_bar_i_prime, r_q); rho_bar on the sphere.
class FadingCs1 {
public:
    FadingCs1(const GainSampleBatch& batch, const PowerBudget& b)
        : h_(batch), b_(b), sr_(detail::link_capacity(batch.sr2, b.p_s, "rate_fading_cs1")) {}

    [[nodiscard]] ParamSpace space() const {
        return ParamSpace{{{"rho_bar_i", 0.0, 1.0},
                           {"rho_bar_i_prime", 0.0, 1.0},
                           {"r_q", 0.0, std::min(kMaxFadingRq, sr_.mean)}},
                          {{0, 1}},
                          {}};
    }
    [[nodiscard]] std::vector<FadingBranch> branches(std::span<const double> x) const {
        const double ri = x[0], rip = x[1], r_q = x[2];
        const double rho2 = std::max(0.0, 1.0 - ri * ri - rip * rip);
        const double q = std::exp2(-r_q);
        const double cross = 2.0 * ri * std::sqrt(b_.p_r * (1.0 - q) * b_.p_i);
        Accumulator own_acc, fwd_acc;
        for (std::size_t j = 0; j < h_.size(); ++j) {
            const double n = h_.rd2[j] * (ri * ri + rip * rip) * b_.p_r * q + 1.0;
            const double own = h_.rd2[j] * rho2 * b_.p_r;
            const double coherent = h_.rd2[j] * ri * ri * b_.p_r * (1.0 - q) + h_.i2[j] * b_.p_i +
                                    cross * h_.re_rd_i[j];
            own_acc.add(cap_fn(own / n));
            fwd_acc.add(cap_fn((own + h_.rd2[j] * rip * rip * b_.p_r * (1.0 - q) + coherent) / n));
        }
        const Estimate e1 = own_acc.finish(h_.size(), "rate_fading_cs1");
        const Estimate e2 = fwd_acc.finish(h_.size(), "rate_fading_cs1");
        return {{"source-relay", pos_part(sr_.mean - r_q), sr_.std_error},
                {"relay-destination", e1.mean, e1.std_error},
                {"relay-destination+interference", pos_part(e2.mean - b_.r_i), e2.std_error}};
    }
    [[nodiscard]] double objective(std::span<const double> x) const {
        return detail::branch_min_value(branches(x));
    }
    [[nodiscard]] SchemeParams params(std::span<const double> x) const {
        SchemeParams s;
        s.r_q = x[2];
        s.rho_bar = {{"rho_bar", detail::sphere_rest(x[0] * x[0] + x[1] * x[1])},
                     {"rho_bar_i", x[0]},
                     {"rho_bar_i_prime", x[1]}};
        return s;
    }

private:
    const GainSampleBatch& h_;
    PowerBudget b_;
    Estimate sr_;
};

/// x = (rho_bar, r_q); rho_bar_u = sqrt(1 - rho_bar^2) only feeds the
/// compression-index constraint. No binning.
class FadingCs2 {
public:
    FadingCs2(const GainSampleBatch& batch, const PowerBudget& b)
        : h_(batch), b_(b), sr_(detail::link_capacity(batch.sr2, b.p_s, "rate_fading_cs2")) {}

    [[nodiscard]] ParamSpace space() const {
        ParamSpace sp{{{"rho_bar", 0.0, 1.0}, {"r_q", 0.0, std::min(kMaxFadingRq, sr_.mean)}}, {}, {}};
        const FadingCs2 self = *this;
        sp.coupled_constraints.push_back(
            {"r_q <= E[C(|h_rd rho_bar_u|^2 P_R / (|h_rd rho_bar|^2 P_R + |h_i|^2 P_I + 1))]",
             [self](std::span<const double> x) {
                 return x[1] <= self.index_rate(x[0]) + kFeasibilityTolerance;
             }});
        return sp;
    }
    [[nodiscard]] double index_rate(double rho_bar) const {
        const double u2 = std::max(0.0, 1.0 - rho_bar * rho_bar);
        Accumulator acc;
        for (std::size_t j = 0; j < h_.size(); ++j) {
            acc.add(cap_fn(h_.rd2[j] * u2 * b_.p_r /
                           (h_.rd2[j] * rho_bar * rho_bar * b_.p_r + h_.i2[j] * b_.p_i + 1.0)));
        }
        return acc.finish(h_.size(), "rate_fading_cs2").mean;
    }
    [[nodiscard]] std::vector<FadingBranch> branches(std::span<const double> x) const {
        const double rb = x[0], r_q = x[1];
        const double scale = std::exp2(r_q);
        Accumulator own_acc, fwd_acc;
        for (std::size_t j = 0; j < h_.size(); ++j) {
            const double own = h_.rd2[j] * rb * rb * b_.p_r;
            own_acc.add(cap_fn(own));
            fwd_acc.add(std::log2((own + 1.0) * scale + h_.i2[j] * b_.p_i));
        }
        const Estimate e1 = own_acc.finish(h_.size(), "rate_fading_cs2");
        const Estimate e2 = fwd_acc.finish(h_.size(), "rate_fading_cs2");
        return {{"source-relay", pos_part(sr_.mean - r_q), sr_.std_error},
                {"relay-destination", e1.mean, e1.std_error},
                {"relay-destination+interference", pos_part(e2.mean - b_.r_i), e2.std_error}};
    }
    [[nodiscard]] double objective(std::span<const double> x) const {
        if (x[1] > index_rate(x[0]) + kFeasibilityTolerance) return kNegativeInfinity;
        return detail::branch_min_value(branches(x));
    }
    [[nodiscard]] SchemeParams params(std::span<const double> x) const {
        SchemeParams s;
        s.r_q = x[1];
        s.rho_bar = {{"rho_bar", x[0]}, {"rho_bar_u", detail::sphere_rest(x[0] * x[0])}};
        return s;
    }

private:
    const GainSampleBatch& h_;
    PowerBudget b_;
    Estimate sr_;
};

/// x = (alpha). r_q is fixed to the estimate of E[C(|h_SR|^2 P_S)].
class FadingAid {
public:
    FadingAid(const GainSampleBatch& batch, const PowerBudget& b)
        : h_(batch), b_(b), r_q_(detail::link_capacity(batch.sr2, b.p_s, "rate_fading_aid").mean) {}

    [[nodiscard]] ParamSpace space() const { return ParamSpace{{{"alpha", 0.0, 2.0}}, {}, {}}; }
    [[nodiscard]] std::vector<FadingBranch> branches(std::span<const double> x) const {
        const double d = b_.p_r * std::exp2(-r_q_);
        Accumulator acc;
        for (std::size_t j = 0; j < h_.size(); ++j) {
            const double n = h_.rd2[j] * d + 1.0;
            acc.add(detail::dpc_term(h_.rd2[j] * (b_.p_r - d), h_.i2[j] * b_.p_i, n, x[0]));
        }
        const Estimate e = acc.finish(h_.size(), "rate_fading_aid");
        return {{"aid", e.mean, e.std_error}};
    }
    [[nodiscard]] double objective(std::span<const double> x) const { return branches(x)[0].value; }
    [[nodiscard]] SchemeParams params(std::span<const double> x) const {
        SchemeParams s;
        s.alpha = x[0];
        s.r_q = r_q_;
        return s;
    }

private:
    const GainSampleBatch& h_;
    PowerBudget b_;
    double r_q_;
};

// ---------------------------------------------------------------------------
// Public evaluators. The batch overloads let several schemes share one
// batch; the spec overloads draw it from (spec, gains, mc).

inline RateResult rate_fading_p2p_u(const GainSampleBatch& h, const PowerBudget& b,
                                    const OptimizerConfig& cfg = {}) {
    b.validate();
    return detail::evaluate_fading(FadingP2pUnstructured(h, b), cfg);
}
inline RateResult rate_fading_p2p_s(const GainSampleBatch& h, const PowerBudget& b,
                                    const OptimizerConfig& cfg = {}) {
    b.validate();
    return detail::evaluate_fading(FadingP2pStructured(h, b), cfg);
}
inline RateResult rate_fading_du(const GainSampleBatch& h, const PowerBudget& b,
                                 const OptimizerConfig& cfg = {}) {
    b.validate();
    return detail::evaluate_fading(FadingDu(h, b), cfg);
}
inline RateResult rate_fading_ds(const GainSampleBatch& h, const PowerBudget& b,
                                 const OptimizerConfig& cfg = {}) {
    b.validate();
    return detail::evaluate_fading(FadingDs(h, b), cfg);
}
inline RateResult rate_fading_cu(const GainSampleBatch& h, const PowerBudget& b,
                                 const OptimizerConfig& cfg = {}) {
    b.validate();
    return detail::evaluate_fading(FadingCu(h, b), cfg);
}
inline RateResult rate_fading_cs1(const GainSampleBatch& h, const PowerBudget& b,
                                  const OptimizerConfig& cfg = {}) {
    b.validate();
    return detail::evaluate_fading(FadingCs1(h, b), cfg);
}
inline RateResult rate_fading_cs2(const GainSampleBatch& h, const PowerBudget& b,
                                  const OptimizerConfig& cfg = {}) {
    b.validate();
    return detail::evaluate_fading(FadingCs2(h, b), cfg);
}
inline RateResult rate_fading_aid(const GainSampleBatch& h, const PowerBudget& b,
                                  const OptimizerConfig& cfg = {}) {
    b.validate();
    return detail::evaluate_fading(FadingAid(h, b), cfg);
}

/// min{E[C(|h_SR|^2 P_S)], E[C(|h_RD|^2 P_R)]}.
inline RateResult rate_fading_ni_multihop(const GainSampleBatch& h, const PowerBudget& b) {
    b.validate();
    const Estimate sr = detail::link_capacity(h.sr2, b.p_s, "rate_fading_ni_multihop");
    const Estimate rd = detail::link_capacity(h.rd2, b.p_r, "rate_fading_ni_multihop");
    RateResult r;
    r.branch_values = {{"source-relay", sr.mean}, {"relay-destination", rd.mean}};
    const Estimate& binding = rd.mean < sr.mean ? rd : sr;
    r.rate = binding.mean;
    r.std_error = binding.std_error;
    return r;
}

/// No-interference bound for the topology of `g`: the multihop bound when
/// h_sd = 0, E[C(|h_SD|^2 P_S)] when the relay is absent.
inline RateResult rate_fading_ni(const GainSampleBatch& h, const ChannelGains& g,
                                 const PowerBudget& b) {
    if (g.is_multihop()) return rate_fading_ni_multihop(h, b);
    if (!g.has_relay()) {
        b.validate();
        const Estimate sd = detail::link_capacity(h.sd2, b.p_s, "rate_fading_ni");
        RateResult r;
        r.rate = sd.mean;
        r.std_error = sd.std_error;
        r.branch_values = {{"source-destination", sd.mean}};
        return r;
    }
    throw DomainError("rate_fading_ni: needs a multihop (h_sd = 0) or relay-free (h_sr or h_rd = 0) channel");
}

#define ORTHORELAY_FADING_SPEC_OVERLOAD(name)                                                 \
    inline RateResult name(const FadingSpec& spec, const ChannelGains& g, const PowerBudget& b, \
                           const MonteCarloCfg& mc = {}, const OptimizerConfig& cfg = {}) {   \
        return name(GainSampleBatch::generate(spec, g, mc), b, cfg);                           \
    }

ORTHORELAY_FADING_SPEC_OVERLOAD(rate_fading_p2p_u)
ORTHORELAY_FADING_SPEC_OVERLOAD(rate_fading_p2p_s)
ORTHORELAY_FADING_SPEC_OVERLOAD(rate_fading_du)
ORTHORELAY_FADING_SPEC_OVERLOAD(rate_fading_ds)
ORTHORELAY_FADING_SPEC_OVERLOAD(rate_fading_cu)
ORTHORELAY_FADING_SPEC_OVERLOAD(rate_fading_cs1)
ORTHORELAY_FADING_SPEC_OVERLOAD(rate_fading_cs2)
ORTHORELAY_FADING_SPEC_OVERLOAD(rate_fading_aid)

#undef ORTHORELAY_FADING_SPEC_OVERLOAD

inline RateResult rate_fading_ni_multihop(const FadingSpec& spec, const ChannelGains& g,
                                          const PowerBudget& b, const MonteCarloCfg& mc = {}) {
    return rate_fading_ni_multihop(GainSampleBatch::generate(spec, g, mc), b);
}

inline RateResult rate_fading_ni(const FadingSpec& spec, const ChannelGains& g, const PowerBudget& b,
                                 const MonteCarloCfg& mc = {}) {
    return rate_fading_ni(GainSampleBatch::generate(spec, g, mc), g, b);
}

}  // namespace orthorelay
