// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The orthorelay Authors
//
// Ricean gain sampling and the Monte-Carlo expectation engine.
//
// Draws are counter-based: the normal pair behind sample n of link L is a
// pure function of (seed, L, n), so a batch is reproducible bit for bit and
// independent of generation order.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "orthorelay/core.hpp"

namespace orthorelay {

/// K-factor sentinel for a deterministic (line-of-sight only) link.
inline constexpr double kDeterministicK = std::numeric_limits<double>::infinity();

struct FadingSpec {
    double k_sr = 1.0;
    double k_sd = 1.0;
    double k_rd = 1.0;
    double k_i = 1.0;

    static FadingSpec uniform(double k) { return {k, k, k, k}; }
    static FadingSpec deterministic() { return uniform(kDeterministicK); }

    [[nodiscard]] bool is_deterministic() const {
        return std::isinf(k_sr) && std::isinf(k_sd) && std::isinf(k_rd) && std::isinf(k_i);
    }

    void validate() const {
        for (double k : {k_sr, k_sd, k_rd, k_i}) {
            if (std::isnan(k) || k < 0.0) throw DomainError("FadingSpec: K-factor must be >= 0");
        }
    }
};

/// Line-of-sight amplitude mu (real) and scatter variance sigma^2, with
/// mu^2 + sigma^2 = 1.
struct RiceanParams {
    double mu = 1.0;
    double sigma2 = 0.0;
};

inline RiceanParams ricean_params(double k) {
    if (std::isnan(k) || k < 0.0) throw DomainError("ricean_params: K-factor must be >= 0");
    if (std::isinf(k)) return {1.0, 0.0};
    return {std::sqrt(k / (1.0 + k)), 1.0 / (1.0 + k)};
}

struct MonteCarloCfg {
    std::size_t samples = 100000;
    std::uint64_t seed = 42;

    void validate() const {
        if (samples < 1) throw DomainError("MonteCarloCfg: samples must be >= 1");
    }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace detail

/// Counter-based stream of uniforms and normals keyed by (seed, stream id).
class CounterStream {
public:
    CounterStream(std::uint64_t seed, std::uint64_t stream)
        : key_(detail::splitmix64(seed ^ detail::splitmix64(stream))) {}

    /// Uniform on (0, 1].
    double uniform() {
        const std::uint64_t bits = detail::splitmix64(key_ + counter_++ * 0xd1b54a32d192ed03ULL);
        return (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Two independent standard normals (Box-Muller).
    std::complex<double> normal_pair() {
        const double u1 = uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// h = mu + z with z ~ CN(0, sigma^2). K = infinity returns 1 exactly.
inline std::complex<double> sample_ricean(double k, CounterStream& stream) {
    const RiceanParams p = ricean_params(k);
    if (p.sigma2 == 0.0) return {p.mu, 0.0};
    return p.mu + std::sqrt(p.sigma2 / 2.0) * stream.normal_pair();
}

struct GainSample {
    std::complex<double> h_sr, h_sd, h_rd, h_i;
};

/// Per-link gain arrays plus the derived quantities every rate formula
/// needs: squared magnitudes and the cross terms Re(h_x conj(h_i)).
class GainSampleBatch {
public:
    std::vector<std::complex<double>> h_sr, h_sd, h_rd, h_i;
    std::vector<double> sr2, sd2, rd2, i2;
    std::vector<double> re_sd_i, re_rd_i;

    /// Sample n of link L is scale_L * (mu_L + z_L). A fully deterministic
    /// spec yields a one-sample batch, since every draw would be identical.
    static GainSampleBatch generate(const FadingSpec& spec, const ChannelGains& scale,
                                    const MonteCarloCfg& mc) {
        spec.validate();
        scale.validate();
        mc.validate();
        const std::size_t n = spec.is_deterministic() ? 1 : mc.samples;
        GainSampleBatch b;
        auto link = [&](double k, std::complex<double> g, std::uint64_t id) {
            std::vector<std::complex<double>> v(n);
            for (std::size_t j = 0; j < n; ++j) {
                CounterStream s(mc.seed, (id << 40) | static_cast<std::uint64_t>(j));
                v[j] = g * sample_ricean(k, s);
            }
            return v;
        };
        b.h_sr = link(spec.k_sr, scale.h_sr, 0);
        b.h_sd = link(spec.k_sd, scale.h_sd, 1);
        b.h_rd = link(spec.k_rd, scale.h_rd, 2);
        b.h_i = link(spec.k_i, scale.h_i, 3);
        b.derive();
        return b;
    }

    [[nodiscard]] std::size_t size() const { return h_sr.size(); }
    [[nodiscard]] GainSample at(std::size_t n) const { return {h_sr[n], h_sd[n], h_rd[n], h_i[n]}; }

private:
    void derive() {
        const std::size_t n = size();
        sr2.resize(n);
        sd2.resize(n);
        rd2.resize(n);
        i2.resize(n);
        re_sd_i.resize(n);
        re_rd_i.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            sr2[j] = std::norm(h_sr[j]);
            sd2[j] = std::norm(h_sd[j]);
            rd2[j] = std::norm(h_rd[j]);
            i2[j] = std::norm(h_i[j]);
            re_sd_i[j] = std::real(h_sd[j] * std::conj(h_i[j]));
            re_rd_i[j] = std::real(h_rd[j] * std::conj(h_i[j]));
        }
    }
};

/// Sample mean with its standard error (sample std / sqrt(N)).
struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;
};

/// Running sum and sum of squares; finish() throws NumericError if any
/// accumulated value was not finite.
class Accumulator {
public:
    void add(double v) {
        sum_ += v;
        sumsq_ += v * v;
    }
    [[nodiscard]] Estimate finish(std::size_t n, const char* what) const {
        if (!std::isfinite(sum_) || !std::isfinite(sumsq_)) {
            throw NumericError(std::string(what) + ": non-finite Monte-Carlo sample");
        }
        const double dn = static_cast<double>(n);
        const double mean = sum_ / dn;
        if (n < 2) return {mean, 0.0};
        const double var = std::max(0.0, (sumsq_ - dn * mean * mean) / (dn - 1.0));
        return {mean, std::sqrt(var / dn)};
    }

private:
    double sum_ = 0.0;
    double sumsq_ = 0.0;
};

/// Mean and standard error of f over the batch; f receives
/// (batch, sample index).
template <class F>
Estimate mc_estimate(F&& f, const GainSampleBatch& batch) {
    Accumulator acc;
    const std::size_t n = batch.size();
    for (std::size_t j = 0; j < n; ++j) acc.add(f(batch, j));
    return acc.finish(n, "mc_estimate");
}

template <class F>
double mc_expectation(F&& f, const GainSampleBatch& batch) {
    return mc_estimate(std::forward<F>(f), batch).mean;
}

}  // namespace orthorelay
