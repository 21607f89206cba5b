// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The orthorelay Authors
//
// Shared domain types and elementary rate functions for the orthogonal-link
// relay channel with an interferer whose codeword is known at the source.
//
// Conventions used throughout the library:
//   * noise variance is 1 at every receiver, so every power is an SNR;
//   * powers are linear, rates are bits per channel use (log base 2);
//   * the no-fading rate formulas only see |h|.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orthorelay {

/// Thrown when an elementary function is called outside its domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Thrown when a numeric evaluation produces a non-finite or otherwise
/// unusable value (e.g. a Monte-Carlo sample that is NaN).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kNegativeInfinity = -std::numeric_limits<double>::infinity();

/// C(x) = log2(1 + x). Values in [-1e-12, 0) are treated as 0.
inline double cap_fn(double x) {
    if (x < 0.0) {
        if (x < -1e-12) {
            throw DomainError("cap_fn: argument " + std::to_string(x) + " is negative");
        }
        return 0.0;
    }
    return std::log2(1.0 + x);
}

/// (x)^+
inline double pos_part(double x) noexcept { return x > 0.0 ? x : 0.0; }

inline double db_to_linear(double x_db) noexcept { return std::pow(10.0, x_db / 10.0); }

inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

/// Complex link gains. Only the magnitudes enter the no-fading rate
/// formulas; in the fading model they scale the normalized Ricean draws.
struct ChannelGains {
    std::complex<double> h_sr{1.0, 0.0};
    std::complex<double> h_sd{1.0, 0.0};
    std::complex<double> h_rd{1.0, 0.0};
    std::complex<double> h_i{1.0, 0.0};

    [[nodiscard]] double sr() const { return std::abs(h_sr); }
    [[nodiscard]] double sd() const { return std::abs(h_sd); }
    [[nodiscard]] double rd() const { return std::abs(h_rd); }
    [[nodiscard]] double i() const { return std::abs(h_i); }

    [[nodiscard]] double sr2() const { return std::norm(h_sr); }
    [[nodiscard]] double sd2() const { return std::norm(h_sd); }
    [[nodiscard]] double rd2() const { return std::norm(h_rd); }
    [[nodiscard]] double i2() const { return std::norm(h_i); }

    [[nodiscard]] bool is_multihop() const { return h_sd == std::complex<double>{}; }
    [[nodiscard]] bool has_relay() const {
        return h_sr != std::complex<double>{} && h_rd != std::complex<double>{};
    }

    /// Unit-magnitude real gains on every link.
    static ChannelGains unit() { return {}; }
    static ChannelGains real(double sr, double sd, double rd, double i) {
        return {{sr, 0.0}, {sd, 0.0}, {rd, 0.0}, {i, 0.0}};
    }

    void validate() const;
};

/// Total source power p_s (shared between the S-R and S-D links), relay
/// power p_r, interferer power p_i and interferer rate r_i.
struct PowerBudget {
    double p_s = 10.0;
    double p_r = 10.0;
    double p_i = 10.0;
    double r_i = 1.0;

    void validate() const;
};

/// Separate S-R and S-D power constraints used by the parallel-link capacity
/// results. p_i is needed by the relay-destination link bound.
struct SplitPowerBudget {
    double p_sr = 10.0;
    double p_sd = 10.0;
    double p_r = 10.0;
    double p_i = 10.0;
    double r_i = 1.0;

    void validate() const;
};

/// A named decision variable value, e.g. {"rho_w1", 0.8}.
struct Coefficient {
    std::string name;
    double value = 0.0;
};

/// A scheme's decision variables. Fields a scheme does not use stay empty
/// or zero.
struct SchemeParams {
    double gamma = 0.0;
    std::vector<Coefficient> rho;      // source-side correlation magnitudes
    std::vector<Coefficient> rho_bar;  // relay-side correlation magnitudes
    double r_q = 0.0;
    double alpha = 0.0;

    [[nodiscard]] double rho_at(const std::string& name) const { return lookup(rho, name); }
    [[nodiscard]] double rho_bar_at(const std::string& name) const {
        return lookup(rho_bar, name);
    }

private:
    static double lookup(const std::vector<Coefficient>& v, const std::string& name) {
        for (const auto& c : v) {
            if (c.name == name) return c.value;
        }
        throw std::out_of_range("SchemeParams: no coefficient named " + name);
    }
};

struct BranchValue {
    std::string label;
    double value = 0.0;
};

struct RateResult {
    double rate = 0.0;
    SchemeParams argmax;
    std::vector<BranchValue> branch_values;
    /// Monte-Carlo standard error of the binding expectation; 0 when the
    /// rate is not an estimate.
    double std_error = 0.0;

    [[nodiscard]] double branch_min() const {
        double m = std::numeric_limits<double>::infinity();
        for (const auto& b : branch_values) m = std::min(m, b.value);
        return m;
    }
};

namespace detail {

inline void require_finite_nonneg(double v, const char* what) {
    if (!std::isfinite(v) || v < 0.0) {
        throw DomainError(std::string(what) + " must be finite and non-negative");
    }
}

}  // namespace detail

inline void ChannelGains::validate() const {
    detail::require_finite_nonneg(sr(), "|h_sr|");
    detail::require_finite_nonneg(sd(), "|h_sd|");
    detail::require_finite_nonneg(rd(), "|h_rd|");
    detail::require_finite_nonneg(i(), "|h_i|");
}

inline void PowerBudget::validate() const {
    detail::require_finite_nonneg(p_s, "p_s");
    detail::require_finite_nonneg(p_r, "p_r");
    detail::require_finite_nonneg(p_i, "p_i");
    detail::require_finite_nonneg(r_i, "r_i");
}

inline void SplitPowerBudget::validate() const {
    detail::require_finite_nonneg(p_sr, "p_sr");
    detail::require_finite_nonneg(p_sd, "p_sd");
    detail::require_finite_nonneg(p_r, "p_r");
    detail::require_finite_nonneg(p_i, "p_i");
    detail::require_finite_nonneg(r_i, "r_i");
}

}  // namespace orthorelay
