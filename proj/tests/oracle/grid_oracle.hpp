// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The orthorelay Authors
//
// Independent brute-force oracle for the no-fading evaluators. It shares no
// code with the library: every decision variable of a scheme (including the
// ones the library eliminates analytically) lives on a 0.01 grid, r_q on a
// 0.01-bit lattice, and the rate formulas are written out directly.
//
// Full enumeration is out of reach in 7-8 dimensions, so the grid is
// searched by branch-and-bound over index boxes. Box upper bounds come from
// monotone interval bounds of each branch; a box is pruned when its bound
// is within `prune_tol` of the incumbent. The result is therefore within
// prune_tol below the exact grid maximum.
//
// With h_sd = 0 every source correlation multiplies h_sd, so its axis is
// collapsed to {0}; the grid maximum is unchanged.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace oracle {

struct Config {
    double sr = 1, sd = 1, rd = 1, i = 1;
    double ps = 10, pr = 10, pi = 10, ri = 1;
};

struct GridMax {
    double value = -std::numeric_limits<double>::infinity();
    std::vector<double> point;
    long long nodes = 0;
};

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kTol = 1e-12;
inline constexpr double kStep = 0.01;

inline double c2(double x) { return std::log2(1.0 + std::max(0.0, x)); }
inline double plus(double x) { return x > 0.0 ? x : 0.0; }
inline double sq(double x) { return x * x; }

inline std::vector<double> unit_axis() {
    std::vector<double> v(101);
    for (int k = 0; k <= 100; ++k) v[k] = k / 100.0;
    return v;
}

/// Axis of a source correlation coefficient.
inline std::vector<double> source_axis(const Config& c) {
    return c.sd != 0.0 ? unit_axis() : std::vector<double>{0.0};
}

inline std::vector<double> rate_axis(double r_max) {
    std::vector<double> v;
    for (int k = 0; k / 100.0 <= r_max + kTol; ++k) v.push_back(k / 100.0);
    return v;
}

/// Problem concept:
///   std::vector<std::vector<double>> axes;   // at most kMaxDims
///   std::vector<std::vector<int>> balls;     // sum of squares <= 1
///   double bound(const double* lo, const double* hi) const;   // -inf if infeasible
///   double leaf(const double* x) const;                       // -inf if infeasible
inline constexpr std::size_t kMaxDims = 8;

template <class Problem>
class BranchAndBound {
public:
    BranchAndBound(const Problem& p, double prune_tol) : p_(p), tol_(prune_tol), n_(p.axes.size()) {}

    GridMax run() {
        Box b{};
        for (std::size_t k = 0; k < n_; ++k) b.hi[k] = static_cast<int>(p_.axes[k].size()) - 1;
        if (prepare(b)) search(b);
        return best_;
    }

private:
    struct Box {
        std::array<int, kMaxDims> lo{}, hi{};
        double ub = kNegInf;
    };

    // Tighten ball members to the sphere implied by the others' lower
    // values, then bound. Returns false if the box holds no feasible point.
    bool prepare(Box& b) const {
        for (const auto& g : p_.balls) {
            double s_lo = 0.0;
            for (int k : g) s_lo += sq(p_.axes[k][b.lo[k]]);
            if (s_lo > 1.0 + kTol) return false;
            for (int k : g) {
                const double rest = s_lo - sq(p_.axes[k][b.lo[k]]);
                const double cap = std::sqrt(std::max(0.0, 1.0 - rest)) + kTol;
                while (b.hi[k] > b.lo[k] && p_.axes[k][b.hi[k]] > cap) --b.hi[k];
            }
        }
        std::array<double, kMaxDims> vlo{}, vhi{};
        for (std::size_t k = 0; k < n_; ++k) {
            vlo[k] = p_.axes[k][b.lo[k]];
            vhi[k] = p_.axes[k][b.hi[k]];
        }
        b.ub = p_.bound(vlo.data(), vhi.data());
        return b.ub != kNegInf;
    }

    void search(const Box& b) {
        ++best_.nodes;
        if (b.ub <= best_.value + tol_) return;
        bool point = true;
        for (std::size_t k = 0; k < n_; ++k) point = point && b.lo[k] == b.hi[k];
        if (point) {
            std::array<double, kMaxDims> x{};
            for (std::size_t k = 0; k < n_; ++k) x[k] = p_.axes[k][b.lo[k]];
            const double v = p_.leaf(x.data());
            if (v > best_.value) {
                best_.value = v;
                best_.point.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n_));
            }
            return;
        }
        // Pick the split whose worse half has the smallest bound; ties go
        // to the widest dimension.
        double best_score = std::numeric_limits<double>::infinity();
        int best_width = -1;
        std::array<Box, 2> chosen;
        std::array<bool, 2> chosen_ok{false, false};
        for (std::size_t k = 0; k < n_; ++k) {
            const int width = b.hi[k] - b.lo[k];
            if (width == 0) continue;
            const int mid = b.lo[k] + width / 2;
            std::array<Box, 2> halves{b, b};
            halves[0].hi[k] = mid;
            halves[1].lo[k] = mid + 1;
            std::array<bool, 2> ok{prepare(halves[0]), prepare(halves[1])};
            double score = kNegInf;
            for (int h = 0; h < 2; ++h) {
                if (ok[h]) score = std::max(score, halves[h].ub);
            }
            if (score < best_score - 1e-15 || (std::abs(score - best_score) <= 1e-15 && width > best_width)) {
                best_score = score;
                best_width = width;
                chosen = halves;
                chosen_ok = ok;
            }
        }
        if (best_width < 0) return;
        if (chosen_ok[1] && (!chosen_ok[0] || chosen[1].ub > chosen[0].ub)) {
            std::swap(chosen[0], chosen[1]);
            std::swap(chosen_ok[0], chosen_ok[1]);
        }
        for (int h = 0; h < 2; ++h) {
            if (chosen_ok[h]) search(chosen[h]);
        }
    }

    const Problem& p_;
    double tol_;
    std::size_t n_;
    GridMax best_;
};

template <class Problem>
GridMax solve(const Problem& p, double prune_tol) {
    return BranchAndBound<Problem>(p, prune_tol).run();
}

// ---------------------------------------------------------------------------
// (D,U) over (gamma, rho', rho'').

struct DuProblem {
    Config c;
    std::vector<std::vector<double>> axes{unit_axis(), source_axis(c), source_axis(c)};
    std::vector<std::vector<int>> balls{{1, 2}};

    double csr(double g) const { return c2(sq(c.sr) * (1.0 - g) * c.ps); }

    double leaf(const double* x) const {
        const double g = x[0], r1 = x[1], r2 = x[2];
        if (r1 * r1 + r2 * r2 > 1.0 + kTol) return kNegInf;
        const double pw1 = sq(c.rd * std::sqrt(c.pr) + c.sd * r1 * std::sqrt(g * c.ps));
        const double pw2 = sq(c.sd) * r2 * r2 * g * c.ps;
        return std::min(c2(pw2) + plus(csr(g) - c.ri), c2(pw2 + pw1));
    }
    double bound(const double* lo, const double* hi) const {
        const double s_hi = hi[0] * c.ps;
        const double pw1 = sq(c.rd * std::sqrt(c.pr) + c.sd * hi[1] * std::sqrt(s_hi));
        const double pw2 = sq(c.sd * hi[2]) * s_hi;
        return std::min(c2(pw2) + plus(csr(lo[0]) - c.ri), c2(pw2 + pw1));
    }
};

// ---------------------------------------------------------------------------
// (C,U) over (r_q, gamma, rho', rho'', rho_WI).

struct CuProblem {
    Config c;
    std::vector<std::vector<double>> axes;
    std::vector<std::vector<int>> balls{{2, 3, 4}};

    explicit CuProblem(const Config& cfg) : c(cfg) {
        axes = {rate_axis(c2(sq(c.sr) * c.ps)), unit_axis(), source_axis(c), source_axis(c),
                c.pi > 0.0 ? source_axis(c) : std::vector<double>{0.0}};
    }
    double csr(double g) const { return c2(sq(c.sr) * (1.0 - g) * c.ps); }

    double leaf(const double* x) const {
        const double r = x[0], g = x[1], r1 = x[2], r2 = x[3], rwi = x[4];
        if (r1 * r1 + r2 * r2 + rwi * rwi > 1.0 + kTol) return kNegInf;
        if (r > csr(g) + kTol) return kNegInf;
        double xi2d = 0.0;
        if (c.pi > 0.0) {
            const double xi = c.i - c.sd * rwi * std::sqrt(g * c.ps / c.pi);
            const double d = c.pi * std::pow(2.0, -r);
            xi2d = xi * xi * d;
        }
        const double pw2 = sq(c.sd) * r2 * r2 * g * c.ps;
        const double pw1 =
            sq(c.rd * std::sqrt(c.pr) + c.sd * r1 * std::sqrt(g * c.ps)) / (1.0 + xi2d + pw2);
        return std::min(plus(csr(g) - r), c2(pw1)) + c2(pw2);
    }
    double bound(const double* lo, const double* hi) const {
        if (lo[0] > csr(lo[1]) + kTol) return kNegInf;
        const double s_lo = lo[1] * c.ps, s_hi = hi[1] * c.ps;
        const double amp_hi = c.i * std::sqrt(c.pi) - c.sd * lo[4] * std::sqrt(s_lo);
        const double amp_lo = c.i * std::sqrt(c.pi) - c.sd * hi[4] * std::sqrt(s_hi);
        const double amp2_min = (amp_lo <= 0.0 && amp_hi >= 0.0) ? 0.0 : std::min(sq(amp_lo), sq(amp_hi));
        const double r_hi = std::min(hi[0], csr(lo[1]) + kTol);
        const double res_lo = amp2_min * std::pow(2.0, -r_hi);
        const double pw2_lo = sq(c.sd * lo[3]) * s_lo, pw2_hi = sq(c.sd * hi[3]) * s_hi;
        const double num = sq(c.rd * std::sqrt(c.pr) + c.sd * hi[2] * std::sqrt(s_hi));
        return std::min(plus(csr(lo[1]) - lo[0]), c2(num / (1.0 + res_lo + pw2_lo))) + c2(pw2_hi);
    }
};

// ---------------------------------------------------------------------------
// (C,S,1) over (r_q, gamma, rho', rho'', rho_WI, rhobar', rhobar_WI).

struct Cs1Problem {
    Config c;
    std::vector<std::vector<double>> axes;
    std::vector<std::vector<int>> balls{{2, 3, 4}, {5, 6}};

    explicit Cs1Problem(const Config& cfg) : c(cfg) {
        axes = {rate_axis(c2(sq(c.sr) * c.ps)), unit_axis(), source_axis(c), source_axis(c),
                source_axis(c), unit_axis(), unit_axis()};
    }
    double csr(double g) const { return c2(sq(c.sr) * (1.0 - g) * c.ps); }

    double branches(double relay, double neq, double pw1n, double pw2n, double pwin) const {
        const double b1 = c2(pw2n / neq) + relay;
        const double b2 = plus(c2((pw2n + pwin) / neq) - c.ri) + relay;
        const double b3 = c2((pw2n + pw1n) / neq);
        const double b4 = plus(c2((pw2n + pw1n + pwin) / neq) - c.ri);
        return std::min(std::min(b1, b2), std::min(b3, b4));
    }
    double leaf(const double* x) const {
        const double r = x[0], g = x[1], r1 = x[2], r2 = x[3], rwi = x[4], rb1 = x[5], rbwi = x[6];
        if (r1 * r1 + r2 * r2 + rwi * rwi > 1.0 + kTol) return kNegInf;
        if (rb1 * rb1 + rbwi * rbwi > 1.0 + kTol) return kNegInf;
        if (r > csr(g) + kTol) return kNegInf;
        const double q = std::pow(2.0, -r);
        const double s = g * c.ps;
        const double neq = sq(c.rd) * rbwi * rbwi * c.pr * q + 1.0;
        const double pw1n = sq(c.rd * rb1 * std::sqrt(c.pr) + c.sd * r1 * std::sqrt(s));
        const double pw2n = sq(c.sd) * r2 * r2 * s;
        const double pwin = sq(c.sd * rwi * std::sqrt(s) + c.rd * rbwi * std::sqrt(c.pr * (1.0 - q)) +
                               c.i * std::sqrt(c.pi));
        return branches(plus(csr(g) - r), neq, pw1n, pw2n, pwin);
    }
    double bound(const double* lo, const double* hi) const {
        if (lo[0] > csr(lo[1]) + kTol) return kNegInf;
        const double s_hi = hi[1] * c.ps;
        const double q_lo = std::pow(2.0, -std::min(hi[0], csr(lo[1]) + kTol));
        const double neq_lo = sq(c.rd * lo[6]) * c.pr * q_lo + 1.0;
        const double pw1n = sq(c.rd * hi[5] * std::sqrt(c.pr) + c.sd * hi[2] * std::sqrt(s_hi));
        const double pw2n = sq(c.sd * hi[3]) * s_hi;
        const double pwin = sq(c.sd * hi[4] * std::sqrt(s_hi) +
                               c.rd * hi[6] * std::sqrt(c.pr * (1.0 - q_lo)) + c.i * std::sqrt(c.pi));
        return branches(plus(csr(lo[1]) - lo[0]), neq_lo, pw1n, pw2n, pwin);
    }
};

// ---------------------------------------------------------------------------
// (C,S,2) over (r_q, gamma, rho', rho'', rho_WI, rho_U, rhobar', rhobar_U).

struct Cs2Problem {
    Config c;
    bool binning = true;
    std::vector<std::vector<double>> axes;
    std::vector<std::vector<int>> balls{{2, 3, 4, 5}, {6, 7}};

    explicit Cs2Problem(const Config& cfg, bool bin = true) : c(cfg), binning(bin) {
        axes = {rate_axis(c2(sq(c.sr) * c.ps)), unit_axis(), source_axis(c), source_axis(c),
                source_axis(c), source_axis(c), unit_axis(), unit_axis()};
    }
    double csr(double g) const { return c2(sq(c.sr) * (1.0 - g) * c.ps); }

    double leaf(const double* x) const {
        const double r = x[0], g = x[1], r1 = x[2], r2 = x[3], rwi = x[4], ru = x[5], rb1 = x[6],
                     rbu = x[7];
        if (r1 * r1 + r2 * r2 + rwi * rwi + ru * ru > 1.0 + kTol) return kNegInf;
        if (rb1 * rb1 + rbu * rbu > 1.0 + kTol) return kNegInf;
        const double s = g * c.ps;
        const double pw1 = sq(c.rd * rb1 * std::sqrt(c.pr) + c.sd * r1 * std::sqrt(s));
        const double pw2 = sq(c.sd) * r2 * r2 * s;
        const double pwi = sq(c.sd * rwi * std::sqrt(s) + c.i * std::sqrt(c.pi));
        const double pu = sq(c.sd * ru * std::sqrt(s) + c.rd * rbu * std::sqrt(c.pr));
        const double den = pw1 + pw2 + pwi + 1.0;
        if (r > std::min(csr(g), c2(pu / den)) + kTol) return kNegInf;
        const double xs = binning ? pwi / den : 0.0;
        const double q = std::pow(2.0, -r);
        // P_I / D, written with D = P_I 2^-r (1 - x) / (1 - x 2^-r)
        double pi_over_d;
        if (c.pi > 0.0) {
            const double d = c.pi * q * (1.0 - xs) / (1.0 - xs * q);
            pi_over_d = c.pi / d;
        } else {
            pi_over_d = (1.0 - xs * q) / (q * (1.0 - xs));
        }
        const double relay = plus(csr(g) - r);
        const double b1 = c2(pw2) + relay;
        const double b2 = plus(std::log2((1.0 + pw2) * pi_over_d + pwi) - c.ri) + relay;
        const double b3 = c2(pw2 + pw1);
        const double b4 = plus(std::log2((1.0 + pw2 + pw1) * pi_over_d + pwi) - c.ri);
        return std::min(std::min(b1, b2), std::min(b3, b4));
    }
    double bound(const double* lo, const double* hi) const {
        const double s_lo = lo[1] * c.ps, s_hi = hi[1] * c.ps;
        const double pw1_lo = sq(c.rd * lo[6] * std::sqrt(c.pr) + c.sd * lo[2] * std::sqrt(s_lo));
        const double pw1_hi = sq(c.rd * hi[6] * std::sqrt(c.pr) + c.sd * hi[2] * std::sqrt(s_hi));
        const double pw2_lo = sq(c.sd * lo[3]) * s_lo, pw2_hi = sq(c.sd * hi[3]) * s_hi;
        const double pwi_lo = sq(c.sd * lo[4] * std::sqrt(s_lo) + c.i * std::sqrt(c.pi));
        const double pwi_hi = sq(c.sd * hi[4] * std::sqrt(s_hi) + c.i * std::sqrt(c.pi));
        const double pu_hi = sq(c.sd * hi[5] * std::sqrt(s_hi) + c.rd * hi[7] * std::sqrt(c.pr));
        if (lo[0] > csr(lo[1]) + kTol) return kNegInf;
        if (lo[0] > c2(pu_hi / (pw1_lo + pw2_lo + pwi_lo + 1.0)) + kTol) return kNegInf;
        const double r_hi = std::min({hi[0], csr(lo[1]) + kTol,
                                      c2(pu_hi / (pw1_lo + pw2_lo + pwi_lo + 1.0)) + kTol});
        const double x_hi = binning ? pwi_hi / (pwi_hi + pw1_lo + pw2_lo + 1.0) : 0.0;
        // (2^r - x)/(1 - x) grows with both r and x.
        const double ratio = (std::pow(2.0, r_hi) - x_hi) / (1.0 - x_hi);
        const double relay = plus(csr(lo[1]) - lo[0]);
        const double b1 = c2(pw2_hi) + relay;
        const double b2 = plus(std::log2((1.0 + pw2_hi) * ratio + pwi_hi) - c.ri) + relay;
        const double b3 = c2(pw2_hi + pw1_hi);
        const double b4 = plus(std::log2((1.0 + pw2_hi + pw1_hi) * ratio + pwi_hi) - c.ri);
        return std::min(std::min(b1, b2), std::min(b3, b4));
    }
};

// ---------------------------------------------------------------------------
// Closed forms and the one-dimensional AID search.

inline GridMax aid(const Config& c) {
    GridMax best;
    for (double g : unit_axis()) {
        const double d = c.pr / (sq(c.sr) * (1.0 - g) * c.ps + 1.0);
        const double v = c2(sq(c.sd * std::sqrt(g * c.ps) + c.rd * std::sqrt(std::max(0.0, c.pr - d))) /
                            (1.0 + sq(c.rd) * d));
        ++best.nodes;
        if (v > best.value) best = {v, {g}, best.nodes};
    }
    return best;
}

inline double nr(const Config& c) { return c2(sq(c.sd) * c.ps); }

inline double nldf(const Config& c) {
    const double a = sq(c.sr) * c.ps, b = sq(c.rd) * c.pr;
    return plus(std::log2((a * b + a + b + 1.0) / (a + b + 2.0)));
}

inline GridMax du(const Config& c, double tol) { return solve(DuProblem{c}, tol); }
inline GridMax ni(Config c, double tol) {
    c.ri = 0.0;
    return du(c, tol);
}
inline GridMax cu(const Config& c, double tol) { return solve(CuProblem(c), tol); }
inline GridMax cs1(const Config& c, double tol) { return solve(Cs1Problem(c), tol); }
inline GridMax cs2(const Config& c, double tol, bool binning = true) {
    return solve(Cs2Problem(c, binning), tol);
}

}  // namespace oracle
