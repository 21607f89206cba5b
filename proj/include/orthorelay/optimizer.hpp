// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The orthorelay Authors
//
// Deterministic derivative-free maximization over a box intersected with
// unit-ball groups and arbitrary coupled predicates.
//
// maximize() enumerates a feasibility-filtered grid, keeps the best
// `multistart_count` grid points and polishes each with a projected
// Nelder-Mead search. The grid step along each dimension is
// `grid_resolution` times that dimension's range, so [0, 1] variables see
// an absolute step of `grid_resolution` and a bits-valued r_q box is split
// into the same number of cells.
//
// Objectives must return -inf on points that violate a coupled constraint;
// box bounds and ball groups are enforced here.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orthorelay/core.hpp"

namespace orthorelay {

class InfeasibleSpaceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Dimension {
    std::string name;
    double lower = 0.0;
    double upper = 1.0;
};

struct CoupledConstraint {
    std::string name;
    std::function<bool(std::span<const double>)> holds;
};

struct ParamSpace {
    std::vector<Dimension> dims;
    /// Each group G imposes sum_{i in G} x_i^2 <= 1. Groups are disjoint.
    std::vector<std::vector<std::size_t>> quadratic_groups;
    std::vector<CoupledConstraint> coupled_constraints;

    [[nodiscard]] std::size_t size() const { return dims.size(); }

    void validate() const {
        for (const auto& d : dims) {
            if (!std::isfinite(d.lower) || !std::isfinite(d.upper) || d.lower > d.upper) {
                throw std::invalid_argument("ParamSpace: bad bounds on dimension " + d.name);
            }
        }
        std::vector<bool> seen(dims.size(), false);
        for (const auto& g : quadratic_groups) {
            for (auto idx : g) {
                if (idx >= dims.size()) {
                    throw std::invalid_argument("ParamSpace: group index out of range");
                }
                if (seen[idx]) {
                    throw std::invalid_argument("ParamSpace: quadratic groups overlap");
                }
                seen[idx] = true;
            }
        }
    }
};

struct OptimizerConfig {
    double grid_resolution = 0.05;
    int refine_iterations = 200;
    double refine_tolerance = 1e-6;
    int multistart_count = 8;

    void validate() const {
        if (!(grid_resolution > 0.0) || !std::isfinite(grid_resolution)) {
            throw std::invalid_argument("OptimizerConfig: grid_resolution must be > 0");
        }
        if (refine_iterations < 1 || multistart_count < 1) {
            throw std::invalid_argument("OptimizerConfig: counts must be >= 1");
        }
        if (!(refine_tolerance > 0.0)) {
            throw std::invalid_argument("OptimizerConfig: refine_tolerance must be > 0");
        }
    }
};

struct Maximum {
    double value = -std::numeric_limits<double>::infinity();
    std::vector<double> argmax;
};

inline constexpr double kFeasibilityTolerance = 1e-12;

namespace detail {

/// sqrt(1 - s): the free coordinate that completes a ball group whose other
/// members have squared sum s.
inline double sphere_rest(double s) { return std::sqrt(std::max(0.0, 1.0 - s)); }

inline bool box_and_groups_hold(std::span<const double> x, const ParamSpace& space) {
    for (std::size_t k = 0; k < x.size(); ++k) {
        const auto& d = space.dims[k];
        if (!(x[k] >= d.lower - kFeasibilityTolerance && x[k] <= d.upper + kFeasibilityTolerance)) {
            return false;
        }
    }
    for (const auto& g : space.quadratic_groups) {
        double s = 0.0;
        for (auto idx : g) s += x[idx] * x[idx];
        if (s > 1.0 + kFeasibilityTolerance) return false;
    }
    return true;
}

/// (value, point) ordering: larger value wins, ties go to the
/// lexicographically smaller point.
inline bool better(double va, std::span<const double> xa, double vb, std::span<const double> xb) {
    if (va != vb) return va > vb;
    return std::lexicographical_compare(xa.begin(), xa.end(), xb.begin(), xb.end());
}

inline std::vector<double> axis_values(const Dimension& d, double resolution) {
    if (d.upper == d.lower) return {d.lower};
    const auto cells = static_cast<std::size_t>(std::ceil(1.0 / resolution - 1e-9));
    const std::size_t n = std::max<std::size_t>(cells, 1);
    std::vector<double> v(n + 1);
    const double span = d.upper - d.lower;
    for (std::size_t k = 0; k <= n; ++k) {
        v[k] = d.lower + span * (static_cast<double>(k) / static_cast<double>(n));
    }
    v[n] = d.upper;
    return v;
}

/// A block is either a single ungrouped dimension or a whole ball group;
/// its `combos` are the grid tuples of the block that pass the ball test.
struct GridBlock {
    std::vector<std::size_t> dims;
    std::vector<std::vector<double>> combos;
};

inline std::vector<GridBlock> make_blocks(const ParamSpace& space, double resolution) {
    const std::size_t n = space.size();
    std::vector<int> group_of(n, -1);
    for (std::size_t g = 0; g < space.quadratic_groups.size(); ++g) {
        for (auto idx : space.quadratic_groups[g]) group_of[idx] = static_cast<int>(g);
    }
    std::vector<GridBlock> blocks;
    for (std::size_t g = 0; g < space.quadratic_groups.size(); ++g) {
        const auto& members = space.quadratic_groups[g];
        if (members.empty()) continue;
        GridBlock b;
        b.dims = members;
        std::vector<std::vector<double>> axes;
        for (auto idx : members) axes.push_back(axis_values(space.dims[idx], resolution));
        std::vector<std::size_t> ctr(members.size(), 0);
        std::vector<double> tuple(members.size());
        while (true) {
            double s = 0.0;
            for (std::size_t j = 0; j < members.size(); ++j) {
                tuple[j] = axes[j][ctr[j]];
                s += tuple[j] * tuple[j];
            }
            if (s <= 1.0 + kFeasibilityTolerance) b.combos.push_back(tuple);
            std::size_t j = members.size();
            while (j > 0) {
                --j;
                if (++ctr[j] < axes[j].size()) break;
                ctr[j] = 0;
                if (j == 0) goto group_done;
            }
        }
    group_done:
        blocks.push_back(std::move(b));
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (group_of[k] >= 0) continue;
        GridBlock b;
        b.dims = {k};
        for (double v : axis_values(space.dims[k], resolution)) b.combos.push_back({v});
        blocks.push_back(std::move(b));
    }
    // Keep block order aligned with dimension order so enumeration is stable.
    std::sort(blocks.begin(), blocks.end(),
              [](const GridBlock& a, const GridBlock& b) { return a.dims.front() < b.dims.front(); });
    return blocks;
}

/// Clip onto the box, then pull any violated ball group back onto the
/// unit sphere.
inline void project(std::vector<double>& x, const ParamSpace& space) {
    for (std::size_t k = 0; k < x.size(); ++k) {
        x[k] = std::clamp(x[k], space.dims[k].lower, space.dims[k].upper);
    }
    for (const auto& g : space.quadratic_groups) {
        double s = 0.0;
        for (auto idx : g) s += x[idx] * x[idx];
        if (s > 1.0) {
            const double scale = 1.0 / std::sqrt(s);
            for (auto idx : g) {
                x[idx] = std::clamp(x[idx] * scale, space.dims[idx].lower, space.dims[idx].upper);
            }
        }
    }
}

struct Candidate {
    double value;
    std::vector<double> x;
};

template <class Eval>
Candidate nelder_mead(Eval& eval, const ParamSpace& space, Candidate start, double initial_step,
                      const OptimizerConfig& cfg) {
    std::vector<std::size_t> free_dims;
    for (std::size_t k = 0; k < space.size(); ++k) {
        if (space.dims[k].upper > space.dims[k].lower) free_dims.push_back(k);
    }
    const std::size_t m = free_dims.size();
    if (m == 0) return start;

    struct Vertex {
        double f;  // value being maximized
        std::vector<double> x;
    };
    auto make_vertex = [&](std::vector<double> x) {
        project(x, space);
        const double f = eval(x);
        return Vertex{f, std::move(x)};
    };
    // Order: best first, lexicographic tie-break for determinism.
    auto vertex_less = [](const Vertex& a, const Vertex& b) { return better(a.f, a.x, b.f, b.x); };

    std::vector<Vertex> simplex;
    simplex.reserve(m + 1);
    simplex.push_back(Vertex{start.value, start.x});
    for (auto k : free_dims) {
        auto x = start.x;
        const auto& d = space.dims[k];
        const double step = initial_step * (d.upper - d.lower);
        x[k] = (x[k] + step <= d.upper) ? x[k] + step : x[k] - step;
        simplex.push_back(make_vertex(std::move(x)));
    }

    auto diameter = [&]() {
        double diam = 0.0;
        for (std::size_t v = 1; v < simplex.size(); ++v) {
            for (auto k : free_dims) {
                const double range = space.dims[k].upper - space.dims[k].lower;
                diam = std::max(diam, std::abs(simplex[v].x[k] - simplex[0].x[k]) / range);
            }
        }
        return diam;
    };

    const std::size_t n = space.size();
    std::vector<double> centroid(n), trial(n);
    for (int it = 0; it < cfg.refine_iterations; ++it) {
        std::sort(simplex.begin(), simplex.end(), vertex_less);
        const double spread = simplex.front().f - simplex.back().f;
        if (std::isfinite(spread) && spread <= cfg.refine_tolerance * 1e-3 &&
            diameter() <= cfg.refine_tolerance) {
            break;
        }
        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t v = 0; v < m; ++v) {
            for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[v].x[k];
        }
        for (auto& c : centroid) c /= static_cast<double>(m);

        auto along = [&](double t) {
            for (std::size_t k = 0; k < n; ++k) {
                trial[k] = centroid[k] + t * (simplex.back().x[k] - centroid[k]);
            }
            return make_vertex(trial);
        };

        Vertex reflected = along(-1.0);
        if (reflected.f > simplex.front().f) {
            Vertex expanded = along(-2.0);
            simplex.back() = (expanded.f > reflected.f) ? std::move(expanded) : std::move(reflected);
            continue;
        }
        if (reflected.f > simplex[m - 1].f) {
            simplex.back() = std::move(reflected);
            continue;
        }
        if (reflected.f > simplex.back().f) {
            Vertex contracted = along(-0.5);
            if (contracted.f >= reflected.f) {
                simplex.back() = std::move(contracted);
                continue;
            }
        } else {
            Vertex contracted = along(0.5);
            if (contracted.f > simplex.back().f) {
                simplex.back() = std::move(contracted);
                continue;
            }
        }
        for (std::size_t v = 1; v <= m; ++v) {
            for (std::size_t k = 0; k < n; ++k) {
                trial[k] = simplex[0].x[k] + 0.5 * (simplex[v].x[k] - simplex[0].x[k]);
            }
            simplex[v] = make_vertex(trial);
        }
    }
    std::sort(simplex.begin(), simplex.end(), vertex_less);
    return Candidate{simplex.front().f, std::move(simplex.front().x)};
}

}  // namespace detail

/// True iff the point satisfies every box bound, ball group and coupled
/// constraint (box and ball checks use a 1e-12 tolerance).
inline bool feasible(std::span<const double> point, const ParamSpace& space) {
    if (point.size() != space.size()) {
        throw std::invalid_argument("feasible: point has " + std::to_string(point.size()) +
                                    " coordinates, space has " + std::to_string(space.size()));
    }
    if (!detail::box_and_groups_hold(point, space)) return false;
    for (const auto& c : space.coupled_constraints) {
        if (!c.holds(point)) return false;
    }
    return true;
}

template <class Objective>
Maximum maximize(Objective&& objective, const ParamSpace& space, const OptimizerConfig& cfg = {}) {
    space.validate();
    cfg.validate();
    const std::size_t n = space.size();

    auto eval = [&](std::span<const double> x) -> double {
        if (!detail::box_and_groups_hold(x, space)) return kNegativeInfinity;
        const double v = objective(x);
        return std::isnan(v) ? kNegativeInfinity : v;
    };

    // Grid phase: keep the top-k grid points under the (value, lex) order.
    const auto blocks = detail::make_blocks(space, cfg.grid_resolution);
    const auto keep = static_cast<std::size_t>(cfg.multistart_count);
    std::vector<detail::Candidate> top;
    top.reserve(keep + 1);
    std::vector<double> x(n, 0.0);
    std::vector<std::size_t> ctr(blocks.size(), 0);
    auto worst_top = [&]() -> const detail::Candidate& { return top.back(); };
    while (true) {
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            const auto& combo = blocks[b].combos[ctr[b]];
            for (std::size_t j = 0; j < combo.size(); ++j) x[blocks[b].dims[j]] = combo[j];
        }
        const double v = eval(x);
        if (v != kNegativeInfinity &&
            (top.size() < keep || detail::better(v, x, worst_top().value, worst_top().x))) {
            detail::Candidate c{v, x};
            auto pos = std::find_if(top.begin(), top.end(), [&](const detail::Candidate& t) {
                return detail::better(c.value, c.x, t.value, t.x);
            });
            top.insert(pos, std::move(c));
            if (top.size() > keep) top.pop_back();
        }
        std::size_t b = blocks.size();
        bool done = true;
        while (b > 0) {
            --b;
            if (++ctr[b] < blocks[b].combos.size()) {
                done = false;
                break;
            }
            ctr[b] = 0;
        }
        if (done) break;
    }
    if (top.empty()) {
        throw InfeasibleSpaceError("maximize: no feasible grid point");
    }

    // Refinement phase. Starts adjacent to an already-refined start are
    // skipped; they would converge to the same local maximum.
    detail::Candidate best = top.front();
    std::vector<std::vector<double>> used;
    auto adjacent = [&](const std::vector<double>& a, const std::vector<double>& b) {
        for (std::size_t k = 0; k < n; ++k) {
            const double range = space.dims[k].upper - space.dims[k].lower;
            if (std::abs(a[k] - b[k]) > 1.01 * cfg.grid_resolution * range) return false;
        }
        return true;
    };
    for (const auto& start : top) {
        if (std::any_of(used.begin(), used.end(),
                        [&](const std::vector<double>& u) { return adjacent(u, start.x); })) {
            continue;
        }
        used.push_back(start.x);
        detail::Candidate cur = start;
        double step = cfg.grid_resolution;
        for (int restart = 0; restart < 4; ++restart) {
            auto next = detail::nelder_mead(eval, space, cur, step, cfg);
            const bool improved = next.value > cur.value + 1e-15;
            if (detail::better(next.value, next.x, cur.value, cur.x)) cur = std::move(next);
            if (!improved && restart > 0) break;
            step *= 0.1;
        }
        if (feasible(cur.x, space) && detail::better(cur.value, cur.x, best.value, best.x)) {
            best = std::move(cur);
        }
    }
    return Maximum{best.value, std::move(best.x)};
}

}  // namespace orthorelay
