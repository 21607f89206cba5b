#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "catch_amalgamated.hpp"
#include "orthorelay/optimizer.hpp"

using namespace orthorelay;
using Catch::Matchers::WithinAbs;

namespace {

ParamSpace unit_box(std::size_t n) {
    ParamSpace s;
    for (std::size_t k = 0; k < n; ++k) s.dims.push_back({"x" + std::to_string(k), 0.0, 1.0});
    return s;
}

}  // namespace

TEST_CASE("interior maximum of a smooth concave function") {
    auto f = [](std::span<const double> x) {
        return -(x[0] - 0.3137) * (x[0] - 0.3137) - 2.0 * (x[1] - 0.7219) * (x[1] - 0.7219);
    };
    const Maximum m = maximize(f, unit_box(2));
    CHECK_THAT(m.value, WithinAbs(0.0, 1e-9));
    CHECK_THAT(m.argmax[0], WithinAbs(0.3137, 1e-4));
    CHECK_THAT(m.argmax[1], WithinAbs(0.7219, 1e-4));
}

TEST_CASE("maximum on the boundary of a quadratic group") {
    ParamSpace s = unit_box(2);
    s.quadratic_groups = {{0, 1}};
    auto f = [](std::span<const double> x) { return x[0] + 2.0 * x[1]; };
    const Maximum m = maximize(f, s);
    CHECK_THAT(m.value, WithinAbs(std::sqrt(5.0), 1e-6));
    CHECK(feasible(m.argmax, s));
}

TEST_CASE("kink of a min-of-branches objective") {
    auto f = [](std::span<const double> x) { return std::min(3.0 * x[0], 2.0 - x[0]); };
    const Maximum m = maximize(f, unit_box(1));
    CHECK_THAT(m.value, WithinAbs(1.5, 1e-6));
    CHECK_THAT(m.argmax[0], WithinAbs(0.5, 1e-6));
}

TEST_CASE("coupled constraints restrict the feasible set") {
    ParamSpace s = unit_box(2);
    s.coupled_constraints.push_back(
        {"sum", [](std::span<const double> x) { return x[0] + x[1] <= 1.0 + kFeasibilityTolerance; }});
    auto f = [&](std::span<const double> x) {
        if (x[0] + x[1] > 1.0 + kFeasibilityTolerance) return kNegativeInfinity;
        return x[0] * x[1];
    };
    const Maximum m = maximize(f, s);
    CHECK_THAT(m.value, WithinAbs(0.25, 1e-6));
    CHECK(feasible(m.argmax, s));
}

TEST_CASE("NaN objective values count as infeasible") {
    auto f = [](std::span<const double> x) {
        return x[0] > 0.5 ? std::numeric_limits<double>::quiet_NaN() : x[0];
    };
    const Maximum m = maximize(f, unit_box(1));
    CHECK_THAT(m.value, WithinAbs(0.5, 1e-6));
}

TEST_CASE("no feasible grid point throws InfeasibleSpaceError") {
    auto f = [](std::span<const double>) { return kNegativeInfinity; };
    CHECK_THROWS_AS(maximize(f, unit_box(2)), InfeasibleSpaceError);
}

TEST_CASE("results are deterministic") {
    ParamSpace s = unit_box(3);
    s.quadratic_groups = {{1, 2}};
    auto f = [](std::span<const double> x) {
        return std::min(std::log2(1.0 + 4.0 * x[0] * x[1]), std::log2(1.0 + 3.0 * (1.0 - x[0]) + x[2]));
    };
    const Maximum a = maximize(f, s);
    const Maximum b = maximize(f, s);
    CHECK(a.value == b.value);
    CHECK(a.argmax == b.argmax);
}

TEST_CASE("finer grids never lose more than refinement recovers") {
    auto f = [](std::span<const double> x) { return std::sin(9.0 * x[0]) * std::cos(7.0 * x[1]); };
    OptimizerConfig fine;
    fine.grid_resolution = 0.01;
    const Maximum coarse = maximize(f, unit_box(2));
    const Maximum dense = maximize(f, unit_box(2), fine);
    CHECK_THAT(coarse.value, WithinAbs(1.0, 1e-6));
    CHECK_THAT(dense.value, WithinAbs(1.0, 1e-6));
}

TEST_CASE("argument validation") {
    ParamSpace bad = unit_box(2);
    bad.dims[1].lower = 2.0;
    auto f = [](std::span<const double>) { return 0.0; };
    CHECK_THROWS_AS(maximize(f, bad), std::invalid_argument);

    ParamSpace overlap = unit_box(3);
    overlap.quadratic_groups = {{0, 1}, {1, 2}};
    CHECK_THROWS_AS(maximize(f, overlap), std::invalid_argument);

    OptimizerConfig cfg;
    cfg.grid_resolution = 0.0;
    CHECK_THROWS_AS(maximize(f, unit_box(1), cfg), std::invalid_argument);

    const std::vector<double> p{0.5};
    CHECK_THROWS_AS(feasible(p, unit_box(2)), std::invalid_argument);
}

TEST_CASE("feasible applies the 1e-12 tolerance") {
    ParamSpace s = unit_box(2);
    s.quadratic_groups = {{0, 1}};
    const double r = std::sqrt(0.5);
    CHECK(feasible(std::vector<double>{r, r}, s));
    CHECK(feasible(std::vector<double>{1.0 + 5e-13, 0.0}, s));
    CHECK_FALSE(feasible(std::vector<double>{1.0 + 1e-9, 0.0}, s));
    CHECK_FALSE(feasible(std::vector<double>{0.8, 0.8}, s));
}
