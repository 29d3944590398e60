#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "radsolve/ansatz.hpp"
#include "radsolve/errors.hpp"
#include "radsolve/oracle.hpp"
#include "radsolve/potential.hpp"

using namespace radsolve;

namespace {

const PhysicalConstants kUnits;

double rel(double x, double y) {
    return std::abs(x - y) / std::max({std::abs(x), std::abs(y), 1e-300});
}

} // namespace

TEST_CASE("oscillator ground state to a part per million") {
    const ReducedProblem problem =
        make_reduced(make_raw(PotentialFamily::Pseudoharmonic, 0.5, 0.0, 0.0), 0, 3, kUnits);
    const OracleResult result = solve_numeric(problem, 0, suggest_grid(problem, 0));
    CHECK(rel(result.eigenvalue, 1.5) < 1e-6);
    CHECK(result.node_count == 0);
    CHECK(result.converged);
    CHECK(result.grid.spacing == GridSpacing::Uniform);
}

TEST_CASE("hydrogen ground state on a logarithmic grid") {
    const ReducedProblem problem = make_reduced(make_coulomb(1.0), 0, 3, kUnits);
    const GridSpec grid = suggest_grid(problem, 0);
    CHECK(grid.spacing == GridSpacing::Logarithmic);
    const OracleResult result = solve_numeric(problem, 0, grid);
    CHECK(rel(result.eigenvalue, -0.5) < 1e-4);
    CHECK(result.node_count == 0);
}

TEST_CASE("pseudoharmonic demo level matches the closed form") {
    const ReducedProblem problem = make_reduced(make_pseudoharmonic(1.0, 1.0), 0, 3, kUnits);
    const OracleResult result = solve_numeric(problem, 0, suggest_grid(problem, 0));
    CHECK(rel(result.eigenvalue, 1.5355339059327376) < 1e-6);
}

TEST_CASE("halving the spacing cuts the eigenvalue error by the scheme order") {
    const ReducedProblem problem =
        make_reduced(make_raw(PotentialFamily::Pseudoharmonic, 0.5, 0.0, 0.0), 0, 3, kUnits);
    // deliberately coarse so the discretization error dominates roundoff
    const OracleResult result = solve_numeric(problem, 0, suggest_grid(problem, 0, 400), 1e-3);
    const double coarse_err = std::abs(result.coarse_value - 1.5);
    const double fine_err = std::abs(result.fine_value - 1.5);
    CHECK(coarse_err / fine_err >= 3.5);
}

TEST_CASE("the k-th eigenvector carries k sign changes") {
    const ReducedProblem oscillator =
        make_reduced(make_raw(PotentialFamily::Pseudoharmonic, 0.5, 0.0, 0.0), 0, 3, kUnits);
    for (int k = 0; k <= 5; ++k) {
        const OracleResult result = solve_numeric(oscillator, k, suggest_grid(oscillator, k));
        CHECK(result.node_count == k);
        CHECK(rel(result.eigenvalue, 2.0 * k + 1.5) < 1e-6);
    }
    const ReducedProblem kratzer = make_reduced(make_modified_kratzer(1.0, 1.0), 1, 3, kUnits);
    for (int k = 0; k <= 4; ++k)
        CHECK(solve_numeric(kratzer, k, suggest_grid(kratzer, k)).node_count == k);
}

TEST_CASE("radial density integral of the hydrogen ground state") {
    GridSpec grid;
    grid.r_max = 40.0;
    grid.r_min = 1e-6;
    auto ground = [](double r) { return 2.0 * std::exp(-r); };
    CHECK(std::abs(normalize_integral(ground, 3, grid) - 1.0) < 1e-10);
    CHECK(std::abs(radial_overlap(ground, ground, 3, grid) - 1.0) < 1e-10);
}

TEST_CASE("non-decaying integrands are rejected") {
    GridSpec grid;
    grid.r_max = 30.0;
    grid.r_min = 1e-6;
    CHECK_THROWS_AS(normalize_integral([](double) { return 1.0; }, 3, grid), TailError);
}

TEST_CASE("residual is tiny for exact states and explodes under perturbation") {
    const ReducedProblem problem = make_reduced(make_pseudoharmonic(1.0, 1.0), 0, 3, kUnits);
    const AnsatzSolution sol = solve_state(problem, QuantumState{1, 0, 3});
    const std::vector<double> samples = residual_sample_points(sol);
    const double base = ode_residual(sol, problem, samples);
    CHECK(base < 1e-8);

    AnsatzSolution wrong_energy = sol;
    wrong_energy.energy *= 1.01;
    CHECK(ode_residual(wrong_energy, problem, samples) > 1e-3);
}

TEST_CASE("an indicial perturbation is loudest near the origin") {
    const ReducedProblem problem = make_reduced(make_coulomb(1.0), 0, 3, kUnits);
    const AnsatzSolution sol = solve_state(problem, QuantumState{0, 0, 3});
    const std::vector<double> samples = residual_sample_points(sol);

    AnsatzSolution wrong_delta = sol;
    wrong_delta.delta += 0.01;
    const std::vector<double> near_origin(samples.begin(), samples.begin() + 10);
    const std::vector<double> near_peak(samples.begin() + 90, samples.begin() + 100);
    const double res_origin = ode_residual(wrong_delta, problem, near_origin);
    const double res_peak = ode_residual(wrong_delta, problem, near_peak);
    CHECK(res_origin > 10.0 * res_peak);
    CHECK(res_origin > 1e-2);
    CHECK(ode_residual(sol, problem, samples) < 1e-8);
}

TEST_CASE("grid validation and convergence failures are loud") {
    const ReducedProblem problem = make_reduced(make_pseudoharmonic(1.0, 1.0), 0, 3, kUnits);
    GridSpec bad;
    bad.points = 50;
    CHECK_THROWS_AS(solve_numeric(problem, 0, bad), std::invalid_argument);
    bad.points = 400;
    bad.r_min = 2.0;
    bad.r_max = 1.0;
    CHECK_THROWS_AS(solve_numeric(problem, 0, bad), std::invalid_argument);

    const GridSpec grid = suggest_grid(problem, 0);
    CHECK_THROWS_AS(solve_numeric(problem, 0, grid, 1e-18), ConvergenceError);
}

TEST_CASE("the attractive-barrier corner refuses to report a value") {
    // l = 0 in two dimensions with no 1/r^2 repulsion: the inner cutoff
    // never converges, so the solver declines rather than asserting.
    const ReducedProblem corner = make_reduced(make_coulomb(1.0), 0, 2, kUnits);
    CHECK_THROWS_AS(solve_numeric(corner, 0, suggest_grid(corner, 0)), ConvergenceError);
}

TEST_CASE("suggested grids adapt to the state") {
    const ReducedProblem problem = make_reduced(make_modified_kratzer(1.0, 1.0), 0, 3, kUnits);
    const GridSpec low = suggest_grid(problem, 0);
    const GridSpec high = suggest_grid(problem, 3);
    CHECK(high.r_max > low.r_max);
    CHECK(low.r_min == low.r_max * 1e-7);
    low.validate();
    high.validate();
}
