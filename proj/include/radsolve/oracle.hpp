#pragma once

#include <functional>
#include <span>
#include <vector>

#include "radsolve/ansatz.hpp"
#include "radsolve/potential.hpp"

namespace radsolve {

enum class GridSpacing { Uniform, Logarithmic };

struct GridSpec {
    double r_min = 1e-6;
    double r_max = 10.0;
    int points = 4000; ///< interior points of the coarse pass
    GridSpacing spacing = GridSpacing::Uniform;

    void validate() const;
};

/// Numerically computed eigenvalue with convergence metadata. `eigenvalue`
/// is the Richardson extrapolation of the two passes; `refinement_estimate`
/// is the magnitude of the extrapolation step, a conservative error bound.
struct OracleResult {
    double eigenvalue = 0.0;
    int node_count = 0;
    GridSpec grid;
    double coarse_value = 0.0;  ///< eigenvalue at grid.points interior points
    double fine_value = 0.0;    ///< eigenvalue at doubled resolution
    double refinement_estimate = 0.0;
    bool converged = false;
};

/// Default relative tolerances, measured achievable at the default grids.
inline constexpr double kOracleTolPseudoharmonic = 1e-6;
inline constexpr double kOracleTolMie = 1e-5;

double default_oracle_tolerance(PotentialFamily family);

/// Grid sized for the k-th bound state: the outer edge comes from the
/// classical turning point of a coarse pre-solve plus a decay margin, the
/// spacing from the family (logarithmic for Mie, resolving the 1/r
/// singularity; uniform for pseudoharmonic). points = 0 picks a resolution
/// scaled to k. Throws NodeMismatchError if no box with k+1 bound states
/// can be bracketed.
GridSpec suggest_grid(const ReducedProblem& problem, int k, int points = 0);
GridSpec suggest_grid(const ReducedProblem& problem, int k, int points, GridSpacing spacing);

/// Finite-difference eigenvalue of the reduced radial equation:
///   -R'' + [(eta^2 - 1/4)/r^2 + 2 mu V / hbar^2] R = (2 mu E / hbar^2) R
/// with Dirichlet ends, discretized to a symmetric tridiagonal (uniform
/// grid) or symmetric-definite tridiagonal pencil (logarithmic grid, via
/// r = e^x and u = r^{-1/2} R). The k-th eigenvalue is isolated by bisection
/// on Sturm/inertia counts; the eigenvector (by inverse iteration) must show
/// exactly k sign changes. Runs at grid.points and doubled resolution and
/// Richardson-extrapolates.
/// Throws ConvergenceError / NodeMismatchError as diagnosed.
OracleResult solve_numeric(const ReducedProblem& problem, int k, const GridSpec& grid,
                           double rel_tol);
OracleResult solve_numeric(const ReducedProblem& problem, int k, const GridSpec& grid);

/// int_0^rmax f(r) g(r) r^{dim-1} dr by composite Gauss-Legendre on
/// dyadically graded panels (handles the fractional power at the origin).
double radial_overlap(const std::function<double(double)>& f,
                      const std::function<double(double)>& g, int dim, const GridSpec& grid);

/// int_0^rmax f(r)^2 r^{dim-1} dr with a decay precondition at r_max:
/// |f(r_max)|^2 r_max^{dim-1} must be below 1e-14 of the integrand peak,
/// else TailError("tail not negligible").
double normalize_integral(const std::function<double(double)>& f, int dim, const GridSpec& grid);

/// Max over sample points of the scaled residual of the reduced equation,
/// with R'' taken analytically from the closed form:
///   |R'' + (2 mu (E - V)/hbar^2 - (eta^2 - 1/4)/r^2) R| /
///   (|2 mu E R / hbar^2| + |R''|)
double ode_residual(const AnsatzSolution& sol, const ReducedProblem& problem,
                    std::span<const double> sample_points);

/// 200 (or `count`) points spanning [0.05, 5] x r_peak, where r_peak
/// maximizes |R(r)|.
std::vector<double> residual_sample_points(const AnsatzSolution& sol, int count = 200);

/// Outer box radius past which the state's density is negligible: classical
/// turning point for the given energy plus ~20 e-folds of exponential decay.
double tail_box_radius(const ReducedProblem& problem, double energy);

} // namespace radsolve
