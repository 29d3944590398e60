#include "radsolve/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "radsolve/errors.hpp"
#include "radsolve/oracle.hpp"

namespace radsolve {

namespace {

double hbar2(const PhysicalConstants& k) { return k.hbar * k.hbar; }

// Relative agreement check used for the internal consistency contracts.
bool agrees(double x, double y, double rel) {
    const double scale = std::max({std::abs(x), std::abs(y), 1e-300});
    return std::abs(x - y) <= rel * scale;
}

} // namespace

double delta_restriction(const ReducedProblem& problem) {
    const auto& pot = problem.potential;
    const double radicand =
        2.0 * problem.constants.mu * pot.b / hbar2(problem.constants) + problem.eta * problem.eta;
    if (radicand < 0.0)
        throw std::invalid_argument("delta_restriction: negative radicand (b < -eta^2 regime)");
    const double root = std::sqrt(radicand);
    return pot.family == PotentialFamily::Pseudoharmonic ? root - 1.0 : root;
}

double quantized_energy(const ReducedProblem& problem, int p, double delta) {
    if (p < 0) throw std::invalid_argument("quantized_energy: p must be >= 0");
    const auto& pot = problem.potential;
    const double mu = problem.constants.mu;
    const double h2 = hbar2(problem.constants);
    if (pot.family == PotentialFamily::Pseudoharmonic) {
        return pot.c + std::sqrt(2.0 * h2 * pot.a / mu) * (2.0 * p + delta + 2.0);
    }
    const double q = p + delta + 0.5;
    return pot.c - mu * pot.a * pot.a / (2.0 * h2 * q * q);
}

double alpha_param(const ReducedProblem& problem, int p, double delta, double energy) {
    const auto& pot = problem.potential;
    const double mu = problem.constants.mu;
    const double h2 = hbar2(problem.constants);
    if (pot.family == PotentialFamily::Pseudoharmonic) {
        if (!(pot.a > 0.0))
            throw std::invalid_argument("alpha_param: pseudoharmonic family requires a > 0");
        return -std::sqrt(2.0 * mu * pot.a / h2);
    }
    if (!(energy < pot.c))
        throw NotBoundState("alpha_param: not a bound state (E >= c for Mie-type potential)");
    const double alpha = -std::sqrt(-2.0 * mu * (energy - pot.c) / h2);
    // The decaying branch must coincide with the truncation route, otherwise
    // the supplied energy is not the quantized level for this p.
    const double alpha_quant = (mu * pot.a / h2) / (p + delta + 0.5);
    if (!agrees(alpha, alpha_quant, 1e-12))
        throw std::invalid_argument(
            "alpha_param: energy does not satisfy the truncation condition for this p");
    return alpha;
}

RecursionCoeffs recursion_coeffs(const ReducedProblem& problem, int p, double delta, double alpha,
                                 double energy) {
    if (p < 0) throw std::invalid_argument("recursion_coeffs: p must be >= 0");
    const auto& pot = problem.potential;
    const double mu = problem.constants.mu;
    const double h2 = hbar2(problem.constants);
    const double barrier = problem.barrier_coefficient();
    const double b_term = -2.0 * mu * pot.b / h2 - barrier;

    RecursionCoeffs rc;
    rc.A.resize(static_cast<std::size_t>(p) + 1);
    rc.B.resize(static_cast<std::size_t>(p) + 2);
    rc.C.assign(static_cast<std::size_t>(p) + 2, 0.0);

    if (pot.family == PotentialFamily::Pseudoharmonic) {
        const double e_term = 2.0 * mu * (energy - pot.c) / h2;
        for (int n = 0; n <= p; ++n)
            rc.A[static_cast<std::size_t>(n)] = e_term + 2.0 * alpha * (2.0 * n + delta + 2.0);
        for (int n = 0; n <= p + 1; ++n)
            rc.B[static_cast<std::size_t>(n)] =
                b_term + (2.0 * n + delta + 1.5) * (2.0 * n + delta + 0.5);
    } else {
        const double a_term = -2.0 * mu * pot.a / h2;
        for (int n = 0; n <= p; ++n)
            rc.A[static_cast<std::size_t>(n)] = a_term + 2.0 * alpha * (n + delta + 0.5);
        for (int n = 0; n <= p + 1; ++n)
            rc.B[static_cast<std::size_t>(n)] = b_term + (n + delta + 0.5) * (n + delta - 0.5);
    }
    return rc;
}

std::vector<double> polynomial_coeffs(const RecursionCoeffs& rc, int p) {
    if (p < 0) throw std::invalid_argument("polynomial_coeffs: p must be >= 0");
    if (rc.A.size() < static_cast<std::size_t>(p) + 1 ||
        rc.B.size() < static_cast<std::size_t>(p) + 1)
        throw std::invalid_argument("polynomial_coeffs: recursion table too short for p");
    std::vector<double> coeffs(static_cast<std::size_t>(p) + 1);
    coeffs[0] = 1.0;
    for (int n = 0; n < p; ++n) {
        const double B_next = rc.B[static_cast<std::size_t>(n) + 1];
        if (!(std::abs(B_next) > 1e-300))
            throw DegenerateRecursion("polynomial_coeffs: vanishing B coefficient leaves a_{n+1} "
                                      "underdetermined");
        coeffs[static_cast<std::size_t>(n) + 1] =
            -rc.A[static_cast<std::size_t>(n)] * coeffs[static_cast<std::size_t>(n)] / B_next;
    }
    return coeffs;
}

double determinant_condition(const RecursionCoeffs& rc, int p) {
    if (p < 0) throw std::invalid_argument("determinant_condition: p must be >= 0");
    // Three-term determinant recurrence for the banded truncation matrix;
    // with C identically zero it collapses to the product of the B_n.
    double det_prev2 = 1.0;
    double det_prev1 = rc.B[0];
    for (int n = 1; n <= p; ++n) {
        const double det =
            rc.B[static_cast<std::size_t>(n)] * det_prev1 -
            rc.A[static_cast<std::size_t>(n) - 1] * rc.C[static_cast<std::size_t>(n)] * det_prev2;
        det_prev2 = det_prev1;
        det_prev1 = det;
    }
    return det_prev1;
}

AnsatzSolution solve_state(const ReducedProblem& problem, const QuantumState& state) {
    state.validate();
    problem.potential.validate();
    problem.constants.validate();
    if (problem.eta != eta(state.ell, state.dim))
        throw std::invalid_argument("solve_state: problem.eta does not match state (ell, dim)");

    AnsatzSolution sol;
    sol.state = state;
    sol.family = problem.potential.family;
    sol.constants = problem.constants;
    sol.delta = delta_restriction(problem);
    sol.energy = quantized_energy(problem, state.p, sol.delta);
    sol.alpha = alpha_param(problem, state.p, sol.delta, sol.energy);

    const RecursionCoeffs rc = recursion_coeffs(problem, state.p, sol.delta, sol.alpha, sol.energy);
    sol.coeffs = polynomial_coeffs(rc, state.p);

    const double beta = -sol.alpha;
    if (state.p == 0) {
        sol.norm_mode = NormMode::ClosedFormGamma;
        if (sol.family == PotentialFamily::Pseudoharmonic) {
            sol.coeffs[0] = std::sqrt(2.0 / std::tgamma(sol.delta + 2.0)) *
                            std::pow(beta, 0.5 * sol.delta + 1.0);
        } else {
            sol.coeffs[0] =
                std::pow(2.0 * beta, sol.delta + 1.0) / std::sqrt(std::tgamma(2.0 * sol.delta + 2.0));
        }
    } else {
        sol.norm_mode = NormMode::NumericQuadrature;
        GridSpec quad;
        quad.r_max = tail_box_radius(problem, sol.energy);
        quad.r_min = quad.r_max * 1e-8;
        quad.points = 1024;
        const double norm = normalize_integral(
            [&sol](double r) { return evaluate_wavefunction(sol, r); }, state.dim, quad);
        const double scale = 1.0 / std::sqrt(norm);
        for (double& a_n : sol.coeffs) a_n *= scale;
    }
    return sol;
}

double evaluate_wavefunction(const AnsatzSolution& sol, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("evaluate_wavefunction: r must be > 0");
    const bool pseudoharmonic = sol.family == PotentialFamily::Pseudoharmonic;
    const double y = pseudoharmonic ? r * r : r;
    double poly = 0.0;
    for (auto it = sol.coeffs.rbegin(); it != sol.coeffs.rend(); ++it) poly = poly * y + *it;
    const double exponent = pseudoharmonic ? 0.5 * sol.alpha * r * r : sol.alpha * r;
    return poly * std::pow(r, sol.leading_power()) * std::exp(exponent);
}

double evaluate_reduced_radial(const AnsatzSolution& sol, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("evaluate_reduced_radial: r must be > 0");
    const bool pseudoharmonic = sol.family == PotentialFamily::Pseudoharmonic;
    const double y = pseudoharmonic ? r * r : r;
    double poly = 0.0;
    for (auto it = sol.coeffs.rbegin(); it != sol.coeffs.rend(); ++it) poly = poly * y + *it;
    const double power = pseudoharmonic ? sol.delta + 1.5 : sol.delta + 0.5;
    const double exponent = pseudoharmonic ? 0.5 * sol.alpha * r * r : sol.alpha * r;
    return poly * std::pow(r, power) * std::exp(exponent);
}

int count_polynomial_nodes(const AnsatzSolution& sol) {
    const int p = sol.state.p;
    if (p == 0) return 0;
    const auto& a = sol.coeffs;
    // Cauchy bound on the positive roots of the degree-p polynomial in
    // y (= r^2 or r), then a dense scan for sign changes.
    double bound = 0.0;
    for (int i = 0; i < p; ++i)
        bound = std::max(bound, std::abs(a[static_cast<std::size_t>(i)]) /
                                    std::abs(a[static_cast<std::size_t>(p)]));
    const double y_max = 1.0 + bound;
    const int samples = 200000;
    auto poly_at = [&a](double y) {
        double v = 0.0;
        for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * y + *it;
        return v;
    };
    int changes = 0;
    double prev = poly_at(y_max * 1e-9);
    for (int i = 1; i <= samples; ++i) {
        const double y = y_max * static_cast<double>(i) / samples;
        const double v = poly_at(y);
        if (prev != 0.0 && v != 0.0 && std::signbit(prev) != std::signbit(v)) ++changes;
        if (v != 0.0) prev = v;
    }
    return changes;
}

} // namespace radsolve
