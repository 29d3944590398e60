#pragma once

#include <vector>

#include "radsolve/core.hpp"
#include "radsolve/potential.hpp"

namespace radsolve {

/// Coefficients of the three-term relation
///   A_n a_n + B_{n+1} a_{n+1} + C_{n+2} a_{n+2} = 0
/// produced by substituting the polynomial-times-exponential ansatz into the
/// reduced radial equation. C_n vanishes identically for both families, which
/// is what makes the closed-form truncation possible: A holds A_0..A_p, B
/// holds B_0..B_{p+1}, C mirrors B's indexing.
struct RecursionCoeffs {
    std::vector<double> A;
    std::vector<double> B;
    std::vector<double> C;
};

enum class NormMode { ClosedFormGamma, NumericQuadrature };

/// A complete closed-form eigenpair: the quantized energy together with the
/// normalized radial wave function
///   Pseudoharmonic: psi(r) = (sum a_n r^{2n}) r^{delta+2-D/2} exp(alpha r^2 / 2)
///   Mie:            psi(r) = (sum a_n r^n)    r^{delta-(D-2)/2} exp(alpha r)
struct AnsatzSolution {
    QuantumState state;
    PotentialFamily family = PotentialFamily::Pseudoharmonic;
    double delta = 0.0;           ///< indicial parameter, from B_0 = 0
    double alpha = -1.0;          ///< exponent scale, always negative
    double energy = 0.0;          ///< E_p from A_p = 0
    std::vector<double> coeffs;   ///< a_0..a_p, normalized, a_0 > 0
    NormMode norm_mode = NormMode::ClosedFormGamma;
    PhysicalConstants constants;

    /// Power of r multiplying the polynomial factor of psi.
    double leading_power() const {
        return family == PotentialFamily::Pseudoharmonic
                   ? delta + 2.0 - 0.5 * static_cast<double>(state.dim)
                   : delta - 0.5 * static_cast<double>(state.dim - 2);
    }
};

/// delta from B_0 = 0: the indicial exponent is fixed by the 1/r^2 strength
/// and eta, independent of p.
///   Pseudoharmonic: delta = -1 + sqrt(2 mu b / hbar^2 + eta^2)
///   Mie:            delta =      sqrt(2 mu b / hbar^2 + eta^2)
double delta_restriction(const ReducedProblem& problem);

/// E_p from the truncation condition A_p = 0.
///   Pseudoharmonic: E = c + sqrt(2 hbar^2 a / mu) (2p + delta + 2)
///   Mie:            E = c - mu a^2 / (2 hbar^2 (p + delta + 1/2)^2)
double quantized_energy(const ReducedProblem& problem, int p, double delta);

/// Exponent-scale parameter of the decaying branch (always negative).
/// Pseudoharmonic: alpha = -sqrt(2 mu a / hbar^2), energy-independent.
/// Mie: alpha = -sqrt(-2 mu (E - c) / hbar^2); requires E < c and must agree
/// with the quantization route alpha = (mu a / hbar^2) / (p + delta + 1/2).
double alpha_param(const ReducedProblem& problem, int p, double delta, double energy);

/// Evaluate A_0..A_p, B_0..B_{p+1} (and the identically-zero C row) at the
/// given parameters. With delta from delta_restriction and energy from
/// quantized_energy, B_0 = 0 and A_p = 0 hold to roundoff.
RecursionCoeffs recursion_coeffs(const ReducedProblem& problem, int p, double delta, double alpha,
                                 double energy);

/// a_0..a_p with a_0 = 1 and a_{n+1} = -A_n a_n / B_{n+1}.
/// Throws DegenerateRecursion if a needed B_{n+1} vanishes.
std::vector<double> polynomial_coeffs(const RecursionCoeffs& rc, int p);

/// Determinant of the (p+1)x(p+1) banded truncation matrix (B_n diagonal,
/// A_n subdiagonal, C_n superdiagonal). With C identically zero it reduces
/// to the product B_0 B_1 ... B_p, which vanishes at the restricted delta.
double determinant_condition(const RecursionCoeffs& rc, int p);

/// Full pipeline: delta -> energy -> alpha -> recursion -> coefficients ->
/// normalization. p = 0 uses the closed-form Gamma constant; p >= 1 runs the
/// recursion from a_0 = 1 and rescales by numeric quadrature.
AnsatzSolution solve_state(const ReducedProblem& problem, const QuantumState& state);

/// psi(r) for a solved state. r must be > 0.
double evaluate_wavefunction(const AnsatzSolution& sol, double r);

/// R(r) = r^{(D-1)/2} psi(r), the reduced radial function.
double evaluate_reduced_radial(const AnsatzSolution& sol, double r);

/// Positive roots of the polynomial factor (the radial nodes of psi).
/// Exact count is p for a valid solution.
int count_polynomial_nodes(const AnsatzSolution& sol);

} // namespace radsolve
