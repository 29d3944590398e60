#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radsolve/core.hpp"
#include "radsolve/potential.hpp"

namespace radsolve {

// Closed-form energy levels of the named potentials, written exactly as the
// standard results read. Each must agree with the generic quantized_energy
// route to roundoff; the cross-check lives in build_table and the tests.
// The radial quantum number n equals the polynomial degree p (both count
// radial nodes).

double energy_pseudoharmonic(double De, double re, const PhysicalConstants& constants, int n,
                             int ell, int dim);

/// Oscillator-plus-inverse-square level; three-dimensional form.
double energy_harmonic_inverse_square(double omega, double g, const PhysicalConstants& constants,
                                      int n, int ell);

double energy_anharmonic(double B, const PhysicalConstants& constants, int n, int ell, int dim);

double energy_kratzer_fues(double De, double re, const PhysicalConstants& constants, int n,
                           int ell, int dim);

/// Kratzer-Fues shifted by De; shares the Kratzer term bit-for-bit, so the
/// difference of the two is exactly De.
double energy_modified_kratzer(double De, double re, const PhysicalConstants& constants, int n,
                               int ell, int dim);

double energy_coulomb(double A, const PhysicalConstants& constants, int n, int ell, int dim);

/// Closed-form level for a potential by its origin tag; RawAbc falls back to
/// the generic engine (there is no separate printed form to check against).
double energy_analytic(const PotentialSpec& potential, const PhysicalConstants& constants, int n,
                       int ell, int dim);

struct SpectrumRequest {
    PotentialSpec potential;
    PhysicalConstants constants;
    std::string label = "demo";
    int n_max = 0;
    int ell_max = 0;
    std::vector<int> dims = {3};

    void validate() const;
};

struct SpectrumRow {
    std::string molecule;
    int dim = 3;
    int n = 0;
    int ell = 0;
    double e_analytic = 0.0;
    double e_generic = 0.0;
    std::optional<double> e_oracle;
    std::optional<double> rel_err;    ///< |E_oracle - E_analytic| / |E_analytic|
    std::optional<double> norm_check; ///< |integral psi^2 r^{D-1} dr - 1|
    std::optional<double> residual;   ///< max scaled residual of the radial equation
    bool ok = true;
    std::string message; ///< failure diagnostic when !ok
};

struct SpectrumTable {
    std::vector<SpectrumRow> rows; ///< sorted by (D, ell, n)
};

/// One row per (D, ell, n) in range. E_analytic from the family formula and
/// E_generic from the ansatz engine always; with verify also the
/// finite-difference eigenvalue and wave-function diagnostics. Row-level
/// failures are recorded in the row, not thrown.
SpectrumTable build_table(const SpectrumRequest& request, bool verify);

} // namespace radsolve
