#pragma once

#include <string>
#include <vector>

namespace radsolve {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    /// Testing hook: relative perturbation applied to one stored reference
    /// constant (the hydrogen ground-state anchor). Any nonzero value must
    /// flip the anchor check to failed.
    double fault = 0.0;
};

// The five self-verification checks run by the `verify` subcommand, each
// pinned to its tolerance:
//  1. printed closed forms vs the generic quantization route (1e-12)
//  2. analytic energies vs the finite-difference solver on the demo
//     potentials (1e-6 pseudoharmonic, 1e-5 modified Kratzer)
//  3. exact anchors: Coulomb levels, oscillator ground state, hydrogen
//     1s amplitude and 2s coefficient ratio (1e-10; oracle 1e-4)
//  4. wave-function validity: normalization 1e-8, equation residual 1e-8,
//     node counts, orthogonality 1e-6
//  5. structural identities: exact De shift, interdimensional degeneracy,
//     vanishing truncation determinant
CheckResult check_formula_consistency();
CheckResult check_oracle_equivalence();
CheckResult check_exact_anchors(const VerifyOptions& options = {});
CheckResult check_wavefunction_validity();
CheckResult check_structural_identities();

/// Regression guards for the coefficient conventions: the Mie p=1 ratio must
/// reproduce hydrogen 2s, the rejected alternative relation must fail the
/// equation residual, and the Mie linear coefficient must carry the doubled
/// well-depth mapping.
CheckResult check_coefficient_conventions();

/// Checks 1-5 in order.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

} // namespace radsolve
