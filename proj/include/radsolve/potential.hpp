#pragma once

#include <string>
#include <variant>

#include "radsolve/core.hpp"

namespace radsolve {

/// The two potential families the ansatz method solves in closed form.
///   Pseudoharmonic:  V(r) = a r^2 + b / r^2 + c   with a > 0
///   Mie:             V(r) = a / r + b / r^2 + c   with a < 0, b >= 0
enum class PotentialFamily { Pseudoharmonic, Mie };

// Molecular / model parameterizations a PotentialSpec can originate from.
// The reduced (a, b, c) triple is always derived from these; RawAbc marks a
// spec built directly from the triple.
struct RawAbc {};
struct PseudoharmonicOrigin {
    double De, re;
};
struct HarmonicInverseSquareOrigin {
    double omega, g;
};
struct AnharmonicOrigin {
    double B;
};
struct KratzerFuesOrigin {
    double De, re;
};
struct ModifiedKratzerOrigin {
    double De, re;
};
struct CoulombOrigin {
    double A;
};

using PotentialOrigin = std::variant<RawAbc, PseudoharmonicOrigin, HarmonicInverseSquareOrigin,
                                     AnharmonicOrigin, KratzerFuesOrigin, ModifiedKratzerOrigin,
                                     CoulombOrigin>;

/// A potential in reduced form, together with the parameters it came from.
/// Immutable value type; fields are set by the make_* constructors below.
struct PotentialSpec {
    PotentialFamily family = PotentialFamily::Pseudoharmonic;
    double a = 1.0; ///< coefficient of r^2 (Pseudoharmonic) or 1/r (Mie)
    double b = 0.0; ///< coefficient of 1/r^2
    double c = 0.0; ///< constant offset
    PotentialOrigin origin = RawAbc{};

    /// V(r) in reduced form. r must be > 0.
    double value(double r) const {
        if (!(r > 0.0)) throw std::invalid_argument("PotentialSpec::value: r must be > 0");
        const double radial = family == PotentialFamily::Pseudoharmonic ? a * r * r : a / r;
        return radial + b / (r * r) + c;
    }

    /// Asymptotic value V(r -> infinity) for the Mie family (bound states
    /// require E < c); the Pseudoharmonic family confines for all E.
    double dissociation_limit() const { return c; }

    /// Human-readable origin label for tables.
    std::string label() const;

    void validate() const;
};

/// De (r/re - re/r)^2  ->  a = De/re^2, b = De re^2, c = -2 De.
PotentialSpec make_pseudoharmonic(double De, double re);

/// Isotropic harmonic oscillator of frequency omega plus g/r^2:
/// a = mu omega^2 / 2, b = g, c = 0. g = 0 is the pure oscillator.
PotentialSpec make_harmonic_inverse_square(double omega, double g,
                                           const PhysicalConstants& constants = {});

/// B^2 r^2 confinement: a = B^2, b = c = 0.
PotentialSpec make_anharmonic(double B);

/// -De (2 re/r - re^2/r^2)  ->  a = -2 De re, b = De re^2, c = 0.
PotentialSpec make_kratzer_fues(double De, double re);

/// De ((r - re)/r)^2 = Kratzer-Fues shifted by De  ->  c = De.
PotentialSpec make_modified_kratzer(double De, double re);

/// -A/r  ->  a = -A, b = c = 0.
PotentialSpec make_coulomb(double A);

/// Direct construction from the reduced triple, for potentials without a
/// named molecular origin. Family sign conventions are enforced.
PotentialSpec make_raw(PotentialFamily family, double a, double b, double c);

/// The effective one-dimensional problem for R(r): all of ell and D enter
/// through eta, so this is the complete input to the ansatz engine and the
/// numerical oracle.
struct ReducedProblem {
    double eta = 0.5;
    PotentialSpec potential;
    PhysicalConstants constants;

    /// Coefficient of the 1/r^2 barrier in the reduced equation.
    double barrier_coefficient() const { return eta * eta - 0.25; }

    /// 2 mu V(r) / hbar^2 + (eta^2 - 1/4) / r^2, the full effective term.
    double effective_term(double r) const {
        const double k = 2.0 * constants.mu / (constants.hbar * constants.hbar);
        return k * potential.value(r) + barrier_coefficient() / (r * r);
    }
};

ReducedProblem make_reduced(const PotentialSpec& potential, int ell, int dim,
                            const PhysicalConstants& constants = {});

} // namespace radsolve
