#pragma once

#include <cmath>
#include <stdexcept>

namespace radsolve {

/// Units are the caller's responsibility; the defaults make every quantity
/// dimensionless (hbar = mu = 1).
struct PhysicalConstants {
    double hbar = 1.0;
    double mu = 1.0;

    void validate() const {
        if (!(hbar > 0.0)) throw std::invalid_argument("PhysicalConstants: hbar must be > 0");
        if (!(mu > 0.0)) throw std::invalid_argument("PhysicalConstants: mu must be > 0");
    }
};

/// Bound-state index: p is the polynomial degree of the radial factor and
/// equals the radial node count, ell the angular momentum quantum number,
/// dim the number of spatial dimensions (>= 2).
struct QuantumState {
    int p = 0;
    int ell = 0;
    int dim = 3;

    void validate() const {
        if (p < 0) throw std::invalid_argument("QuantumState: p must be >= 0");
        if (ell < 0) throw std::invalid_argument("QuantumState: ell must be >= 0");
        if (dim < 2) throw std::invalid_argument("QuantumState: dim must be >= 2");
    }
};

/// eta = ell + (D-2)/2, the single parameter through which ell and D enter
/// the reduced radial equation. Exact in binary floating point.
inline double eta(int ell, int dim) {
    if (ell < 0) throw std::invalid_argument("eta: ell must be >= 0");
    if (dim < 2) throw std::invalid_argument("eta: dim must be >= 2");
    return static_cast<double>(ell) + 0.5 * static_cast<double>(dim - 2);
}

/// Undo the first-derivative-removing substitution: psi(r) = r^{-(D-1)/2} R(r).
inline double wavefunction_from_reduced(double reduced_value, double r, int dim) {
    if (!(r > 0.0)) throw std::invalid_argument("wavefunction_from_reduced: r must be > 0");
    return reduced_value * std::pow(r, -0.5 * static_cast<double>(dim - 1));
}

} // namespace radsolve
