#include "radsolve/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "radsolve/ansatz.hpp"
#include "radsolve/errors.hpp"
#include "radsolve/oracle.hpp"

namespace radsolve {

namespace {

void check_state_args(int n, int ell, int dim) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (ell < 0) throw std::invalid_argument("ell must be >= 0");
    if (dim < 2) throw std::invalid_argument("dim must be >= 2");
}

void check_molecular(double De, double re) {
    if (!(De > 0.0)) throw std::invalid_argument("De must be > 0");
    if (!(re > 0.0)) throw std::invalid_argument("re must be > 0");
}

} // namespace

double energy_pseudoharmonic(double De, double re, const PhysicalConstants& constants, int n,
                             int ell, int dim) {
    check_molecular(De, re);
    check_state_args(n, ell, dim);
    constants.validate();
    const double h2 = constants.hbar * constants.hbar;
    const double inner =
        std::sqrt(8.0 * constants.mu * De * re * re / h2 + std::pow(2.0 * ell + dim - 2.0, 2));
    return -2.0 * De + std::sqrt(h2 * De / (2.0 * constants.mu * re * re)) * (4.0 * n + 2.0 + inner);
}

double energy_harmonic_inverse_square(double omega, double g, const PhysicalConstants& constants,
                                      int n, int ell) {
    if (!(omega > 0.0)) throw std::invalid_argument("omega must be > 0");
    if (g < 0.0) throw std::invalid_argument("g must be >= 0");
    check_state_args(n, ell, 3);
    constants.validate();
    const double h2 = constants.hbar * constants.hbar;
    const double inner = std::sqrt(std::pow(2.0 * ell + 1.0, 2) + 8.0 * constants.mu * g / h2);
    return 0.5 * constants.hbar * omega * (4.0 * n + 2.0 + inner);
}

double energy_anharmonic(double B, const PhysicalConstants& constants, int n, int ell, int dim) {
    if (!(B > 0.0)) throw std::invalid_argument("B must be > 0");
    check_state_args(n, ell, dim);
    constants.validate();
    return std::sqrt(constants.hbar * constants.hbar / (2.0 * constants.mu)) * B *
           (4.0 * n + 2.0 * ell + dim);
}

double energy_kratzer_fues(double De, double re, const PhysicalConstants& constants, int n,
                           int ell, int dim) {
    check_molecular(De, re);
    check_state_args(n, ell, dim);
    constants.validate();
    const double h2 = constants.hbar * constants.hbar;
    const double inner =
        std::sqrt(8.0 * constants.mu * De * re * re / h2 + std::pow(2.0 * ell + dim - 2.0, 2));
    const double denom = 2.0 * n + 1.0 + inner;
    const double strength = 4.0 * constants.mu * De * re / h2;
    return -(h2 / (2.0 * constants.mu)) * strength * strength / (denom * denom);
}

double energy_modified_kratzer(double De, double re, const PhysicalConstants& constants, int n,
                               int ell, int dim) {
    return De + energy_kratzer_fues(De, re, constants, n, ell, dim);
}

double energy_coulomb(double A, const PhysicalConstants& constants, int n, int ell, int dim) {
    if (!(A > 0.0)) throw std::invalid_argument("A must be > 0");
    check_state_args(n, ell, dim);
    constants.validate();
    const double q = n + ell + 0.5 * (dim - 1.0);
    return -constants.mu * A * A / (2.0 * constants.hbar * constants.hbar * q * q);
}

double energy_analytic(const PotentialSpec& potential, const PhysicalConstants& constants, int n,
                       int ell, int dim) {
    struct Visitor {
        const PhysicalConstants& constants;
        const PotentialSpec& potential;
        int n, ell, dim;

        double operator()(const RawAbc&) const {
            const ReducedProblem problem = make_reduced(potential, ell, dim, constants);
            return quantized_energy(problem, n, delta_restriction(problem));
        }
        double operator()(const PseudoharmonicOrigin& o) const {
            return energy_pseudoharmonic(o.De, o.re, constants, n, ell, dim);
        }
        double operator()(const HarmonicInverseSquareOrigin& o) const {
            if (dim != 3)
                throw std::invalid_argument(
                    "harmonic-inverse-square closed form is three-dimensional; use a raw "
                    "potential for other D");
            return energy_harmonic_inverse_square(o.omega, o.g, constants, n, ell);
        }
        double operator()(const AnharmonicOrigin& o) const {
            return energy_anharmonic(o.B, constants, n, ell, dim);
        }
        double operator()(const KratzerFuesOrigin& o) const {
            return energy_kratzer_fues(o.De, o.re, constants, n, ell, dim);
        }
        double operator()(const ModifiedKratzerOrigin& o) const {
            return energy_modified_kratzer(o.De, o.re, constants, n, ell, dim);
        }
        double operator()(const CoulombOrigin& o) const {
            return energy_coulomb(o.A, constants, n, ell, dim);
        }
    };
    return std::visit(Visitor{constants, potential, n, ell, dim}, potential.origin);
}

void SpectrumRequest::validate() const {
    potential.validate();
    constants.validate();
    if (n_max < 0) throw std::invalid_argument("SpectrumRequest: n_max must be >= 0");
    if (ell_max < 0) throw std::invalid_argument("SpectrumRequest: ell_max must be >= 0");
    if (dims.empty()) throw std::invalid_argument("SpectrumRequest: dims must be non-empty");
    for (int d : dims)
        if (d < 2) throw std::invalid_argument("SpectrumRequest: every dim must be >= 2");
    if (label.empty()) throw std::invalid_argument("SpectrumRequest: label must be non-empty");
}

SpectrumTable build_table(const SpectrumRequest& request, bool verify) {
    request.validate();
    SpectrumTable table;
    std::vector<int> dims = request.dims;
    std::sort(dims.begin(), dims.end());
    dims.erase(std::unique(dims.begin(), dims.end()), dims.end());

    for (int dim : dims) {
        for (int ell = 0; ell <= request.ell_max; ++ell) {
            const ReducedProblem problem =
                make_reduced(request.potential, ell, dim, request.constants);
            for (int n = 0; n <= request.n_max; ++n) {
                SpectrumRow row;
                row.molecule = request.label;
                row.dim = dim;
                row.ell = ell;
                row.n = n;
                try {
                    row.e_analytic =
                        energy_analytic(request.potential, request.constants, n, ell, dim);
                    row.e_generic = quantized_energy(problem, n, delta_restriction(problem));
                    if (verify) {
                        const double tol = default_oracle_tolerance(request.potential.family);
                        const OracleResult oracle =
                            solve_numeric(problem, n, suggest_grid(problem, n), tol);
                        row.e_oracle = oracle.eigenvalue;
                        row.rel_err = std::abs(oracle.eigenvalue - row.e_analytic) /
                                      std::max(std::abs(row.e_analytic), 1e-300);

                        const AnsatzSolution sol = solve_state(problem, QuantumState{n, ell, dim});
                        GridSpec quad;
                        quad.r_max = tail_box_radius(problem, sol.energy);
                        quad.r_min = quad.r_max * 1e-8;
                        quad.points = 1024;
                        const double norm = normalize_integral(
                            [&sol](double r) { return evaluate_wavefunction(sol, r); }, dim, quad);
                        row.norm_check = std::abs(norm - 1.0);
                        const std::vector<double> samples = residual_sample_points(sol);
                        row.residual = ode_residual(sol, problem, samples);

                        if (*row.rel_err > tol) {
                            row.ok = false;
                            row.message = "oracle disagreement above tolerance";
                        }
                    }
                } catch (const std::exception& err) {
                    row.ok = false;
                    row.message = err.what();
                }
                table.rows.push_back(std::move(row));
            }
        }
    }
    return table;
}

} // namespace radsolve
