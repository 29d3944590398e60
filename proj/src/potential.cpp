#include "radsolve/potential.hpp"

#include <cmath>
#include <stdexcept>

namespace radsolve {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0)) throw std::invalid_argument(std::string(name) + " must be > 0");
}

} // namespace

std::string PotentialSpec::label() const {
    struct Visitor {
        std::string operator()(const RawAbc&) const { return "raw"; }
        std::string operator()(const PseudoharmonicOrigin&) const { return "pseudoharmonic"; }
        std::string operator()(const HarmonicInverseSquareOrigin&) const {
            return "harmonic-inverse-square";
        }
        std::string operator()(const AnharmonicOrigin&) const { return "anharmonic"; }
        std::string operator()(const KratzerFuesOrigin&) const { return "kratzer"; }
        std::string operator()(const ModifiedKratzerOrigin&) const { return "modified-kratzer"; }
        std::string operator()(const CoulombOrigin&) const { return "coulomb"; }
    };
    return std::visit(Visitor{}, origin);
}

void PotentialSpec::validate() const {
    if (family == PotentialFamily::Pseudoharmonic) {
        if (!(a > 0.0))
            throw std::invalid_argument("Pseudoharmonic family requires a > 0 (confining)");
    } else {
        if (!(a < 0.0)) throw std::invalid_argument("Mie family requires a < 0 (attractive)");
    }
    if (b < 0.0) throw std::invalid_argument("potential requires b >= 0");
}

PotentialSpec make_pseudoharmonic(double De, double re) {
    require_positive(De, "De");
    require_positive(re, "re");
    PotentialSpec spec;
    spec.family = PotentialFamily::Pseudoharmonic;
    spec.a = De / (re * re);
    spec.b = De * re * re;
    spec.c = -2.0 * De;
    spec.origin = PseudoharmonicOrigin{De, re};
    return spec;
}

PotentialSpec make_harmonic_inverse_square(double omega, double g,
                                           const PhysicalConstants& constants) {
    require_positive(omega, "omega");
    if (g < 0.0) throw std::invalid_argument("g must be >= 0");
    constants.validate();
    PotentialSpec spec;
    spec.family = PotentialFamily::Pseudoharmonic;
    spec.a = 0.5 * constants.mu * omega * omega;
    spec.b = g;
    spec.c = 0.0;
    spec.origin = HarmonicInverseSquareOrigin{omega, g};
    return spec;
}

PotentialSpec make_anharmonic(double B) {
    require_positive(B, "B");
    PotentialSpec spec;
    spec.family = PotentialFamily::Pseudoharmonic;
    spec.a = B * B;
    spec.b = 0.0;
    spec.c = 0.0;
    spec.origin = AnharmonicOrigin{B};
    return spec;
}

PotentialSpec make_kratzer_fues(double De, double re) {
    require_positive(De, "De");
    require_positive(re, "re");
    PotentialSpec spec;
    spec.family = PotentialFamily::Mie;
    spec.a = -2.0 * De * re;
    spec.b = De * re * re;
    spec.c = 0.0;
    spec.origin = KratzerFuesOrigin{De, re};
    return spec;
}

PotentialSpec make_modified_kratzer(double De, double re) {
    PotentialSpec spec = make_kratzer_fues(De, re);
    spec.c = De;
    spec.origin = ModifiedKratzerOrigin{De, re};
    return spec;
}

PotentialSpec make_coulomb(double A) {
    require_positive(A, "A");
    PotentialSpec spec;
    spec.family = PotentialFamily::Mie;
    spec.a = -A;
    spec.b = 0.0;
    spec.c = 0.0;
    spec.origin = CoulombOrigin{A};
    return spec;
}

PotentialSpec make_raw(PotentialFamily family, double a, double b, double c) {
    PotentialSpec spec;
    spec.family = family;
    spec.a = a;
    spec.b = b;
    spec.c = c;
    spec.origin = RawAbc{};
    spec.validate();
    return spec;
}

ReducedProblem make_reduced(const PotentialSpec& potential, int ell, int dim,
                            const PhysicalConstants& constants) {
    potential.validate();
    constants.validate();
    ReducedProblem problem;
    problem.eta = eta(ell, dim);
    problem.potential = potential;
    problem.constants = constants;
    return problem;
}

} // namespace radsolve
