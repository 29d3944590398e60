#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "radsolve/core.hpp"
#include "radsolve/potential.hpp"

using namespace radsolve;

TEST_CASE("eta is the exact half-integer combination of l and D") {
    CHECK(eta(0, 3) == 0.5);
    CHECK(eta(1, 3) == 1.5);
    CHECK(eta(2, 6) == 4.0);
    CHECK(eta(0, 2) == 0.0);
    CHECK_THROWS_AS(eta(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(eta(-1, 3), std::invalid_argument);
}

TEST_CASE("interdimensional degeneracy of eta is exact") {
    for (int ell = 0; ell <= 7; ++ell)
        for (int dim = 2; dim <= 12; ++dim) CHECK(eta(ell, dim + 2) == eta(ell + 1, dim));
}

TEST_CASE("pseudoharmonic mapping") {
    const PotentialSpec spec = make_pseudoharmonic(1.0, 1.0);
    CHECK(spec.family == PotentialFamily::Pseudoharmonic);
    CHECK(spec.a == 1.0);
    CHECK(spec.b == 1.0);
    CHECK(spec.c == -2.0);

    const PotentialSpec wide = make_pseudoharmonic(4.0, 2.0);
    CHECK(wide.a == 1.0);
    CHECK(wide.b == 16.0);
    CHECK(wide.c == -8.0);

    CHECK_THROWS_AS(make_pseudoharmonic(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_pseudoharmonic(-1.0, 1.0), std::invalid_argument);
}

TEST_CASE("modified Kratzer mapping carries the doubled linear coefficient") {
    const PotentialSpec spec = make_modified_kratzer(1.0, 1.0);
    CHECK(spec.family == PotentialFamily::Mie);
    CHECK(spec.a == -2.0);
    CHECK(spec.b == 1.0);
    CHECK(spec.c == 1.0);

    const PotentialSpec other = make_modified_kratzer(3.0, 2.0);
    CHECK(other.a == -12.0);
    CHECK(other.b == 12.0);
    CHECK(other.c == 3.0);

    CHECK_THROWS_AS(make_modified_kratzer(0.0, 1.0), std::invalid_argument);
}

TEST_CASE("Kratzer-Fues is the modified form minus the De shift") {
    const PotentialSpec spec = make_kratzer_fues(1.0, 1.0);
    CHECK(spec.a == -2.0);
    CHECK(spec.b == 1.0);
    CHECK(spec.c == 0.0);
    CHECK_THROWS_AS(make_kratzer_fues(1.0, -1.0), std::invalid_argument);

    for (const auto& [De, re] : {std::pair{1.0, 1.0}, {3.0, 2.0}, {0.7, 1.3}}) {
        const PotentialSpec shifted = make_modified_kratzer(De, re);
        const PotentialSpec base = make_kratzer_fues(De, re);
        CHECK(shifted.c - base.c == De);
        CHECK(shifted.a == base.a);
        CHECK(shifted.b == base.b);
    }
}

TEST_CASE("Coulomb mapping") {
    const PotentialSpec spec = make_coulomb(1.0);
    CHECK(spec.family == PotentialFamily::Mie);
    CHECK(spec.a == -1.0);
    CHECK(spec.b == 0.0);
    CHECK(spec.c == 0.0);
    CHECK(make_coulomb(2.0).a == -2.0);
    CHECK_THROWS_AS(make_coulomb(-1.0), std::invalid_argument);
}

TEST_CASE("oscillator-family mappings") {
    const PotentialSpec osc = make_harmonic_inverse_square(1.0, 0.0);
    CHECK(osc.a == 0.5);
    CHECK(osc.b == 0.0);
    CHECK(osc.c == 0.0);
    CHECK(osc.family == PotentialFamily::Pseudoharmonic);

    const PotentialSpec anharmonic = make_anharmonic(1.0);
    CHECK(anharmonic.a == 1.0);
    CHECK(anharmonic.b == 0.0);
    CHECK(anharmonic.c == 0.0);

    CHECK_THROWS_AS(make_harmonic_inverse_square(1.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_harmonic_inverse_square(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_anharmonic(0.0), std::invalid_argument);
}

TEST_CASE("raw construction enforces family signs") {
    CHECK_NOTHROW(make_raw(PotentialFamily::Pseudoharmonic, 2.0, 0.5, -1.0));
    CHECK_NOTHROW(make_raw(PotentialFamily::Mie, -2.0, 0.5, 1.0));
    CHECK_THROWS_AS(make_raw(PotentialFamily::Pseudoharmonic, -1.0, 0.0, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_raw(PotentialFamily::Mie, 1.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_raw(PotentialFamily::Mie, -1.0, -0.5, 0.0), std::invalid_argument);
}

TEST_CASE("reduced form reproduces the molecular forms pointwise") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> radius(0.1, 10.0);
    std::uniform_real_distribution<double> param(0.3, 3.0);

    for (int trial = 0; trial < 5; ++trial) {
        const double De = param(rng);
        const double re = param(rng);
        const PotentialSpec pseudo = make_pseudoharmonic(De, re);
        const PotentialSpec kratzer = make_kratzer_fues(De, re);
        const PotentialSpec modified = make_modified_kratzer(De, re);
        for (int i = 0; i < 100; ++i) {
            const double r = radius(rng);
            const double ratio = r / re - re / r;
            const double v_pseudo = De * ratio * ratio;
            const double v_kratzer = -De * (2.0 * re / r - re * re / (r * r));
            const double shift = (r - re) / r;
            const double v_modified = De * shift * shift;
            CHECK(pseudo.value(r) ==
                  doctest::Approx(v_pseudo).epsilon(1e-12).scale(std::abs(v_pseudo) + 1.0));
            CHECK(kratzer.value(r) ==
                  doctest::Approx(v_kratzer).epsilon(1e-12).scale(std::abs(v_kratzer) + 1.0));
            CHECK(modified.value(r) ==
                  doctest::Approx(v_modified).epsilon(1e-12).scale(std::abs(v_modified) + 1.0));
        }
    }
}

TEST_CASE("reduced problem barrier vanishes for the s-wave in three dimensions") {
    const ReducedProblem problem = make_reduced(make_pseudoharmonic(1.0, 1.0), 0, 3);
    CHECK(problem.barrier_coefficient() == 0.0);
    CHECK(problem.eta == 0.5);
}

TEST_CASE("wavefunction recovery from the reduced radial function") {
    CHECK(wavefunction_from_reduced(2.0, 1.0, 3) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(wavefunction_from_reduced(4.0, 2.0, 3) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(wavefunction_from_reduced(1.0, 4.0, 2) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(wavefunction_from_reduced(1.0, 0.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(wavefunction_from_reduced(1.0, -1.0, 3), std::invalid_argument);
}

TEST_CASE("constants and states validate their ranges") {
    CHECK_THROWS_AS((PhysicalConstants{0.0, 1.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((PhysicalConstants{1.0, -2.0}.validate()), std::invalid_argument);
    CHECK_NOTHROW(PhysicalConstants{}.validate());
    CHECK_THROWS_AS((QuantumState{-1, 0, 3}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((QuantumState{0, 0, 1}.validate()), std::invalid_argument);
    CHECK_NOTHROW((QuantumState{0, 0, 2}.validate()));
}
