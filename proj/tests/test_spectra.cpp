#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "radsolve/ansatz.hpp"
#include "radsolve/potential.hpp"
#include "radsolve/spectra.hpp"

using namespace radsolve;

namespace {

const PhysicalConstants kUnits;

double rel(double x, double y) {
    return std::abs(x - y) / std::max({std::abs(x), std::abs(y), 1e-300});
}

} // namespace

TEST_CASE("pseudoharmonic levels") {
    CHECK(rel(energy_pseudoharmonic(1, 1, kUnits, 0, 0, 3), 1.5355339059327376) < 1e-14);
    CHECK(rel(energy_pseudoharmonic(1, 1, kUnits, 1, 0, 3), 4.363961030678928) < 1e-14);
    CHECK(rel(energy_pseudoharmonic(1, 1, kUnits, 0, 1, 3), 2.3296895097957453) < 1e-14);
    for (int n = 0; n <= 3; ++n)
        CHECK(energy_pseudoharmonic(1, 1, kUnits, n, 0, 5) ==
              energy_pseudoharmonic(1, 1, kUnits, n, 1, 3));
    CHECK_THROWS_AS(energy_pseudoharmonic(0, 1, kUnits, 0, 0, 3), std::invalid_argument);
}

TEST_CASE("oscillator-plus-inverse-square levels") {
    CHECK(rel(energy_harmonic_inverse_square(1, 0, kUnits, 0, 0), 1.5) < 1e-14);
    CHECK(rel(energy_harmonic_inverse_square(1, 1, kUnits, 0, 0), 2.5) < 1e-14);
    CHECK(rel(energy_harmonic_inverse_square(1, 0, kUnits, 0, 1), 2.5) < 1e-14);
    CHECK_THROWS_AS(energy_harmonic_inverse_square(1, -1, kUnits, 0, 0), std::invalid_argument);
}

TEST_CASE("confined-oscillator levels") {
    CHECK(rel(energy_anharmonic(1.0 / std::sqrt(2.0), kUnits, 0, 0, 3), 1.5) < 1e-14);
    CHECK(rel(energy_anharmonic(1, kUnits, 1, 2, 3), 7.778174593052023) < 1e-14);
    CHECK(energy_anharmonic(1, kUnits, 0, 0, 5) == energy_anharmonic(1, kUnits, 0, 1, 3));
}

TEST_CASE("Kratzer-Fues levels and the exact De shift") {
    CHECK(rel(energy_kratzer_fues(1, 1, kUnits, 0, 0, 3), -0.5) < 1e-14);
    CHECK(rel(energy_kratzer_fues(1, 1, kUnits, 1, 0, 3), -2.0 / 9.0) < 1e-14);
    for (int n = 0; n <= 5; ++n)
        for (int ell = 0; ell <= 3; ++ell)
            for (int dim : {2, 3, 4, 6})
                CHECK(energy_modified_kratzer(1, 1, kUnits, n, ell, dim) -
                          energy_kratzer_fues(1, 1, kUnits, n, ell, dim) ==
                      1.0);
}

TEST_CASE("modified Kratzer levels") {
    CHECK(rel(energy_modified_kratzer(1, 1, kUnits, 0, 0, 3), 0.5) < 1e-14);
    CHECK(rel(energy_modified_kratzer(1, 1, kUnits, 1, 0, 3), 7.0 / 9.0) < 1e-14);
    CHECK(rel(energy_modified_kratzer(1, 1, kUnits, 0, 1, 3), 0.6951941016011038) < 1e-14);
    // dissociation limit: E -> De from below as n grows
    double previous = energy_modified_kratzer(1, 1, kUnits, 0, 0, 3);
    for (int n : {1, 5, 20, 100, 400}) {
        const double e_n = energy_modified_kratzer(1, 1, kUnits, n, 0, 3);
        CHECK(e_n > previous);
        CHECK(e_n < 1.0);
        previous = e_n;
    }
    CHECK(1.0 - energy_modified_kratzer(1, 1, kUnits, 400, 0, 3) < 1e-4);
}

TEST_CASE("Coulomb levels and their degeneracies") {
    CHECK(rel(energy_coulomb(1, kUnits, 0, 0, 3), -0.5) < 1e-14);
    CHECK(energy_coulomb(1, kUnits, 1, 0, 3) == energy_coulomb(1, kUnits, 0, 1, 3));
    CHECK(rel(energy_coulomb(1, kUnits, 1, 0, 3), -0.125) < 1e-14);
    CHECK(rel(energy_coulomb(1, kUnits, 0, 0, 5), -0.125) < 1e-14);
    // E depends on the quantum numbers only through n + l + (D-1)/2
    CHECK(energy_coulomb(1, kUnits, 2, 1, 3) == energy_coulomb(1, kUnits, 0, 3, 3));
    CHECK(energy_coulomb(1, kUnits, 2, 1, 5) == energy_coulomb(1, kUnits, 1, 3, 3));
}

TEST_CASE("printed forms coincide with the generic quantization route") {
    const std::vector<PotentialSpec> potentials = {
        make_pseudoharmonic(1.0, 1.0),    make_pseudoharmonic(2.5, 0.8),
        make_anharmonic(0.9),             make_kratzer_fues(2.5, 0.8),
        make_modified_kratzer(1.0, 1.0),  make_coulomb(1.7),
    };
    for (const auto& potential : potentials) {
        for (int dim : {2, 3, 4, 6}) {
            for (int ell = 0; ell <= 3; ++ell) {
                const ReducedProblem problem = make_reduced(potential, ell, dim, kUnits);
                const double delta = delta_restriction(problem);
                for (int n = 0; n <= 5; ++n)
                    CHECK(rel(energy_analytic(potential, kUnits, n, ell, dim),
                              quantized_energy(problem, n, delta)) < 1e-12);
            }
        }
    }
}

TEST_CASE("levels increase strictly in n and in l") {
    const std::vector<PotentialSpec> potentials = {
        make_pseudoharmonic(1.0, 1.0), make_kratzer_fues(1.0, 1.0),
        make_modified_kratzer(2.0, 0.7), make_coulomb(1.0), make_anharmonic(1.0)};
    for (const auto& potential : potentials) {
        for (int dim : {3, 4}) {
            for (int ell = 0; ell <= 3; ++ell)
                for (int n = 0; n <= 4; ++n) {
                    CHECK(energy_analytic(potential, kUnits, n + 1, ell, dim) >
                          energy_analytic(potential, kUnits, n, ell, dim));
                    CHECK(energy_analytic(potential, kUnits, n, ell + 1, dim) >
                          energy_analytic(potential, kUnits, n, ell, dim));
                }
        }
    }
}

TEST_CASE("table generation covers the requested ranges in sorted order") {
    SpectrumRequest request;
    request.potential = make_coulomb(1.0);
    request.label = "coulomb";
    request.n_max = 1;
    request.ell_max = 0;
    request.dims = {3};
    const SpectrumTable table = build_table(request, false);
    REQUIRE(table.rows.size() == 2);
    CHECK(rel(table.rows[0].e_analytic, -0.5) < 1e-14);
    CHECK(rel(table.rows[1].e_analytic, -0.125) < 1e-14);
    for (const auto& row : table.rows) {
        CHECK(row.ok);
        CHECK(!row.e_oracle.has_value());
        CHECK(rel(row.e_analytic, row.e_generic) < 1e-12);
    }

    SpectrumRequest multi = request;
    multi.dims = {4, 3, 3};
    multi.ell_max = 1;
    const SpectrumTable sorted = build_table(multi, false);
    REQUIRE(sorted.rows.size() == 8); // dims deduplicated, sorted
    for (std::size_t i = 1; i < sorted.rows.size(); ++i) {
        const auto& a = sorted.rows[i - 1];
        const auto& b = sorted.rows[i];
        CHECK(std::tuple(a.dim, a.ell, a.n) < std::tuple(b.dim, b.ell, b.n));
    }
}

TEST_CASE("rows outside a formula's domain fail without aborting the table") {
    SpectrumRequest request;
    request.potential = make_harmonic_inverse_square(1.0, 0.5, kUnits);
    request.label = "oscillator";
    request.n_max = 0;
    request.ell_max = 0;
    request.dims = {3, 4};
    const SpectrumTable table = build_table(request, false);
    REQUIRE(table.rows.size() == 2);
    CHECK(table.rows[0].ok);
    CHECK_FALSE(table.rows[1].ok);
    CHECK(!table.rows[1].message.empty());
}

TEST_CASE("verified table carries oracle columns within tolerance") {
    SpectrumRequest request;
    request.potential = make_modified_kratzer(1.0, 1.0);
    request.label = "demo";
    request.n_max = 1;
    request.ell_max = 0;
    request.dims = {3};
    const SpectrumTable table = build_table(request, true);
    REQUIRE(table.rows.size() == 2);
    for (const auto& row : table.rows) {
        CHECK(row.ok);
        REQUIRE(row.e_oracle.has_value());
        REQUIRE(row.rel_err.has_value());
        REQUIRE(row.norm_check.has_value());
        REQUIRE(row.residual.has_value());
        CHECK(*row.rel_err <= 1e-6);
        CHECK(*row.norm_check <= 1e-8);
        CHECK(*row.residual <= 1e-8);
    }
}
