#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "radsolve/ansatz.hpp"
#include "radsolve/config.hpp"
#include "radsolve/core.hpp"
#include "radsolve/errors.hpp"
#include "radsolve/oracle.hpp"
#include "radsolve/potential.hpp"
#include "radsolve/spectra.hpp"
#include "radsolve/table_io.hpp"
#include "radsolve/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

struct SpectrumArgs {
    std::string config_path;
    std::string molecule;
    int n_max = 0;
    int ell_max = 0;
    std::vector<int> dims = {3};
    bool verify = false;
    std::string format = "csv";
    std::optional<double> hbar_override;
};

struct SolveArgs {
    std::string potential = "pseudoharmonic";
    double De = 1.0, re = 1.0;
    double A = 1.0;
    double omega = 1.0, g = 0.0;
    double B = 1.0;
    double raw_a = 1.0, raw_b = 0.0, raw_c = 0.0;
    std::string raw_family = "pseudoharmonic";
    int n = 0, ell = 0, dim = 3;
    double mu = 1.0, hbar = 1.0;
    std::string wavefunction; // r_min:r_max:steps
    std::string format = "text";
};

radsolve::PotentialSpec potential_from_args(const SolveArgs& args,
                                            const radsolve::PhysicalConstants& constants) {
    using namespace radsolve;
    if (args.potential == "pseudoharmonic") return make_pseudoharmonic(args.De, args.re);
    if (args.potential == "kratzer") return make_kratzer_fues(args.De, args.re);
    if (args.potential == "modified-kratzer") return make_modified_kratzer(args.De, args.re);
    if (args.potential == "coulomb") return make_coulomb(args.A);
    if (args.potential == "harmonic")
        return make_harmonic_inverse_square(args.omega, args.g, constants);
    if (args.potential == "anharmonic") return make_anharmonic(args.B);
    if (args.potential == "raw") {
        const PotentialFamily family = args.raw_family == "mie" ? PotentialFamily::Mie
                                                                : PotentialFamily::Pseudoharmonic;
        return make_raw(family, args.raw_a, args.raw_b, args.raw_c);
    }
    throw std::invalid_argument("unsupported potential '" + args.potential + "'");
}

struct WavefunctionRange {
    double r_min = 0.0;
    double r_max = 0.0;
    int steps = 0;
};

WavefunctionRange parse_wavefunction_range(const std::string& text) {
    WavefunctionRange range;
    const auto first = text.find(':');
    const auto second = text.find(':', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw std::invalid_argument("--wavefunction expects r_min:r_max:steps");
    try {
        range.r_min = std::stod(text.substr(0, first));
        range.r_max = std::stod(text.substr(first + 1, second - first - 1));
        range.steps = std::stoi(text.substr(second + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("--wavefunction expects numeric r_min:r_max:steps");
    }
    if (!(range.r_min > 0.0) || !(range.r_max > range.r_min) || range.steps < 2)
        throw std::invalid_argument("--wavefunction requires 0 < r_min < r_max and steps >= 2");
    return range;
}

int run_spectrum(const SpectrumArgs& args) {
    using namespace radsolve;
    std::vector<MoleculeConfig> molecules =
        args.config_path.empty() ? demo_molecules() : parse_config(args.config_path);
    if (!args.molecule.empty()) {
        std::vector<MoleculeConfig> selected;
        for (const auto& m : molecules)
            if (m.name == args.molecule) selected.push_back(m);
        if (selected.empty())
            throw ConfigError("molecule '" + args.molecule + "' not found in config");
        molecules = std::move(selected);
    }

    SpectrumTable combined;
    for (const auto& molecule : molecules) {
        SpectrumRequest request;
        request.potential = potential_from_config(molecule);
        request.constants = constants_from_config(molecule);
        if (args.hbar_override) request.constants.hbar = *args.hbar_override;
        request.label = molecule.name;
        request.n_max = args.n_max;
        request.ell_max = args.ell_max;
        request.dims = args.dims;
        SpectrumTable table = build_table(request, args.verify);
        for (auto& row : table.rows) combined.rows.push_back(std::move(row));
    }

    std::cout << (args.format == "json" ? to_json(combined) : to_csv(combined));
    for (const auto& row : combined.rows)
        if (!row.ok) return kExitVerification;
    return kExitOk;
}

int run_solve(const SolveArgs& args) {
    using namespace radsolve;
    const PhysicalConstants constants{args.hbar, args.mu};
    const PotentialSpec potential = potential_from_args(args, constants);
    const QuantumState state{args.n, args.ell, args.dim};
    const ReducedProblem problem = make_reduced(potential, state.ell, state.dim, constants);
    const AnsatzSolution sol = solve_state(problem, state);

    std::vector<std::pair<double, double>> samples;
    if (!args.wavefunction.empty()) {
        const WavefunctionRange range = parse_wavefunction_range(args.wavefunction);
        for (int i = 0; i < range.steps; ++i) {
            const double r =
                range.r_min + (range.r_max - range.r_min) * i / (range.steps - 1.0);
            samples.emplace_back(r, evaluate_wavefunction(sol, r));
        }
    }

    if (args.format == "json") {
        nlohmann::json doc;
        doc["potential"] = potential.label();
        doc["family"] = sol.family == PotentialFamily::Pseudoharmonic ? "pseudoharmonic" : "mie";
        doc["n"] = state.p;
        doc["l"] = state.ell;
        doc["D"] = state.dim;
        doc["delta"] = sol.delta;
        doc["alpha"] = sol.alpha;
        doc["energy"] = sol.energy;
        doc["coefficients"] = sol.coeffs;
        doc["normalization"] =
            sol.norm_mode == NormMode::ClosedFormGamma ? "closed-form" : "quadrature";
        if (!samples.empty()) {
            nlohmann::json list = nlohmann::json::array();
            for (const auto& [r, psi] : samples) list.push_back({{"r", r}, {"psi", psi}});
            doc["wavefunction"] = std::move(list);
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "potential      " << potential.label() << "\n"
                  << "state          n=" << state.p << " l=" << state.ell << " D=" << state.dim
                  << "\n"
                  << "delta          " << format_number(sol.delta) << "\n"
                  << "alpha          " << format_number(sol.alpha) << "\n"
                  << "energy         " << format_number(sol.energy) << "\n";
        std::cout << "coefficients   ";
        for (std::size_t i = 0; i < sol.coeffs.size(); ++i)
            std::cout << (i ? " " : "") << format_number(sol.coeffs[i]);
        std::cout << "\n"
                  << "normalization  "
                  << (sol.norm_mode == NormMode::ClosedFormGamma ? "closed-form" : "quadrature")
                  << "\n";
        if (!samples.empty()) {
            std::cout << "r psi\n";
            for (const auto& [r, psi] : samples)
                std::cout << format_number(r) << " " << format_number(psi) << "\n";
        }
    }
    return kExitOk;
}

int run_verify(bool inject_fault) {
    radsolve::VerifyOptions options;
    if (inject_fault) options.fault = 1e-6;
    std::vector<radsolve::CheckResult> results = radsolve::run_verification(options);
    results.push_back(radsolve::check_coefficient_conventions());
    bool all_passed = true;
    for (const auto& check : results) {
        std::cout << (check.passed ? "[PASS] " : "[FAIL] ") << check.name << ": " << check.detail
                  << "\n";
        all_passed = all_passed && check.passed;
    }
    std::cout << (all_passed ? "verification passed" : "verification FAILED") << "\n";
    return all_passed ? kExitOk : kExitVerification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bound states of the D-dimensional radial Schrodinger equation for "
                 "pseudoharmonic- and Mie-type potentials"};
    app.require_subcommand(1);

    SpectrumArgs spectrum_args;
    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "Emit an energy table for molecules from a config file");
    spectrum->add_option("--config", spectrum_args.config_path,
                         "JSON config (object or array of molecules); omit for the "
                         "dimensionless demo set");
    spectrum->add_option("--molecule", spectrum_args.molecule, "Select one molecule by name");
    spectrum->add_option("--n-max", spectrum_args.n_max, "Highest radial quantum number")
        ->check(CLI::NonNegativeNumber);
    spectrum->add_option("--l-max", spectrum_args.ell_max, "Highest angular momentum")
        ->check(CLI::NonNegativeNumber);
    spectrum->add_option("--dims", spectrum_args.dims, "Spatial dimensions, comma separated")
        ->delimiter(',')
        ->check(CLI::Range(2, 64));
    spectrum->add_flag("--verify", spectrum_args.verify,
                       "Cross-check every level against the finite-difference solver");
    spectrum->add_option("--format", spectrum_args.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    double hbar_value = 1.0;
    CLI::Option* hbar_opt =
        spectrum->add_option("--hbar", hbar_value, "Override hbar for all molecules");

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "Solve a single bound state in closed form");
    solve->add_option("--potential", solve_args.potential, "Potential kind")
        ->required()
        ->check(CLI::IsMember({"pseudoharmonic", "kratzer", "modified-kratzer", "coulomb",
                               "harmonic", "anharmonic", "raw"}));
    solve->add_option("--De", solve_args.De, "Well depth");
    solve->add_option("--re", solve_args.re, "Equilibrium separation");
    solve->add_option("--A", solve_args.A, "Coulomb strength");
    solve->add_option("--omega", solve_args.omega, "Oscillator frequency");
    solve->add_option("--g", solve_args.g, "Inverse-square strength");
    solve->add_option("--B", solve_args.B, "Confinement strength");
    solve->add_option("--a", solve_args.raw_a, "Raw radial coefficient");
    solve->add_option("--b", solve_args.raw_b, "Raw 1/r^2 coefficient");
    solve->add_option("--c", solve_args.raw_c, "Raw constant offset");
    solve->add_option("--family", solve_args.raw_family, "Family for --potential raw")
        ->check(CLI::IsMember({"pseudoharmonic", "mie"}));
    solve->add_option("--n", solve_args.n, "Radial quantum number")->check(CLI::NonNegativeNumber);
    solve->add_option("--l", solve_args.ell, "Angular momentum")->check(CLI::NonNegativeNumber);
    solve->add_option("--dim", solve_args.dim, "Spatial dimensions")->check(CLI::Range(2, 64));
    solve->add_option("--mu", solve_args.mu, "Reduced mass");
    solve->add_option("--hbar", solve_args.hbar, "Planck constant");
    solve->add_option("--wavefunction", solve_args.wavefunction,
                      "Sample psi on r_min:r_max:steps");
    solve->add_option("--format", solve_args.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    bool inject_fault = false;
    CLI::App* verify = app.add_subcommand("verify", "Run the built-in verification suite");
    verify
        ->add_flag("--inject-fault", inject_fault,
                   "Testing hook: corrupt one stored reference constant")
        ->group(""); // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        return app.exit(err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (spectrum->parsed()) {
            if (*hbar_opt) spectrum_args.hbar_override = hbar_value;
            return run_spectrum(spectrum_args);
        }
        if (solve->parsed()) return run_solve(solve_args);
        if (verify->parsed()) return run_verify(inject_fault);
    } catch (const radsolve::ConfigError& err) {
        std::cerr << "config error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& err) {
        std::cerr << "usage error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitVerification;
    }
    return kExitUsage;
}
