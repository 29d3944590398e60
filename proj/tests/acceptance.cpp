// Acceptance suite: runs every release criterion at its pinned tolerance and
// prints one pass/fail line per criterion. Exit status 0 iff all pass.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "radsolve/verify.hpp"

namespace {

struct Criterion {
    std::string title;
    bool passed = false;
    std::string detail;
};

int cli_exit_code(const std::string& args) {
    const std::string command = std::string(RADSOLVE_CLI) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Criterion from_check(const std::string& title, const radsolve::CheckResult& check) {
    return Criterion{title, check.passed, check.detail};
}

} // namespace

int main() {
    using namespace radsolve;
    std::vector<Criterion> criteria;

    try {
        criteria.push_back(from_check("generic-vs-printed consistency (rel 1e-12, < 1 s)",
                                      check_formula_consistency()));
        criteria.push_back(from_check(
            "oracle equivalence on the demo grid (1e-6 / 1e-5, < 60 s)", check_oracle_equivalence()));
        criteria.push_back(
            from_check("known exact anchors (1e-10 analytic, 1e-4 oracle)", check_exact_anchors()));
        criteria.push_back(from_check(
            "wavefunction validity (norm 1e-8, residual 1e-8, nodes, orthogonality 1e-6)",
            check_wavefunction_validity()));
        criteria.push_back(from_check(
            "structural identities (De shift, degeneracy 1e-12, determinant)",
            check_structural_identities()));
        criteria.push_back(from_check(
            "coefficient-convention regressions (2s ratio, well-depth mapping)",
            check_coefficient_conventions()));
    } catch (const std::exception& err) {
        criteria.push_back(Criterion{"criterion evaluation", false, err.what()});
    }

    {
        Criterion cli;
        cli.title = "CLI verify contract (exit 0 clean, exit 2 under fault injection)";
        const int clean = cli_exit_code("verify");
        const int faulted = cli_exit_code("verify --inject-fault");
        cli.passed = clean == 0 && faulted == 2;
        cli.detail = "verify -> " + std::to_string(clean) +
                     ", verify --inject-fault -> " + std::to_string(faulted);
        criteria.push_back(std::move(cli));
    }

    bool all_passed = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& criterion = criteria[i];
        std::cout << (criterion.passed ? "[PASS] " : "[FAIL] ") << "criterion " << i + 1 << ": "
                  << criterion.title << " (" << criterion.detail << ")\n";
        all_passed = all_passed && criterion.passed;
    }
    std::cout << (all_passed ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << "\n";
    return all_passed ? EXIT_SUCCESS : EXIT_FAILURE;
}
