#pragma once

#include <string>
#include <vector>

#include "radsolve/core.hpp"
#include "radsolve/potential.hpp"

namespace radsolve {

/// One molecule entry from a config file. Parameter values always come from
/// the user; nothing molecular is built in beyond the dimensionless demo.
struct MoleculeConfig {
    std::string name;
    double De = 1.0;
    double re = 1.0;
    double mu = 1.0;
    double hbar = 1.0;
    std::string potential; // pseudoharmonic | kratzer | modified-kratzer

    void validate() const;
};

/// Parse a JSON config: a single molecule object or an array of them.
/// Required keys: name, De, re, mu, potential; optional: hbar.
/// Unknown keys and invalid values are rejected with the offending
/// molecule/field named (ConfigError).
std::vector<MoleculeConfig> parse_config(const std::string& path);

/// Same, from an in-memory document (exposed for tests).
std::vector<MoleculeConfig> parse_config_text(const std::string& text, const std::string& where);

/// The De=re=mu=hbar=1 demo set used when no config file is given.
std::vector<MoleculeConfig> demo_molecules();

PotentialSpec potential_from_config(const MoleculeConfig& config);
PhysicalConstants constants_from_config(const MoleculeConfig& config);

} // namespace radsolve
