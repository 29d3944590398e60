#include "radsolve/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "radsolve/errors.hpp"

namespace radsolve {

namespace {

using nlohmann::json;

const std::set<std::string> kKnownKeys = {"name", "De", "re", "mu", "hbar", "potential"};
const std::set<std::string> kKnownPotentials = {"pseudoharmonic", "kratzer", "modified-kratzer"};

double require_number(const json& entry, const std::string& key, const std::string& where) {
    if (!entry.contains(key))
        throw ConfigError(where + ": missing field '" + key + "'");
    if (!entry[key].is_number())
        throw ConfigError(where + ": field '" + key + "' must be a number");
    return entry[key].get<double>();
}

MoleculeConfig parse_entry(const json& entry, const std::string& where) {
    if (!entry.is_object()) throw ConfigError(where + ": molecule entry must be an object");
    for (const auto& [key, value] : entry.items()) {
        (void)value;
        if (!kKnownKeys.count(key))
            throw ConfigError(where + ": unknown key '" + key + "'");
    }
    MoleculeConfig config;
    if (!entry.contains("name")) throw ConfigError(where + ": missing field 'name'");
    if (!entry["name"].is_string()) throw ConfigError(where + ": field 'name' must be a string");
    config.name = entry["name"].get<std::string>();
    config.De = require_number(entry, "De", where);
    config.re = require_number(entry, "re", where);
    config.mu = require_number(entry, "mu", where);
    config.hbar = entry.contains("hbar") ? require_number(entry, "hbar", where) : 1.0;
    if (!entry.contains("potential")) throw ConfigError(where + ": missing field 'potential'");
    if (!entry["potential"].is_string())
        throw ConfigError(where + ": field 'potential' must be a string");
    config.potential = entry["potential"].get<std::string>();

    try {
        config.validate();
    } catch (const std::exception& err) {
        throw ConfigError(where + ": " + err.what());
    }
    return config;
}

} // namespace

void MoleculeConfig::validate() const {
    if (name.empty()) throw std::invalid_argument("field 'name' must be non-empty");
    if (!(De > 0.0)) throw std::invalid_argument("field 'De' must be > 0");
    if (!(re > 0.0)) throw std::invalid_argument("field 're' must be > 0");
    if (!(mu > 0.0)) throw std::invalid_argument("field 'mu' must be > 0");
    if (!(hbar > 0.0)) throw std::invalid_argument("field 'hbar' must be > 0");
    if (!kKnownPotentials.count(potential))
        throw std::invalid_argument("unsupported potential '" + potential +
                                    "' (expected pseudoharmonic, kratzer or modified-kratzer)");
}

std::vector<MoleculeConfig> parse_config_text(const std::string& text, const std::string& where) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ConfigError(where + ": " + err.what());
    }
    std::vector<MoleculeConfig> configs;
    if (doc.is_object()) {
        configs.push_back(parse_entry(doc, where));
    } else if (doc.is_array()) {
        int index = 0;
        for (const auto& entry : doc) {
            std::ostringstream label;
            label << where << "[" << index++ << "]";
            configs.push_back(parse_entry(entry, label.str()));
        }
    } else {
        throw ConfigError(where + ": expected a molecule object or an array of them");
    }
    if (configs.empty()) throw ConfigError(where + ": no molecules defined");
    return configs;
}

std::vector<MoleculeConfig> parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open config file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), path);
}

std::vector<MoleculeConfig> demo_molecules() {
    std::vector<MoleculeConfig> demos(3);
    demos[0].name = "demo-pseudoharmonic";
    demos[0].potential = "pseudoharmonic";
    demos[1].name = "demo-kratzer";
    demos[1].potential = "kratzer";
    demos[2].name = "demo-modified-kratzer";
    demos[2].potential = "modified-kratzer";
    return demos;
}

PotentialSpec potential_from_config(const MoleculeConfig& config) {
    config.validate();
    if (config.potential == "pseudoharmonic") return make_pseudoharmonic(config.De, config.re);
    if (config.potential == "kratzer") return make_kratzer_fues(config.De, config.re);
    return make_modified_kratzer(config.De, config.re);
}

PhysicalConstants constants_from_config(const MoleculeConfig& config) {
    return PhysicalConstants{config.hbar, config.mu};
}

} // namespace radsolve
