#include "radsolve/table_io.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace radsolve {

std::string format_number(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

std::string to_csv(const SpectrumTable& table) {
    std::ostringstream out;
    out << "molecule,D,n,l,E_analytic,E_generic,E_oracle,rel_err,norm_check,residual\n";
    for (const auto& row : table.rows) {
        out << row.molecule << ',' << row.dim << ',' << row.n << ',' << row.ell << ','
            << format_number(row.e_analytic) << ',' << format_number(row.e_generic) << ',';
        if (row.e_oracle) out << format_number(*row.e_oracle);
        out << ',';
        if (row.rel_err) out << format_number(*row.rel_err);
        out << ',';
        if (row.norm_check) out << format_number(*row.norm_check);
        out << ',';
        if (row.residual) out << format_number(*row.residual);
        out << '\n';
    }
    return out.str();
}

std::string to_json(const SpectrumTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json entry;
        entry["molecule"] = row.molecule;
        entry["D"] = row.dim;
        entry["n"] = row.n;
        entry["l"] = row.ell;
        entry["E_analytic"] = row.e_analytic;
        entry["E_generic"] = row.e_generic;
        if (row.e_oracle) entry["E_oracle"] = *row.e_oracle;
        if (row.rel_err) entry["rel_err"] = *row.rel_err;
        if (row.norm_check) entry["norm_check"] = *row.norm_check;
        if (row.residual) entry["residual"] = *row.residual;
        entry["ok"] = row.ok;
        if (!row.ok) entry["message"] = row.message;
        rows.push_back(std::move(entry));
    }
    nlohmann::json doc;
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

} // namespace radsolve
