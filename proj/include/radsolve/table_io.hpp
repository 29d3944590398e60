#pragma once

#include <string>

#include "radsolve/spectra.hpp"

namespace radsolve {

/// Fixed-precision number formatting for emitted tables: 12 significant
/// digits, so re-parsing and recomputing reproduces the printed value.
std::string format_number(double value);

/// CSV with the fixed column order
/// molecule,D,n,l,E_analytic,E_generic,E_oracle,rel_err,norm_check,residual.
/// Unavailable optional fields are left empty; row failures are carried by
/// the JSON format and the process exit code.
std::string to_csv(const SpectrumTable& table);

/// Structured-object document with the same fields, one object per row.
std::string to_json(const SpectrumTable& table);

} // namespace radsolve
