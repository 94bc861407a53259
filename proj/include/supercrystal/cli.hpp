// Command-line front end: graph export, decompositions, verification suites
// and the symbolic relation checks.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "supercrystal/roots.hpp"

namespace supercrystal {

inline constexpr int kExitPass = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Parses "n0,n1,...,nN" as n0 omega_0 - sum n_i omega_i.
Weight parse_lowest_form(const std::string& text);

/// Runs one verification suite: axioms, koga, zero_arrows, omega0, spin_spin or examples.
/// The report has "suite", "status" ("pass"|"fail") and "checks".
/// Throws std::invalid_argument for an unknown suite.
nlohmann::json run_suite(const std::string& suite, const AlgebraType& type, int cap);

/// Entry point; `args` excludes the program name. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace supercrystal
