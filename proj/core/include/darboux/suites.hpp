#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "darboux/oracle.hpp"

namespace darboux::suites {

enum class Suite { Specfun, Riccati, Zeromode, Intertwine, Norm, All };

/// "specfun", "riccati", "zeromode", "intertwine", "norm" or "all";
/// nullopt for anything else.
std::optional<Suite> parse_suite(std::string_view name);
const char* to_string(Suite suite) noexcept;

/// Runs a verification suite. tol_override, when given, replaces the
/// tolerance of every check.
oracle::VerificationReport run_suite(Suite suite, std::optional<double> tol_override = {});

}  // namespace darboux::suites
