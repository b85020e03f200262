#pragma once

// `excmono` command dispatch. Every command prints a run manifest
// {command, parameters, version, result, checks, passed}; exit code 0 iff all
// checks pass, 1 on a failed check, 2 on usage or configuration errors.

#include <ostream>

namespace excmono {

inline constexpr const char* kVersion = "0.1.0";

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace excmono
