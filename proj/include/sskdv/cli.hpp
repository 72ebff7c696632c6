#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sskdv
{

// Process exit codes of the command-line front end.
enum exit_code : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_config = 2,
    exit_pole = 3,
    exit_io = 4,
    exit_internal = 5,
};

// Relative output paths are resolved against this directory when it is set.
inline constexpr const char *out_dir_env = "SSKDV_OUT_DIR";

// Runs one invocation; args excludes the program name. Failures are reported as a single line
// "error[<kind>]: <message>" on err.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace sskdv
