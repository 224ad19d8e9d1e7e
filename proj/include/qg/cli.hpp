#pragma once

#include <cstdint>
#include <string>

namespace qg {

// Full command-line entry point (subcommands spectrum / mcmc /
// potential-table / classes / verify). Returns the process exit code.
// When --seed is absent the QG_SEED environment variable is used.
int cli_main(int argc, const char* const* argv);

}  // namespace qg
