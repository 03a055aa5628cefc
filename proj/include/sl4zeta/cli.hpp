// cli.hpp — batch front-end: generate spectra, evaluate zeta grids, produce
// counting tables and fit reports, run the conformance suite.
#pragma once

#include <string>
#include <vector>

namespace sl4 {

// Exit code 0 on success, 1 on validation failure, 2 on verification failure.
int cli_run(const std::vector<std::string>& args);

}  // namespace sl4
