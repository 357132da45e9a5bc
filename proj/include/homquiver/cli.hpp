#pragma once

#include <string>
#include <vector>

#include "homquiver/report.hpp"

namespace homquiver {

// Executes one CLI invocation (without the program name). Never throws; the
// report carries the exit code: 0 success, 1 computation error or failed
// assertion, 2 usage error.
Report run_command(const std::vector<std::string>& args);

}  // namespace homquiver
