#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ajc::cli {

// Runs the ajcsim command line. args excludes the program name. Returns the
// process exit code; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// out.csv + ("xi", 0.5) -> out_xi=0.5.csv
std::string sweep_output_path(const std::string& base, const std::string& param,
                              double value);

}  // namespace ajc::cli
