#ifndef CKN_CLI_HPP
#define CKN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

// Batch front end. Commands: check, tiesets, table1, reliability, sweep.
// Every path validates its inputs fully before computing, and computes
// fully before writing, so a failed invocation never leaves a partial
// output file.

namespace ckn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitComputation = 2;
inline constexpr int kExitIo = 3;

// args excludes the program name. Returns one of the kExit* codes.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// "start:end:step" with inclusive endpoints (snapped within 1e-12);
// an empty spec yields an empty grid.
std::vector<double> parse_r_grid(const std::string& spec);

}  // namespace ckn::cli

#endif  // CKN_CLI_HPP
