#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qst/field_commutator.hpp"

namespace qst::cli {

inline constexpr const char* kToolName = "qst-toolkit";

enum ExitCode : int {
    kSuccess = 0,
    kUnknownSubcommand = 1,
    kValidationFailure = 2,
    kConvergenceFailure = 3,
};

struct ExperimentConfig {
    int truncation_dim = 32;
    double tolerance = 1e-8;
    std::uint64_t seed = 1;
    QuadratureSpec quadrature;
    std::string output_path;
    // Planck units throughout.
    static constexpr double planck_length = 1.0;

    void validate() const;
};

const std::vector<std::string>& subcommands();

// "# qst-toolkit v<version> seed=<seed> dim=<N>"
std::string header_line(const ExperimentConfig& config);

// args excludes the program name: {"spectrum", "--dim", "32", ...}. CSV goes to
// --out (resolved against QST_OUT_DIR when relative), to QST_OUT_DIR/<sub>.csv,
// or to `out`. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qst::cli
