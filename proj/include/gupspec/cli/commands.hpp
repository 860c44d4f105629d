#pragma once
#include "gupspec/cli/output.hpp"

namespace gup::cli {

enum ExitCode { kOk = 0, kUsage = 1, kVerificationFailure = 2, kNumericalFailure = 3 };

// Each command fills `out` and returns its exit code.
int cmd_spectrum(const RunConfig& cfg, Table& out);
int cmd_wavefunction(const RunConfig& cfg, Table& out);
int cmd_metric(const RunConfig& cfg, Table& out);
int cmd_expectation(const RunConfig& cfg, Table& out);
int cmd_phase(const RunConfig& cfg, Table& out);
int cmd_verify(const RunConfig& cfg, Table& out);

// Parses argv, layers config, runs the command and writes its output.
int run(int argc, char** argv);

}  // namespace gup::cli
