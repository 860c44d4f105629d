#pragma once
#include <string>
#include <vector>

#include "gupspec/cli/config.hpp"

namespace gup::cli {

// status: pass, fail, xfail (expected failure observed), skip
struct CheckRow {
  std::string suite;
  std::string item;
  double value = 0;
  double threshold = 0;
  std::string status;
  std::string note;
};

inline bool failed(const CheckRow& r) { return r.status == "fail"; }

// commutators | orthonormality | invariance | master-residual | all
std::vector<CheckRow> run_suite(const std::string& suite, const RunConfig& cfg);

std::vector<CheckRow> suite_commutators(const RunConfig& cfg);
std::vector<CheckRow> suite_orthonormality(const RunConfig& cfg);
std::vector<CheckRow> suite_invariance(const RunConfig& cfg);
std::vector<CheckRow> suite_master_residual(const RunConfig& cfg);

}  // namespace gup::cli
