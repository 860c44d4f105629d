#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gupspec/types.hpp"
#include "json.hpp"

namespace gup::cli {

enum class Format { Csv, Json };

struct Tolerances {
  double oracle = 1e-5;
  double commutator = 1e-7;
  double orthonormality = 1e-8;
  double invariance = 1e-6;
  double master = 1e-8;
  double energy = 1e-8;  // <H> against E_n
  double zero = 1e-10;   // <P> for parity-symmetric states
};

// "standard", "strict" (x0.1) or "loose" (x100)
Tolerances tolerance_profile(const std::string& name);

struct RunConfig {
  std::string command;
  std::string model = "ho";
  bool model_given = false;
  RepTag rep = RepTag::Pi1;
  DeformationParams params{1.0, 1.0, 1.0, 0.1};
  std::optional<double> alpha, beta;
  int nmax = 5;
  int grid = 2048;
  bool oracle = false;
  bool check = false;
  std::optional<Format> format;
  std::string out;
  std::string profile = "standard";
  Tolerances tol;

  int state = 0;
  int samples = 101;
  std::optional<double> p_lo, p_hi;
  std::vector<std::string> words{"P", "P^2", "X", "X^2", "H"};
  std::vector<double> taus{0, 0.5, 1};
  double alpha_lo = 0.5, alpha_hi = 16, alpha_step = 0.05;
  std::string suite = "all";
  bool claims = false;
  bool inject_wrong_branch = false;

  // swanson defaults to (0.1, 0.2), pt to (1, 0.5)
  ModelSpec model_spec() const;
  Format output_format(Format fallback = Format::Csv) const;
};

// Keys accepted by apply_setting, in the order they appear in JSON output.
const std::vector<std::string>& setting_keys();

// Sets one key; throws ParameterError for unknown keys or malformed values.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

// key=value lines, '#' starts a comment, blank lines ignored.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path);

// Checks cross-field invariants after all layers are applied.
void validate(const RunConfig& cfg);

nlohmann::ordered_json to_json(const RunConfig& cfg);

}  // namespace gup::cli
