#pragma once
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gupspec/closed_form.hpp"

namespace gup {

// -phi'' + V phi = E phi with Dirichlet conditions at both ends of q_domain.
// Infinite ends are replaced by a box sized from a WKB decay estimate.
// Finite ends where V ~ g/d^2 are detected when singular_endpoints is set.
struct EigenProblem {
  std::function<double(double)> V;
  Domain q_domain;
  // inverse-square wall strengths g at finite ends; estimated from V when
  // absent and singular_endpoints is set, otherwise the end is plain Dirichlet
  std::optional<double> wall_lo, wall_hi;
  int grid_size = 2048;
  bool singular_endpoints = true;
  double tolerance = 1e-4;  // accepted relative spread of the extrapolation
};

struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending, extrapolated
  std::vector<int> grid_sizes;
  bool extrapolated = false;
  std::vector<double> error_estimates;
  std::vector<double> observed_order;  // inf when the level is exact to roundoff
  std::vector<std::vector<double>> raw;  // per grid
  Domain box;                            // interval actually discretized
  std::string lo_end, hi_end;            // "weighted g=...", "dirichlet", "box"
};

SpectrumResult fd_eigenvalues(const EigenProblem& problem, int count);

struct SpectrumRow {
  int n = 0;
  cplx closed = 0;
  double oracle = 0;
  double error_estimate = 0;
  double rel_err = 0;
};

struct SpectrumReport {
  std::string model, rep;
  std::vector<SpectrumRow> rows;
  double max_rel_err = 0;
  SpectrumResult oracle;
};

// to_potential -> fd_eigenvalues, compared level by level with the closed form
SpectrumReport verify_spectrum(const ModelSpec& model, RepTag rep, const DeformationParams& params, int count,
                               int grid_size = 2048);

}  // namespace gup
