#pragma once
#include <string>
#include <vector>

#include "gupspec/types.hpp"

namespace gup {

// D = 4(hw^2 - 4 alpha beta) + tau Omega (tau Omega - 4 hw), Omega = alpha + beta + hw
double discriminant(double alpha, double beta, double tau, const DeformationParams& params);

// Real roots of D(beta) = 0 with Omega > 0, ascending. Throws NoRoot if none.
std::vector<double> boundary_beta(double alpha, double tau, const DeformationParams& params);

// alpha > -tau/4 and beta > -tau^2/4
bool pt_model_reality(double alpha, double beta, double tau);

struct PhaseQuery {
  DeformationParams params;
  double alpha_lo = 0.5, alpha_hi = 16, alpha_step = 0.05;
  std::vector<double> taus;
};

struct PhasePoint {
  double alpha = 0;
  double beta = 0;
  double residual = 0;  // |D| at the point
};

struct PhaseCurve {
  double tau = 0;
  std::vector<PhasePoint> points;
  std::string region_above = "broken";
  std::string region_below = "unbroken";
  std::string branch = "lower";
  bool monotone = true;
};

std::vector<PhaseCurve> scan(const PhaseQuery& query);

}  // namespace gup
