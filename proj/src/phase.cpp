#include "gupspec/phase.hpp"

#include <algorithm>
#include <cmath>

#include "gupspec/errors.hpp"

namespace gup {

namespace {

struct Quadratic {
  double A, B, C;
  double at(double x) const { return (A * x + B) * x + C; }
  double slope(double x) const { return 2 * A * x + B; }
};

Quadratic d_of_beta(double alpha, double tau, const DeformationParams& params) {
  const double u = params.hbar * params.omega, c0 = alpha + u;
  return {tau * tau, 2 * tau * tau * c0 - 4 * tau * u - 16 * alpha, (tau * c0 - 2 * u) * (tau * c0 - 2 * u)};
}

double polish(const Quadratic& q, double x) {
  for (int it = 0; it < 3; ++it) {
    double s = q.slope(x);
    if (s == 0) break;
    double nx = x - q.at(x) / s;
    if (!std::isfinite(nx)) break;
    x = nx;
  }
  return x;
}

}  // namespace

double discriminant(double alpha, double beta, double tau, const DeformationParams& params) {
  const double u = params.hbar * params.omega, om = alpha + beta + u;
  return 4 * (u * u - 4 * alpha * beta) + tau * om * (tau * om - 4 * u);
}

std::vector<double> boundary_beta(double alpha, double tau, const DeformationParams& params) {
  if (tau < 0) throw ParameterError("tau must be non-negative");
  const double u = params.hbar * params.omega;
  Quadratic q = d_of_beta(alpha, tau, params);
  std::vector<double> roots;
  if (tau == 0) {
    if (alpha == 0) throw NoRoot("D = 4 (hbar omega)^2 for every beta");
    roots.push_back(u * u / (4 * alpha));
  } else {
    double disc = q.B * q.B - 4 * q.A * q.C;
    if (disc < 0) throw NoRoot("D > 0 for every beta");
    double s = -0.5 * (q.B + std::copysign(std::sqrt(disc), q.B));
    roots.push_back(polish(q, s / q.A));
    if (disc > 0) roots.push_back(s != 0 ? polish(q, q.C / s) : roots[0]);
    std::sort(roots.begin(), roots.end());
  }
  std::erase_if(roots, [&](double b) { return alpha + b + u <= 0; });
  if (roots.empty()) throw NoRoot("no boundary with Omega > 0");
  return roots;
}

bool pt_model_reality(double alpha, double beta, double tau) {
  return alpha > -tau / 4 && beta > -tau * tau / 4;
}

std::vector<PhaseCurve> scan(const PhaseQuery& query) {
  if (!(query.alpha_lo < query.alpha_hi) || !(query.alpha_step > 0))
    throw ParameterError("alpha range needs lo < hi and step > 0");
  query.params.validate();
  const int count = int(std::floor((query.alpha_hi - query.alpha_lo) / query.alpha_step + 1e-9)) + 1;
  std::vector<PhaseCurve> curves;
  for (double tau : query.taus) {
    if (tau < 0) throw ParameterError("tau must be non-negative");
    PhaseCurve curve;
    curve.tau = tau;
    for (int i = 0; i < count; ++i) {
      double alpha = query.alpha_lo + i * query.alpha_step;
      std::vector<double> roots;
      try {
        roots = boundary_beta(alpha, tau, query.params);
      } catch (const NoRoot&) {
        continue;
      }
      double beta = roots.front();
      curve.points.push_back({alpha, beta, std::abs(discriminant(alpha, beta, tau, query.params))});
    }
    bool up = true, down = true;
    for (size_t i = 1; i < curve.points.size(); ++i) {
      up = up && curve.points[i].beta >= curve.points[i - 1].beta;
      down = down && curve.points[i].beta <= curve.points[i - 1].beta;
    }
    curve.monotone = up || down;
    curves.push_back(std::move(curve));
  }
  return curves;
}

}  // namespace gup
