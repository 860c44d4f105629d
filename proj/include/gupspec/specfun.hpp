#pragma once
#include <vector>

#include "gupspec/jet.hpp"
#include "gupspec/types.hpp"

namespace gup {

// Point of (-1, 1) with accurately known distances to both ends.
struct UnitPoint {
  double x = 0;
  double one_minus = 1;  // 1 - x
  double one_plus = 1;   // 1 + x

  static UnitPoint at(double x) { return {x, 1 - x, 1 + x}; }
  double one_minus_sq() const { return one_minus * one_plus; }
};

// Ferrers function P_nu^mu with nu = n - mu.
struct LegendreSpec {
  int n = 0;
  double mu = 0;
  double degree() const { return n - mu; }
};

struct JacobiSpec {
  int n = 0;
  double a = 0;
  double b = 0;
};

double log_gamma(double x);

double gegenbauer(int n, double l, double x);
cplx gegenbauer(int n, double l, cplx x);

double assoc_legendre(const LegendreSpec& s, double z);
cplx assoc_legendre(const LegendreSpec& s, cplx z);
double assoc_legendre_deriv(const LegendreSpec& s, double z);
// Taylor jet in z about the given point; mu <= 0 only
Jet assoc_legendre_jet(const LegendreSpec& s, const UnitPoint& z, int order);
// Normalization integral of the square over (-1, 1), closed form for mu <= 0
double legendre_norm_closed(const LegendreSpec& s);

// Ferrers function of arbitrary real order from the hypergeometric series.
// Slow near z = -1; intended as a reference value and for wrong-branch states.
double ferrers_hypergeometric(double nu, double mu, double z);

double jacobi(const JacobiSpec& s, double x);
double jacobi_deriv(const JacobiSpec& s, double x);
Jet jacobi_jet(const JacobiSpec& s, double x, int order);
double jacobi_norm(const JacobiSpec& s);

struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
};

Quadrature gauss_legendre_nodes(int count);
// weight (1-x)^a (1+x)^b on (-1, 1)
Quadrature gauss_jacobi_nodes(int count, double a, double b);

}  // namespace gup
