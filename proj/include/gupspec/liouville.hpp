#pragma once
#include <functional>
#include <memory>
#include <vector>

#include "gupspec/algebra.hpp"
#include "gupspec/specfun.hpp"

namespace gup {

// psi(p) = exp(chi(p)) phi(q(p)),  -phi'' + V phi = E phi
class TransformResult {
 public:
  cplx chi(double p) const;
  double q_of_p(double p) const;
  double p_of_q(double q) const;
  const Domain& q_domain() const;
  const Domain& p_domain() const;
  double p0() const;
  // dq/dp = f^{-1/2}
  double dq_dp(double p) const;
  cplx V_complex_at_p(double p) const;
  double V_at_p(double p) const;
  cplx V_complex(double q) const;
  double V(double q) const;
  const FGHCoefficients& fgh() const;

  struct Impl;

 private:
  friend TransformResult to_potential(const FGHCoefficients&, double);
  std::shared_ptr<const Impl> impl_;
};

TransformResult to_potential(const FGHCoefficients& fgh, double p0);

enum class AnsatzFamily { AssociatedLegendre, Jacobi };

// phi = v(q) F(w(q)),  F'' + Q F' + R F = 0,  w = sin(sqrt(c) q + phase)
struct FactorizationAnsatz {
  AnsatzFamily family = AnsatzFamily::AssociatedLegendre;
  double nu = 0, mu = 0;
  int n = 0;
  double a = 0, b = 0;
  double c = 1;
  double phase = 0;

  double Q(double w) const;
  double dQ(double w) const;
  double R(double w) const;
  double Q(const UnitPoint& w) const;
  double dQ(const UnitPoint& w) const;
  double R(const UnitPoint& w) const;
  double w(double q) const;
  UnitPoint w_point(double q) const;
  // k-th q-derivative of w, k = 1..3
  double dw(double q, int k) const;
  // evaluates F at w
  double F(double w) const;
};

// max |RHS(q) - (E - V(q))| over the grid
double master_residual(const FactorizationAnsatz& ansatz, const TransformResult& tr, cplx E,
                       const std::vector<double>& q_grid);

// v(q) = |w'|^{-1/2} exp(1/2 int_{w(0)}^{w(q)} Q dw)
std::function<double(double)> v_from_Qw(const FactorizationAnsatz& ansatz, const Domain& q_domain);

}  // namespace gup
