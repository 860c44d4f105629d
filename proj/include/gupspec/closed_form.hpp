#pragma once
#include <memory>
#include <vector>

#include "gupspec/algebra.hpp"
#include "gupspec/liouville.hpp"

namespace gup {

// mu_- is the normalizable choice; Plus exists for negative controls.
enum class Branch { Minus, Plus };

struct Classification {
  bool physical = true;
  bool unbounded_below = false;
  bool complex_spectrum = false;
};

Classification classify_physical(const ModelSpec& model, RepTag rep, const DeformationParams& params);

// Closed-form eigen-system of one (model, representation) pair.
//   psi_n(xi) = G(xi) F_n(w(xi)) / sqrt(N_n),   rho(xi) = C * shape(xi)
// with F_n = P_{n+lambda}^{-lambda} or P_n^{(a,b)} and xi the parametric
// coordinate (s with p = i s for Pi4).
class ClosedFormSolution {
 public:
  ModelSpec model;
  RepTag rep = RepTag::Pi1;
  DeformationParams params;
  Branch branch = Branch::Minus;
  AnsatzFamily family = AnsatzFamily::AssociatedLegendre;
  Domain domain;
  double p0 = 0;
  Classification classification;
  bool physical = true;

  cplx mu_minus = 0, mu_plus = 0;  // Legendre order
  cplx a_plus = 0, b_plus = 0;     // Jacobi parameters
  double kappa = 0;                // gauge shift (alpha - beta)/(2 tau Omega)
  double c = 0;                    // (dw/dq)^2 / (1 - w^2)
  double phase = 0;                // w = sin(sqrt(c) q + phase)
  double metric_constant = 1;      // C in rho = C * shape
  cplx discarded_constant = 1;     // conventional prefactor divided by C

  cplx energy(int n) const;
  // true when normalizable states exist (real parameters, tau > 0, not Pi4')
  bool has_states() const;
  double lambda() const;
  double a() const;
  double b() const;

  double norm(int n) const;
  cplx psi(int n, double xi) const;
  cplx psi(int n, const NativePoint& pt) const;
  // Taylor jet of psi_n in xi
  Jet psi_jet(int n, const NativePoint& pt, int order) const;
  double metric(double xi) const;
  double metric(const NativePoint& pt) const;
  // <psi_n | rho psi_m> by quadrature over the domain
  cplx inner_product(int n, int m) const;

  struct ChartPoint {
    Jet w, G;
    Jet Gn;            // G / G(xi), finite where G itself under- or overflows
    double gs = 0;     // |G| sqrt(shape)
    UnitPoint u;
    double dw = 0;     // dw/dxi
    double shape = 0;  // metric shape
  };
  ChartPoint chart(const NativePoint& pt, int order) const;
  // F_n and its jet in w
  double F(int n, const UnitPoint& u) const;
  Jet F_jet(int n, const UnitPoint& u, int order) const;

  FactorizationAnsatz ansatz(int n) const;

 private:
  friend ClosedFormSolution solve(const ModelSpec&, RepTag, const DeformationParams&, Branch);
  struct NormCache;
  std::shared_ptr<NormCache> norms_;
  double compute_norm(int n) const;
};

ClosedFormSolution solve(const ModelSpec& model, RepTag rep, const DeformationParams& params,
                         Branch branch = Branch::Minus);

// rho = varrho(w) exp(-2 Re chi) |v|^-2 |dw/dp| from the Liouville pieces
std::function<double(double)> metric_generic(const ModelSpec& model, RepTag rep, const DeformationParams& params);

// Normalized psi_n at parametric sample points.
Samples wavefunction_eval(const ClosedFormSolution& sol, int n, const std::vector<double>& xi);

}  // namespace gup
