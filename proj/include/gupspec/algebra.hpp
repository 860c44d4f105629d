#pragma once
#include <functional>
#include <string>
#include <vector>

#include "gupspec/jet.hpp"
#include "gupspec/quadrature.hpp"
#include "gupspec/types.hpp"

namespace gup {

// Momentum: the representation's own p (real line for every representation).
// Parametric: real coordinate of the solution domain; differs only for Pi4,
// where it is s with p = i s.
enum class Chart { Momentum, Parametric };

// X = i hbar (A d/dxi + B), P = M
struct OperatorJets {
  Jet A, B, M;
};

// cos(t xi) and 1 - (t xi)^2, using the distance to the domain end when the
// point sits near +-pi/(2t) or +-1/t respectively
double cos_anchor(double t, const NativePoint& pt);
double v_anchor(double t, const NativePoint& pt);

OperatorJets operator_jets(RepTag rep, const DeformationParams& params, const NativePoint& pt, int order,
                           Chart chart = Chart::Parametric);

// H = p2 P^2 + x2 X^2 + sym (XP + PX) + pinv2 P^-2 + c0
struct HamiltonianTerms {
  cplx p2 = 0, x2 = 0, sym = 0, pinv2 = 0, c0 = 0;
};

HamiltonianTerms hamiltonian_terms(const ModelSpec& model, const DeformationParams& params);

struct FGHValues {
  cplx f = 0, df = 0, ddf = 0, g = 0, dg = 0, h = 0;
};

// -f psi'' + g psi' + h psi = E psi in the parametric chart
struct FGHCoefficients {
  std::function<cplx(double)> f, df, ddf, g, dg, h;
  std::function<FGHValues(double)> values;
  // f with accurate endpoint distances
  std::function<cplx(const NativePoint&)> f_at;
  std::function<FGHValues(const NativePoint&)> values_at;
  Domain p_domain;
  double scale = 1;  // natural momentum scale of the chart
  RepTag rep = RepTag::Pi1;
};

// Coefficient table for Pi1, Pi3, Pi4 (in s, p = i s) and Pi4'.
FGHCoefficients coefficients(const ModelSpec& model, RepTag rep, const DeformationParams& params);
// Same construction, also accepting Pi2.
FGHCoefficients derived_coefficients(const ModelSpec& model, RepTag rep, const DeformationParams& params);

// Solution domain in the parametric chart (positive half for Poschl-Teller).
Domain model_domain(const ModelSpec& model, RepTag rep, const DeformationParams& params);

// Uniform cell-centred grid: p_i = lo + (i + 1/2)(hi - lo)/n
struct Grid {
  double lo = -1, hi = 1;
  int n = 0;
  double step() const { return (hi - lo) / n; }
  double at(int i) const { return lo + (i + 0.5) * step(); }
};

using Samples = std::vector<cplx>;

// Operator actions on the representation's real momentum line.
Samples apply_X(RepTag rep, const DeformationParams& params, const Samples& psi, const Grid& grid);
Samples apply_P(RepTag rep, const DeformationParams& params, const Samples& psi, const Grid& grid);
Samples apply_Pinv2(RepTag rep, const DeformationParams& params, const Samples& psi, const Grid& grid);

enum class CommutatorReference { Natural, Plus, Minus };

// ||[X,P]psi - i hbar (1 +- tc P^2) psi|| / ||psi||; Natural uses the minus
// sign for Pi4' and the plus sign otherwise.
double commutator_residual(RepTag rep, const DeformationParams& params, const Samples& psi, const Grid& grid,
                           CommutatorReference ref = CommutatorReference::Natural);

// Antilinear PT action on momentum-space samples: complex conjugation.
Samples pt_conjugate(const Samples& psi);

struct TestFunction {
  std::string name;
  Grid grid;
  Samples samples;
};

std::vector<TestFunction> test_function_suite(RepTag rep, const DeformationParams& params, int n = 2048);

Samples spectral_derivative(const Samples& f, double h);
Samples fd8_derivative(const Samples& f, double h);

}  // namespace gup
