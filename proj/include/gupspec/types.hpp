#pragma once
#include <complex>
#include <limits>
#include <string>
#include <variant>

namespace gup {

using cplx = std::complex<double>;
inline constexpr double inf = std::numeric_limits<double>::infinity();

struct DeformationParams {
  double hbar = 1.0;
  double mass = 1.0;
  double omega = 1.0;
  double tau = 0.0;

  double tau_check() const { return tau / (mass * omega * hbar); }
  // m*omega*hbar, the momentum-squared unit
  double kappa() const { return mass * omega * hbar; }
  void validate() const;
};

enum class RepTag { Pi1, Pi2, Pi3, Pi4, Pi4Prime };

std::string to_string(RepTag r);
RepTag parse_rep(const std::string& s);

// Open interval. For imaginary segments the bounds refer to s with p = i*s.
struct Domain {
  double lo = -inf;
  double hi = inf;
  bool imaginary = false;

  bool lo_finite() const { return lo > -inf; }
  bool hi_finite() const { return hi < inf; }
  bool contains(double x) const { return x > lo && x < hi; }
};

struct Representation {
  RepTag tag = RepTag::Pi1;
  Domain p_domain;
};

Representation make_representation(RepTag tag, const DeformationParams& params);

struct HarmonicOscillator {};
struct Swanson {
  double alpha = 0.0;
  double beta = 0.0;
};
struct PoschlTeller {
  double alpha = 0.0;
  double beta = 0.0;
};

using ModelSpec = std::variant<HarmonicOscillator, Swanson, PoschlTeller>;

enum class ModelKind { HO, Swanson, PT };
ModelKind kind_of(const ModelSpec& m);
std::string model_name(const ModelSpec& m);

// alpha + beta + hbar*omega for Swanson, hbar*omega for the oscillator
double swanson_omega(const ModelSpec& m, const DeformationParams& p);

// Throws IntrinsicNoncommutativity for a Poschl-Teller model at tau = 0.
void check_model(const ModelSpec& m, const DeformationParams& p);

}  // namespace gup
