#include "gupspec/types.hpp"

#include <cmath>

#include "gupspec/errors.hpp"

namespace gup {

void DeformationParams::validate() const {
  if (!std::isfinite(hbar) || !std::isfinite(mass) || !std::isfinite(omega) || !std::isfinite(tau))
    throw ParameterError("deformation parameters must be finite");
  if (hbar <= 0 || mass <= 0 || omega <= 0) throw ParameterError("hbar, mass and omega must be positive");
  if (tau < 0) throw ParameterError("tau must be non-negative");
}

std::string to_string(RepTag r) {
  switch (r) {
    case RepTag::Pi1: return "pi1";
    case RepTag::Pi2: return "pi2";
    case RepTag::Pi3: return "pi3";
    case RepTag::Pi4: return "pi4";
    case RepTag::Pi4Prime: return "pi4p";
  }
  return "?";
}

RepTag parse_rep(const std::string& s) {
  if (s == "pi1" || s == "1") return RepTag::Pi1;
  if (s == "pi2" || s == "2") return RepTag::Pi2;
  if (s == "pi3" || s == "3") return RepTag::Pi3;
  if (s == "pi4" || s == "4") return RepTag::Pi4;
  if (s == "pi4p" || s == "pi4prime" || s == "4p") return RepTag::Pi4Prime;
  throw ParameterError("unknown representation '" + s + "'");
}

Representation make_representation(RepTag tag, const DeformationParams& params) {
  params.validate();
  Representation r{tag, {}};
  double tc = params.tau_check();
  if (tag == RepTag::Pi3 && tc > 0) {
    double b = M_PI / (2 * std::sqrt(tc));
    r.p_domain = {-b, b, false};
  } else if (tag == RepTag::Pi4) {
    double b = tc > 0 ? 1 / std::sqrt(tc) : inf;
    r.p_domain = {-b, b, true};
  }
  return r;
}

ModelKind kind_of(const ModelSpec& m) {
  if (std::holds_alternative<HarmonicOscillator>(m)) return ModelKind::HO;
  if (std::holds_alternative<Swanson>(m)) return ModelKind::Swanson;
  return ModelKind::PT;
}

std::string model_name(const ModelSpec& m) {
  switch (kind_of(m)) {
    case ModelKind::HO: return "ho";
    case ModelKind::Swanson: return "swanson";
    case ModelKind::PT: return "pt";
  }
  return "?";
}

double swanson_omega(const ModelSpec& m, const DeformationParams& p) {
  double u = p.hbar * p.omega;
  if (auto s = std::get_if<Swanson>(&m)) return s->alpha + s->beta + u;
  return u;
}

void check_model(const ModelSpec& m, const DeformationParams& p) {
  p.validate();
  if (kind_of(m) == ModelKind::PT && p.tau == 0)
    throw IntrinsicNoncommutativity("the Poschl-Teller Hamiltonian has no tau = 0 limit");
  if (auto s = std::get_if<Swanson>(&m)) {
    if (!std::isfinite(s->alpha) || !std::isfinite(s->beta)) throw ParameterError("alpha, beta must be finite");
  }
  if (auto s = std::get_if<PoschlTeller>(&m)) {
    if (!std::isfinite(s->alpha) || !std::isfinite(s->beta)) throw ParameterError("alpha, beta must be finite");
  }
}

}  // namespace gup
