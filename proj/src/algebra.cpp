#include "gupspec/algebra.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>

#include "gupspec/errors.hpp"

namespace gup {

namespace {

const cplx I(0, 1);

bool ends_at(double xi, double d, double end) {
  return std::isfinite(d) && std::abs(xi + d - end) <= 1e-12 * std::abs(end);
}

}  // namespace

double cos_anchor(double t, const NativePoint& pt) {
  const double e = M_PI / (2 * t);
  if (pt.xi > 0.5 * e && ends_at(pt.xi, pt.d_hi, e)) return std::sin(t * pt.d_hi);
  if (pt.xi < -0.5 * e && ends_at(pt.xi, -pt.d_lo, -e)) return std::sin(t * pt.d_lo);
  return std::cos(t * pt.xi);
}

double v_anchor(double t, const NativePoint& pt) {
  const double txi = t * pt.xi, e = 1 / t;
  if (txi > 0.5 && ends_at(pt.xi, pt.d_hi, e)) return t * pt.d_hi * (1 + txi);
  if (txi < -0.5 && ends_at(pt.xi, -pt.d_lo, -e)) return t * pt.d_lo * (1 - txi);
  return (1 - txi) * (1 + txi);
}

OperatorJets operator_jets(RepTag rep, const DeformationParams& params, const NativePoint& pt, int order,
                           Chart chart) {
  const double tc = params.tau_check(), t = std::sqrt(tc);
  Jet x = Jet::variable(pt.xi, order + 1);
  OperatorJets o;
  switch (rep) {
    case RepTag::Pi1:
      o.A = 1.0 + tc * x * x;
      o.B = Jet(0.0, order + 1);
      o.M = x;
      break;
    case RepTag::Pi2:
      o.A = 1.0 + tc * x * x;
      o.B = tc * x;
      o.M = x;
      break;
    case RepTag::Pi3:
      o.A = Jet(1.0, order + 1);
      o.B = Jet(0.0, order + 1);
      if (tc == 0) {
        o.M = x;
      } else {
        Jet s, c;
        sincos(t * x, std::sin(t * pt.xi), cos_anchor(t, pt), s, c);
        o.M = s / c / t;
      }
      break;
    case RepTag::Pi4:
      if (chart == Chart::Momentum) {
        Jet s = sqrt(1.0 + tc * x * x);
        o.A = I * s;
        o.B = I * s.derivative();
        o.M = -I * x / s;
      } else {
        Jet v = (1.0 - tc * x * x).with_value(v_anchor(t, pt));
        Jet r = sqrt(v);
        o.A = r;
        o.B = r.derivative();
        o.M = x / r;
      }
      break;
    case RepTag::Pi4Prime: {
      Jet s = sqrt(1.0 + tc * x * x);
      o.A = s;
      o.B = s.derivative();
      o.M = x / s;
      break;
    }
  }
  o.A = o.A.truncated(order);
  o.B = o.B.truncated(order);
  o.M = o.M.truncated(order);
  return o;
}

HamiltonianTerms hamiltonian_terms(const ModelSpec& model, const DeformationParams& params) {
  check_model(model, params);
  const double hb = params.hbar, m = params.mass, w = params.omega, tau = params.tau;
  HamiltonianTerms h;
  h.x2 = m * w * w / 2;
  h.p2 = 1 / (2 * m);
  if (auto s = std::get_if<Swanson>(&model)) {
    double om = s->alpha + s->beta + hb * w;
    h.p2 = (hb * w * (1 - tau) - s->alpha - s->beta) / (2 * m * hb * w);
    h.x2 = om * m * w / (2 * hb);
    h.sym = I * (s->alpha - s->beta) / (2 * hb);
  } else if (auto s = std::get_if<PoschlTeller>(&model)) {
    double tc = params.tau_check();
    h.p2 = s->beta / (2 * m);
    h.pinv2 = hb * w * s->alpha / (2 * tc);
    h.c0 = hb * w * s->alpha / 2 + s->beta / (2 * m * tc);
  }
  return h;
}

Domain model_domain(const ModelSpec& model, RepTag rep, const DeformationParams& params) {
  Domain d = make_representation(rep, params).p_domain;
  d.imaginary = false;
  if (kind_of(model) == ModelKind::PT) d.lo = 0;
  return d;
}

namespace {

FGHValues fgh_at(const HamiltonianTerms& H, RepTag rep, const DeformationParams& params, const NativePoint& pt,
                 bool full) {
  const double hb = params.hbar;
  FGHValues r;
  if (!full) {
    OperatorJets o = operator_jets(rep, params, pt, 0);
    r.f = hb * hb * H.x2 * o.A.value() * o.A.value();
    return r;
  }
  OperatorJets o = operator_jets(rep, params, pt, 3);
  Jet A = o.A, B = o.B, M = o.M;
  Jet dA = A.derivative(), dB = B.derivative(), dM = M.derivative();
  Jet f = hb * hb * H.x2 * A * A;
  Jet g = -hb * hb * H.x2 * (A * dA + 2.0 * A * B) + 2.0 * I * hb * H.sym * A * M;
  Jet h = -hb * hb * H.x2 * (A * dB + B * B) + I * hb * H.sym * (A * dM + 2.0 * B * M) + H.p2 * M * M + H.c0;
  if (H.pinv2 != 0.0) h += H.pinv2 / (M * M);
  r.f = f.value();
  r.df = f.deriv(1);
  r.ddf = f.deriv(2);
  r.g = g.value();
  r.dg = g.deriv(1);
  r.h = h.value();
  return r;
}

}  // namespace

FGHCoefficients derived_coefficients(const ModelSpec& model, RepTag rep, const DeformationParams& params) {
  HamiltonianTerms H = hamiltonian_terms(model, params);
  FGHCoefficients c;
  c.rep = rep;
  c.p_domain = model_domain(model, rep, params);
  double tc = params.tau_check();
  c.scale = std::sqrt(params.kappa());
  if (tc > 0) c.scale = std::min(c.scale, 1 / std::sqrt(tc));
  Domain dom = c.p_domain;
  c.values = [=](double xi) { return fgh_at(H, rep, params, NativePoint::at(xi, dom), true); };
  c.f = [=](double xi) { return fgh_at(H, rep, params, NativePoint::at(xi, dom), false).f; };
  c.f_at = [=](const NativePoint& pt) { return fgh_at(H, rep, params, pt, false).f; };
  c.values_at = [=](const NativePoint& pt) { return fgh_at(H, rep, params, pt, true); };
  auto vals = c.values;
  c.df = [vals](double xi) { return vals(xi).df; };
  c.ddf = [vals](double xi) { return vals(xi).ddf; };
  c.g = [vals](double xi) { return vals(xi).g; };
  c.dg = [vals](double xi) { return vals(xi).dg; };
  c.h = [vals](double xi) { return vals(xi).h; };
  return c;
}

FGHCoefficients coefficients(const ModelSpec& model, RepTag rep, const DeformationParams& params) {
  if (rep == RepTag::Pi2) throw UnsupportedPair("no coefficient table for Pi2; use the similarity map from Pi1");
  return derived_coefficients(model, rep, params);
}

Samples spectral_derivative(const Samples& f, double h) {
  static std::mutex planner;
  const int n = int(f.size());
  fftw_complex* buf = fftw_alloc_complex(n);
  fftw_plan fwd, bwd;
  {
    std::lock_guard<std::mutex> lock(planner);
    fwd = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  for (int i = 0; i < n; ++i) {
    buf[i][0] = f[i].real();
    buf[i][1] = f[i].imag();
  }
  fftw_execute(fwd);
  const double L = n * h;
  for (int k = 0; k < n; ++k) {
    int kk = k <= n / 2 ? k : k - n;
    if (n % 2 == 0 && k == n / 2) kk = 0;
    double kw = 2 * M_PI * kk / L;
    double re = buf[k][0], im = buf[k][1];
    buf[k][0] = -kw * im / n;
    buf[k][1] = kw * re / n;
  }
  fftw_execute(bwd);
  Samples d(n);
  for (int i = 0; i < n; ++i) d[i] = {buf[i][0], buf[i][1]};
  {
    std::lock_guard<std::mutex> lock(planner);
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
  }
  fftw_free(buf);
  return d;
}

Samples fd8_derivative(const Samples& f, double h) {
  static const double c[4] = {4.0 / 5, -1.0 / 5, 4.0 / 105, -1.0 / 280};
  const int n = int(f.size());
  auto at = [&](int i) { return (i < 0 || i >= n) ? cplx(0) : f[i]; };
  Samples d(n);
  for (int i = 0; i < n; ++i) {
    cplx s = 0;
    for (int k = 1; k <= 4; ++k) s += c[k - 1] * (at(i + k) - at(i - k));
    d[i] = s / h;
  }
  return d;
}

namespace {

void check_grid(RepTag rep, const DeformationParams& params, const Samples& psi, const Grid& grid) {
  if (grid.n <= 0 || int(psi.size()) != grid.n) throw ParameterError("sample count does not match grid");
  Domain d = make_representation(rep, params).p_domain;
  if (d.imaginary) return;
  if (grid.lo < d.lo || grid.hi > d.hi) throw DomainMismatch("grid leaves the momentum domain of " + to_string(rep));
}

bool finite_domain(RepTag rep, const DeformationParams& params) {
  Domain d = make_representation(rep, params).p_domain;
  return !d.imaginary && d.lo_finite() && d.hi_finite();
}

Samples differentiate(RepTag rep, const DeformationParams& params, const Samples& psi, const Grid& grid) {
  return finite_domain(rep, params) ? fd8_derivative(psi, grid.step()) : spectral_derivative(psi, grid.step());
}

}  // namespace

Samples apply_X(RepTag rep, const DeformationParams& params, const Samples& psi, const Grid& grid) {
  check_grid(rep, params, psi, grid);
  Domain d = make_representation(rep, params).p_domain;
  d.imaginary = false;
  Samples dpsi = differentiate(rep, params, psi, grid);
  Samples out(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    OperatorJets o = operator_jets(rep, params, NativePoint::at(grid.at(i), d), 0, Chart::Momentum);
    out[i] = I * params.hbar * (o.A.value() * dpsi[i] + o.B.value() * psi[i]);
  }
  return out;
}

Samples apply_P(RepTag rep, const DeformationParams& params, const Samples& psi, const Grid& grid) {
  check_grid(rep, params, psi, grid);
  Domain d = make_representation(rep, params).p_domain;
  d.imaginary = false;
  Samples out(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    OperatorJets o = operator_jets(rep, params, NativePoint::at(grid.at(i), d), 0, Chart::Momentum);
    out[i] = o.M.value() * psi[i];
  }
  return out;
}

Samples apply_Pinv2(RepTag rep, const DeformationParams& params, const Samples& psi, const Grid& grid) {
  Samples p = apply_P(rep, params, Samples(psi.size(), 1.0), grid);
  Samples out(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) out[i] = psi[i] / (p[i] * p[i]);
  return out;
}

double commutator_residual(RepTag rep, const DeformationParams& params, const Samples& psi, const Grid& grid,
                           CommutatorReference ref) {
  Samples xp = apply_X(rep, params, apply_P(rep, params, psi, grid), grid);
  Samples px = apply_P(rep, params, apply_X(rep, params, psi, grid), grid);
  Samples pp = apply_P(rep, params, apply_P(rep, params, psi, grid), grid);
  double sign = 1;
  if (ref == CommutatorReference::Minus || (ref == CommutatorReference::Natural && rep == RepTag::Pi4Prime))
    sign = -1;
  const double tc = params.tau_check();
  double num = 0, den = 0;
  for (int i = 0; i < grid.n; ++i) {
    cplx r = xp[i] - px[i] - I * params.hbar * (psi[i] + sign * tc * pp[i]);
    num += std::norm(r);
    den += std::norm(psi[i]);
  }
  return std::sqrt(num / den);
}

Samples pt_conjugate(const Samples& psi) {
  Samples out(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) out[i] = std::conj(psi[i]);
  return out;
}

std::vector<TestFunction> test_function_suite(RepTag rep, const DeformationParams& params, int n) {
  const double tc = params.tau_check(), t = std::sqrt(tc);
  bool finite = finite_domain(rep, params);
  Grid g;
  g.n = n;
  if (finite) {
    Domain d = make_representation(rep, params).p_domain;
    g.lo = d.lo;
    g.hi = d.hi;
  } else {
    g.lo = -14;
    g.hi = 14;
  }
  struct Spec {
    const char* name;
    double sigma;
    int odd;
  };
  const Spec specs[] = {{"gauss-0.5", 0.5, 0}, {"gauss-1", 1, 0}, {"gauss-2", 2, 0}, {"odd-gauss-1", 1, 1},
                        {"odd-gauss-2", 2, 1}};
  std::vector<TestFunction> out;
  for (const Spec& s : specs) {
    TestFunction tf{s.name, g, Samples(n)};
    for (int i = 0; i < n; ++i) {
      double p = g.at(i);
      double v = std::exp(-s.sigma * p * p) * (s.odd ? p : 1.0);
      if (finite) v *= std::pow(std::cos(t * p), 10);
      tf.samples[i] = v;
    }
    if (finite) tf.name += "-windowed";
    out.push_back(std::move(tf));
  }
  return out;
}

}  // namespace gup
