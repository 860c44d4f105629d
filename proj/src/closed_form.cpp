#include "gupspec/closed_form.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "gupspec/errors.hpp"
#include "gupspec/phase.hpp"

namespace gup {

namespace {

const cplx I(0, 1);

double sq(double x) { return x * x; }

}  // namespace

Classification classify_physical(const ModelSpec& model, RepTag rep, const DeformationParams& params) {
  params.validate();
  check_model(model, params);
  const ModelKind kind = kind_of(model);
  Classification c;
  if (rep == RepTag::Pi4Prime) {
    if (kind != ModelKind::HO) throw UnsupportedPair("Pi4' is solved for the harmonic oscillator only");
    c.physical = false;
    c.unbounded_below = true;
    return c;
  }
  if (auto s = std::get_if<Swanson>(&model)) {
    c.complex_spectrum = discriminant(s->alpha, s->beta, params.tau, params) < 0;
    c.physical = !c.complex_spectrum && swanson_omega(model, params) > 0;
  } else if (auto s = std::get_if<PoschlTeller>(&model)) {
    c.complex_spectrum = !pt_model_reality(s->alpha, s->beta, params.tau);
    c.physical = !c.complex_spectrum;
  }
  return c;
}

namespace {

// conventional metric prefactors; 1 where there is none
cplx conventional_prefactor(ModelKind kind, RepTag rep, double t) {
  if (kind == ModelKind::PT) {
    switch (rep) {
      case RepTag::Pi1:
      case RepTag::Pi3: return -2 * t;
      case RepTag::Pi4: return 2.0 * I * t;
      default: return 1;
    }
  }
  switch (rep) {
    case RepTag::Pi1:
    case RepTag::Pi3: return t;
    case RepTag::Pi4: return -I * t;
    default: return 1;
  }
}

double reference_point(ModelKind kind, RepTag rep, double t) {
  if (kind != ModelKind::PT) return 0;
  switch (rep) {
    case RepTag::Pi3: return M_PI / (4 * t);
    case RepTag::Pi4: return 1 / (2 * t);
    default: return 1 / t;
  }
}

}  // namespace

ClosedFormSolution solve(const ModelSpec& model, RepTag rep, const DeformationParams& params, Branch branch) {
  ClosedFormSolution sol;
  sol.norms_ = std::make_shared<ClosedFormSolution::NormCache>();
  sol.classification = classify_physical(model, rep, params);
  sol.model = model;
  sol.rep = rep;
  sol.params = params;
  sol.branch = branch;
  sol.physical = sol.classification.physical;
  sol.domain = model_domain(model, rep, params);
  const ModelKind kind = kind_of(model);
  const double tau = params.tau, t = std::sqrt(params.tau_check()), hw = params.hbar * params.omega;
  sol.p0 = reference_point(kind, rep, t);

  switch (kind) {
    case ModelKind::HO:
      if (tau > 0) {
        double lam = std::sqrt(4 + tau * tau) / (2 * tau);
        sol.mu_minus = -lam;
        sol.mu_plus = lam;
      }
      sol.c = tau * hw / 2;
      break;
    case ModelKind::Swanson: {
      const auto& s = std::get<Swanson>(model);
      double om = swanson_omega(model, params);
      if (om <= 0) throw ParameterError("Swanson model requires Omega = alpha + beta + hbar omega > 0");
      if (tau > 0) {
        cplx root = std::sqrt(cplx(discriminant(s.alpha, s.beta, tau, params)));
        sol.mu_minus = -root / (2 * tau * om);
        sol.mu_plus = root / (2 * tau * om);
        sol.kappa = (s.alpha - s.beta) / (2 * tau * om);
      }
      sol.c = tau * om / 2;
      break;
    }
    case ModelKind::PT: {
      const auto& s = std::get<PoschlTeller>(model);
      sol.family = AnsatzFamily::Jacobi;
      sol.a_plus = 0.5 * std::sqrt(cplx(1 + 4 * s.alpha / tau));
      sol.b_plus = 0.5 * std::sqrt(cplx(1 + 4 * s.beta / (tau * tau)));
      sol.c = 2 * tau * hw;
      break;
    }
  }

  if (sol.has_states()) {
    auto cp = sol.chart(NativePoint::at(sol.p0, sol.domain), 0);
    double sign = cp.dw > 0 ? 1 : -1;
    sol.phase = std::atan2(cp.u.x, sign * std::sqrt(cp.u.one_minus_sq()));
    double rho0 = std::abs(cp.dw) / std::norm(cp.G.value());
    if (sol.family == AnsatzFamily::Jacobi)
      rho0 *= std::pow(cp.u.one_minus, sol.a()) * std::pow(cp.u.one_plus, sol.b());
    sol.metric_constant = rho0 / cp.shape;
  }
  sol.discarded_constant = conventional_prefactor(kind, rep, t) / sol.metric_constant;
  return sol;
}

cplx ClosedFormSolution::energy(int n) const {
  if (n < 0) throw ParameterError("level index must be non-negative");
  const double tau = params.tau, hw = params.hbar * params.omega, dn = n;
  switch (kind_of(model)) {
    case ModelKind::HO:
      if (rep == RepTag::Pi4Prime) {
        double nu = dn + lambda();
        return hw / (2 * tau) - tau * hw / 8 * sq(1 + 2 * nu);
      }
      return hw * (dn + 0.5) * std::sqrt(1 + tau * tau / 4) + tau * hw / 4 * (1 + 2 * dn + 2 * dn * dn);
    case ModelKind::Swanson: {
      const auto& s = std::get<Swanson>(model);
      double om = swanson_omega(model, params);
      cplx root = std::sqrt(cplx(discriminant(s.alpha, s.beta, tau, params)));
      return 0.25 * (tau * om * (1 + 2 * dn + 2 * dn * dn) + (2 * dn + 1) * root);
    }
    case ModelKind::PT: {
      cplx k = 1 + 2 * dn + a_plus + b_plus;
      return hw * tau / 2 * k * k;
    }
  }
  return 0;
}

bool ClosedFormSolution::has_states() const {
  if (params.tau <= 0 || rep == RepTag::Pi4Prime) return false;
  if (family == AnsatzFamily::AssociatedLegendre) return mu_minus.imag() == 0 && mu_minus.real() < 0;
  return a_plus.imag() == 0 && b_plus.imag() == 0;
}

double ClosedFormSolution::lambda() const { return -mu_minus.real(); }
double ClosedFormSolution::a() const { return branch == Branch::Minus ? a_plus.real() : -a_plus.real(); }
double ClosedFormSolution::b() const { return branch == Branch::Minus ? b_plus.real() : -b_plus.real(); }

ClosedFormSolution::ChartPoint ClosedFormSolution::chart(const NativePoint& pt, int order) const {
  const double tc = params.tau_check(), t = std::sqrt(tc), xi = pt.xi;
  const Jet x = Jet::variable(xi, order);
  ChartPoint cp;
  if (family == AnsatzFamily::AssociatedLegendre) {
    const double k = kappa;
    switch (rep) {
      case RepTag::Pi1:
      case RepTag::Pi2: {
        Jet u = 1.0 + tc * x * x;
        double r0 = std::hypot(1.0, t * xi), u0 = r0 * r0, w0 = t * xi / r0;
        double far = 1 / (r0 * (r0 + t * std::abs(xi)));
        cp.u = xi >= 0 ? UnitPoint{w0, far, 1 + w0} : UnitPoint{w0, 1 - w0, far};
        cp.w = order > 0 ? antiderivative(t * pow(u.truncated(order - 1), -1.5), w0) : Jet(w0, 0);
        const double e = rep == RepTag::Pi1 ? -k - 0.25 : -k - 0.75;
        cp.G = pow(u, e);
        cp.Gn = pow(u / u0, e);
        cp.dw = t / (u0 * r0);
        cp.shape = std::pow(u0, rep == RepTag::Pi1 ? 2 * k - 1 : 2 * k);
        cp.gs = std::pow(u0, -0.75);
        break;
      }
      case RepTag::Pi3: {
        Jet s, c;
        double s0 = std::sin(t * xi), c0 = cos_anchor(t, pt);
        sincos(t * x, s0, c0, s, c);
        double hm = std::isfinite(pt.d_hi) ? t * pt.d_hi / 2 : M_PI / 4 - t * xi / 2;
        double hp = std::isfinite(pt.d_lo) ? t * pt.d_lo / 2 : M_PI / 4 + t * xi / 2;
        cp.u = {s0, 2 * sq(std::sin(hm)), 2 * sq(std::sin(hp))};
        cp.w = s;
        cp.G = pow(c, 2 * k + 0.5);
        cp.Gn = pow(c / c0, 2 * k + 0.5);
        cp.dw = t * c0;
        cp.shape = std::pow(c0, -4 * k);
        cp.gs = std::sqrt(c0);
        break;
      }
      case RepTag::Pi4: {
        double v0 = v_anchor(t, pt), w0 = t * xi;
        cp.u = {w0, std::isfinite(pt.d_hi) ? t * pt.d_hi : 1 - w0, std::isfinite(pt.d_lo) ? t * pt.d_lo : 1 + w0};
        cp.w = t * x;
        Jet v = (1.0 - tc * x * x).with_value(v0);
        cp.G = pow(v, k - 0.25);
        cp.Gn = pow(v / v0, k - 0.25);
        cp.dw = t;
        cp.shape = std::pow(v0, 0.5 - 2 * k);
        cp.gs = 1;
        break;
      }
      default: throw UnsupportedPair("no closed-form states for " + to_string(rep));
    }
    return cp;
  }

  const double a = this->a(), b = this->b();
  switch (rep) {
    case RepTag::Pi1:
    case RepTag::Pi2: {
      Jet u = 1.0 + tc * x * x;
      double r0 = std::hypot(1.0, t * xi), u0 = r0 * r0, sn = t * xi / r0, cs = 1 / r0;
      cp.u = {(cs - sn) * (cs + sn), 2 * sn * sn, 2 * cs * cs};
      cp.w = (2.0 / u - 1.0).with_value(cp.u.x);
      // xi^(a+1/2) u^e split as (xi/sqrt u)^(a+1/2) u^(e+(a+1/2)/2) to stay finite for large xi
      Jet ratio = order > 0 ? antiderivative(pow(u.truncated(order - 1), -1.5), xi / r0) : Jet(xi / r0, 0);
      cp.G = pow(ratio, a + 0.5) * pow(u, rep == RepTag::Pi1 ? -(b + 0.5) / 2 : -(b + 1.5) / 2);
      cp.dw = -4 * t * sn * cs * cs * cs;
      cp.shape = rep == RepTag::Pi1 ? 1 / u0 : 1;
      break;
    }
    case RepTag::Pi3: {
      Jet s, c;
      double s0 = std::sin(t * xi), c0 = cos_anchor(t, pt);
      sincos(t * x, s0, c0, s, c);
      cp.u = {(c0 - s0) * (c0 + s0), 2 * s0 * s0, 2 * c0 * c0};
      cp.w = (1.0 - 2.0 * s * s).with_value(cp.u.x);
      cp.G = pow(s, a + 0.5) * pow(c, b + 0.5);
      cp.dw = -4 * t * s0 * c0;
      cp.shape = 1;
      break;
    }
    case RepTag::Pi4: {
      double v0 = v_anchor(t, pt);
      cp.u = {1 - 2 * tc * xi * xi, 2 * tc * xi * xi, 2 * v0};
      cp.w = 1.0 - 2.0 * tc * x * x;
      cp.G = pow(x, a + 0.5) * pow((1.0 - tc * x * x).with_value(v0), (2 * b - 1) / 4);
      cp.dw = -4 * tc * xi;
      cp.shape = std::sqrt(v0);
      break;
    }
    default: throw UnsupportedPair("no closed-form states for " + to_string(rep));
  }
  const cplx g0 = cp.G.value();
  cp.gs = std::abs(g0) * std::sqrt(cp.shape);
  cp.Gn = g0 != 0.0 ? cp.G / g0 : cp.G;
  return cp;
}

double ClosedFormSolution::F(int n, const UnitPoint& u) const {
  if (family == AnsatzFamily::Jacobi) return jacobi({n, a(), b()}, u.x);
  if (branch == Branch::Minus) return assoc_legendre_jet({n, -lambda()}, u, 0).value().real();
  return ferrers_hypergeometric(n - lambda(), lambda(), u.x);
}

Jet ClosedFormSolution::F_jet(int n, const UnitPoint& u, int order) const {
  if (family == AnsatzFamily::Jacobi) return jacobi_jet({n, a(), b()}, u.x, order);
  if (branch == Branch::Minus) return assoc_legendre_jet({n, -lambda()}, u, order);
  throw UnsupportedOrder("derivatives of the positive-order branch are not available");
}

struct ClosedFormSolution::NormCache {
  std::mutex mu;
  std::map<int, double> values;
};

double ClosedFormSolution::norm(int n) const {
  if (!has_states()) throw ParameterError("no normalizable states in this parameter regime");
  if (n < 0) throw ParameterError("level index must be non-negative");
  {
    std::lock_guard lock(norms_->mu);
    auto it = norms_->values.find(n);
    if (it != norms_->values.end()) return it->second;
  }
  double N = compute_norm(n);
  std::lock_guard lock(norms_->mu);
  norms_->values[n] = N;
  return N;
}

double ClosedFormSolution::compute_norm(int n) const {
  if (family == AnsatzFamily::Jacobi) return jacobi_norm({n, a(), b()});
  const double lam = lambda();
  if (branch == Branch::Minus) {
    // (1 - z^2)^lambda times a polynomial of degree 2n
    Quadrature q = gauss_jacobi_nodes(n + 2, lam, lam);
    double s = 0;
    for (size_t i = 0; i < q.nodes.size(); ++i) {
      double z = q.nodes[i];
      s += q.weights[i] * sq(assoc_legendre({n, -lam}, z)) / std::pow((1 - z) * (1 + z), lam);
    }
    return s;
  }
  // P_{n-lambda}^{lambda} has parity (-1)^n
  return 2 * integrate_gl([&](double z) { return sq(ferrers_hypergeometric(n - lam, lam, z)); }, 0, 1, 1e-11, 64);
}

cplx ClosedFormSolution::psi(int n, const NativePoint& pt) const {
  double N = norm(n);
  auto cp = chart(pt, 0);
  return cp.G.value() * F(n, cp.u) / std::sqrt(N);
}

cplx ClosedFormSolution::psi(int n, double xi) const {
  if (!domain.contains(xi)) throw DomainError("sample point outside the solution domain");
  return psi(n, NativePoint::at(xi, domain));
}

Jet ClosedFormSolution::psi_jet(int n, const NativePoint& pt, int order) const {
  double N = norm(n);
  auto cp = chart(pt, order);
  return cp.G * compose(F_jet(n, cp.u, order), cp.w) / std::sqrt(N);
}

double ClosedFormSolution::metric(const NativePoint& pt) const {
  if (!has_states()) throw ParameterError("no metric without normalizable states");
  return metric_constant * chart(pt, 0).shape;
}

double ClosedFormSolution::metric(double xi) const {
  if (!domain.contains(xi)) throw DomainError("sample point outside the solution domain");
  return metric(NativePoint::at(xi, domain));
}

cplx ClosedFormSolution::inner_product(int n, int m) const {
  double Nn = norm(n), Nm = norm(m);
  return integrate_domain_c(
      [&](const NativePoint& pt) {
        auto cp = chart(pt, 0);
        double fn = F(n, cp.u), fm = n == m ? fn : F(m, cp.u);
        return cplx(cp.gs * cp.gs * fn * fm * metric_constant);
      },
      domain) /
         std::sqrt(Nn * Nm);
}

FactorizationAnsatz ClosedFormSolution::ansatz(int n) const {
  if (!has_states()) throw ParameterError("no factorization without normalizable states");
  FactorizationAnsatz an;
  an.family = family;
  an.n = n;
  an.c = c;
  an.phase = phase;
  if (family == AnsatzFamily::AssociatedLegendre) {
    an.mu = branch == Branch::Minus ? -lambda() : lambda();
    an.nu = n - an.mu;
  } else {
    an.a = a();
    an.b = b();
  }
  return an;
}

std::function<double(double)> metric_generic(const ModelSpec& model, RepTag rep, const DeformationParams& params) {
  ClosedFormSolution sol = solve(model, rep, params);
  if (!sol.has_states()) throw ParameterError("no metric without normalizable states");
  TransformResult tr = to_potential(derived_coefficients(model, rep, params), sol.p0);
  FactorizationAnsatz an = sol.ansatz(0);
  auto v = v_from_Qw(an, tr.q_domain());
  return [tr, an, v](double p) {
    double q = tr.q_of_p(p);
    double rho = std::exp(-2 * tr.chi(p).real()) * std::abs(an.dw(q, 1)) * tr.dq_dp(p) / sq(v(q));
    if (an.family == AnsatzFamily::Jacobi) {
      UnitPoint u = an.w_point(q);
      rho *= std::pow(u.one_minus, an.a) * std::pow(u.one_plus, an.b);
    }
    return rho;
  };
}

Samples wavefunction_eval(const ClosedFormSolution& sol, int n, const std::vector<double>& xi) {
  Samples out;
  out.reserve(xi.size());
  for (double x : xi) out.push_back(sol.psi(n, x));
  return out;
}

}  // namespace gup
