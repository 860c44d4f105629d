#include "gupspec/liouville.hpp"

#include <algorithm>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "gupspec/errors.hpp"

namespace gup {

namespace bq = boost::math::quadrature;

struct TransformResult::Impl {
  enum class Map { Line, HalfLo, HalfHi, Finite };

  FGHCoefficients fgh;
  Domain pd, qd;
  double p0 = 0, scale = 1;
  Map map = Map::Line;
  double t0 = 0;  // Finite: tanh(t0) places p0
  double T = 12, dt = 1.0 / 16;
  int K = 0;
  std::vector<double> qtab;
  std::vector<cplx> chitab;
  bool lo_open = false, hi_open = false;  // q-domain unbounded at that end

  NativePoint point(double t) const {
    switch (map) {
      case Map::Line: {
        double x = p0 + scale * std::sinh(t);
        return {x, inf, inf};
      }
      case Map::HalfLo: {
        double d = (p0 - pd.lo) * std::exp(t);
        return {pd.lo + d, d, inf};
      }
      case Map::HalfHi: {
        double d = (pd.hi - p0) * std::exp(-t);
        return {pd.hi - d, inf, d};
      }
      case Map::Finite: {
        double s = t + t0, L = pd.hi - pd.lo;
        double dl = L / (1 + std::exp(-2 * s)), dh = L / (1 + std::exp(2 * s));
        double x = s < 0 ? pd.lo + dl : pd.hi - dh;
        return {x, dl, dh};
      }
    }
    return {};
  }

  double dxi_dt(double t) const {
    switch (map) {
      case Map::Line: return scale * std::cosh(t);
      case Map::HalfLo: return (p0 - pd.lo) * std::exp(t);
      case Map::HalfHi: return (pd.hi - p0) * std::exp(-t);
      case Map::Finite: {
        double c = std::cosh(t + t0);
        return (pd.hi - pd.lo) / (2 * c * c);
      }
    }
    return 0;
  }

  double t_of(const NativePoint& pt) const {
    switch (map) {
      case Map::Line: return std::asinh((pt.xi - p0) / scale);
      case Map::HalfLo: return std::log(pt.d_lo / (p0 - pd.lo));
      case Map::HalfHi: return -std::log(pt.d_hi / (pd.hi - p0));
      case Map::Finite: return 0.5 * std::log(pt.d_lo / pt.d_hi) - t0;
    }
    return 0;
  }

  double f_real(const NativePoint& pt) const {
    cplx f = fgh.f_at(pt);
    if (!(f.real() > 0) || std::abs(f.imag()) > 1e-10 * std::abs(f.real()))
      throw SingularCoefficient("f must be real and positive on the interior");
    return f.real();
  }

  double qint(double t) const {
    double j = dxi_dt(t);
    if (!std::isfinite(j) || j == 0) return 0;
    NativePoint pt = point(t);
    if (!std::isfinite(pt.xi) || pt.d_lo == 0 || pt.d_hi == 0) return 0;
    double r = j / std::sqrt(f_real(pt));
    return std::isfinite(r) ? r : 0.0;
  }

  cplx chiint(double t) const {
    FGHValues v = fgh.values_at(point(t));
    return (v.df + 2.0 * v.g) / (4.0 * v.f) * dxi_dt(t);
  }

  double qpanel(double a, double b) const {
    if (b < a) return -qpanel(b, a);
    return bq::gauss<double, 20>::integrate([&](double t) { return qint(t); }, a, b);
  }

  cplx chipanel(double a, double b) const {
    if (b < a) return -chipanel(b, a);
    auto re = bq::gauss<double, 20>::integrate([&](double t) { return chiint(t).real(); }, a, b);
    auto im = bq::gauss<double, 20>::integrate([&](double t) { return chiint(t).imag(); }, a, b);
    return {re, im};
  }

  double tnode(int k) const { return -T + k * dt; }

  // tail integral of qint over (t, +-infinity)
  double tail(double t, int dir) const {
    bq::exp_sinh<double> es(10);
    return es.integrate([&](double u) { return qint(t + dir * u); }, 0.0, inf, 1e-14);
  }

  bool tail_diverges(int dir) const {
    double e = dir * T;
    double a = qint(e), b = qint(e + dir * 4);
    return !(b < a * std::exp(-1.0));
  }

  double q_at_t(double t) const {
    if (t >= -T && t <= T) {
      int k = std::min(int((t + T) / dt), 2 * K - 1);
      return qtab[k] + qpanel(tnode(k), t);
    }
    int dir = t > T ? 1 : -1;
    int k = dir > 0 ? 2 * K : 0;
    if ((dir > 0 && !hi_open) || (dir < 0 && !lo_open)) {
      double end = dir > 0 ? qd.hi : qd.lo;
      return end - dir * tail(t, dir);
    }
    double s = 0, a = tnode(k);
    while ((t - a) * dir > 0) {
      double b = dir > 0 ? std::min(a + 1.0, t) : std::max(a - 1.0, t);
      s += qpanel(a, b);
      a = b;
    }
    return qtab[k] + s;
  }

  // solve q_at_t(t) = q for t on [a, b] where q_at_t(a) = qa
  double solve_panel(double a, double qa, double b, double qb, double q) const {
    double lo = a, hi = b, flo = qa - q;
    double t = a + (b - a) * (q - qa) / (qb - qa);
    for (int it = 0; it < 60; ++it) {
      double ft = qa + qpanel(a, t) - q;
      if (std::abs(ft) <= 1e-15 * std::max(1.0, std::abs(q))) return t;
      if ((ft < 0) == (flo < 0))
        lo = t;
      else
        hi = t;
      double tn = t - ft / qint(t);
      if (!(tn > lo && tn < hi)) tn = 0.5 * (lo + hi);
      if (std::abs(tn - t) <= 1e-15 * std::max(1.0, std::abs(t))) return tn;
      t = tn;
    }
    return t;
  }

  double t_of_q(double q) const {
    if (!(q > qd.lo && q < qd.hi)) throw DomainError("q outside the transformed domain");
    if (q >= qtab.front() && q <= qtab.back()) {
      int k = int(std::upper_bound(qtab.begin(), qtab.end(), q) - qtab.begin()) - 1;
      k = std::clamp(k, 0, 2 * K - 1);
      return solve_panel(tnode(k), qtab[k], tnode(k + 1), qtab[k + 1], q);
    }
    int dir = q > qtab.back() ? 1 : -1;
    double a = dir > 0 ? T : -T, qa = dir > 0 ? qtab.back() : qtab.front(), w = dt;
    for (int it = 0; it < 4000; ++it) {
      double b = a + dir * w;
      double qb = qa + dir * std::abs(qpanel(std::min(a, b), std::max(a, b)));
      if ((q - qb) * dir <= 0) return solve_panel(a, qa, b, qb, q);
      a = b;
      qa = qb;
      w = std::min(1.0, w * 1.5);
    }
    throw ConvergenceFailure("inverse map p(q) did not bracket the target");
  }
};

cplx TransformResult::chi(double p) const {
  const Impl& m = *impl_;
  if (!m.pd.contains(p)) throw DomainError("p outside the coefficient domain");
  double t = m.t_of(NativePoint::at(p, m.pd));
  if (t >= -m.T && t <= m.T) {
    int k = std::min(int((t + m.T) / m.dt), 2 * m.K - 1);
    return m.chitab[k] + m.chipanel(m.tnode(k), t);
  }
  int dir = t > m.T ? 1 : -1;
  int k = dir > 0 ? 2 * m.K : 0;
  cplx s = 0;
  double a = m.tnode(k);
  while ((t - a) * dir > 0) {
    double b = dir > 0 ? std::min(a + 1.0, t) : std::max(a - 1.0, t);
    s += m.chipanel(a, b);
    a = b;
  }
  return m.chitab[k] + s;
}

double TransformResult::q_of_p(double p) const {
  const Impl& m = *impl_;
  if (!m.pd.contains(p)) throw DomainError("p outside the coefficient domain");
  return m.q_at_t(m.t_of(NativePoint::at(p, m.pd)));
}

double TransformResult::p_of_q(double q) const { return impl_->point(impl_->t_of_q(q)).xi; }
const Domain& TransformResult::q_domain() const { return impl_->qd; }
const Domain& TransformResult::p_domain() const { return impl_->pd; }
double TransformResult::p0() const { return impl_->p0; }
const FGHCoefficients& TransformResult::fgh() const { return impl_->fgh; }

double TransformResult::dq_dp(double p) const {
  return 1 / std::sqrt(impl_->f_real(NativePoint::at(p, impl_->pd)));
}

static cplx potential(const FGHValues& v) {
  return (4.0 * v.g * v.g + 3.0 * v.df * v.df + 8.0 * v.g * v.df) / (16.0 * v.f) - v.ddf / 4.0 - v.dg / 2.0 + v.h;
}

cplx TransformResult::V_complex_at_p(double p) const {
  return potential(impl_->fgh.values_at(NativePoint::at(p, impl_->pd)));
}

double TransformResult::V_at_p(double p) const { return V_complex_at_p(p).real(); }

cplx TransformResult::V_complex(double q) const {
  return potential(impl_->fgh.values_at(impl_->point(impl_->t_of_q(q))));
}

double TransformResult::V(double q) const { return V_complex(q).real(); }

TransformResult to_potential(const FGHCoefficients& fgh, double p0) {
  auto m = std::make_shared<TransformResult::Impl>();
  m->fgh = fgh;
  m->pd = fgh.p_domain;
  m->p0 = p0;
  m->scale = fgh.scale;
  if (!m->pd.contains(p0)) throw DomainError("reference point outside the coefficient domain");
  using Map = TransformResult::Impl::Map;
  if (m->pd.lo_finite() && m->pd.hi_finite()) {
    m->map = Map::Finite;
    m->t0 = std::atanh(2 * (p0 - m->pd.lo) / (m->pd.hi - m->pd.lo) - 1);
    m->T = 12;
  } else if (m->pd.lo_finite()) {
    m->map = Map::HalfLo;
    m->T = 24;
  } else if (m->pd.hi_finite()) {
    m->map = Map::HalfHi;
    m->T = 24;
  } else {
    m->map = Map::Line;
    m->T = 12;
  }
  m->K = int(std::lround(m->T / m->dt));
  const int nt = 2 * m->K + 1;
  std::vector<double> panel_q(nt - 1);
  std::vector<cplx> panel_chi(nt - 1);
  for (int k = 0; k + 1 < nt; ++k) {
    panel_q[k] = m->qpanel(m->tnode(k), m->tnode(k + 1));
    panel_chi[k] = m->chipanel(m->tnode(k), m->tnode(k + 1));
  }
  // anchor q = 0 and chi = 0 at p0 (t = 0 for every map)
  m->qtab.assign(nt, 0.0);
  m->chitab.assign(nt, 0.0);
  for (int k = m->K + 1; k < nt; ++k) {
    m->qtab[k] = m->qtab[k - 1] + panel_q[k - 1];
    m->chitab[k] = m->chitab[k - 1] + panel_chi[k - 1];
  }
  for (int k = m->K - 1; k >= 0; --k) {
    m->qtab[k] = m->qtab[k + 1] - panel_q[k];
    m->chitab[k] = m->chitab[k + 1] - panel_chi[k];
  }
  for (int dir : {-1, 1}) {
    bool open = m->tail_diverges(dir);
    bool finite_p_end = dir < 0 ? m->pd.lo_finite() : m->pd.hi_finite();
    bool map_reaches_end = !(m->map == Map::HalfHi && dir < 0) && !(m->map == Map::HalfLo && dir > 0);
    if (open && finite_p_end && map_reaches_end)
      throw NonMonotoneMap("f^{-1/2} is not integrable at a finite end of the domain");
    double end = open ? dir * inf : (dir > 0 ? m->qtab.back() + m->tail(m->T, 1) : m->qtab.front() - m->tail(-m->T, -1));
    if (dir < 0) {
      m->lo_open = open;
      m->qd.lo = end;
    } else {
      m->hi_open = open;
      m->qd.hi = end;
    }
  }
  TransformResult r;
  r.impl_ = m;
  return r;
}

// ---- factorization ansatz ----

double FactorizationAnsatz::Q(const UnitPoint& u) const {
  const double w = u.x, d = u.one_minus_sq();
  if (family == AnsatzFamily::AssociatedLegendre) return -2 * w / d;
  return (b - a - (2 + a + b) * w) / d;
}

double FactorizationAnsatz::dQ(const UnitPoint& u) const {
  const double w = u.x, d = u.one_minus_sq();
  if (family == AnsatzFamily::AssociatedLegendre) return -2 * (1 + w * w) / (d * d);
  return (-(2 + a + b) * d + 2 * w * (b - a - (2 + a + b) * w)) / (d * d);
}

double FactorizationAnsatz::R(const UnitPoint& u) const {
  const double d = u.one_minus_sq();
  if (family == AnsatzFamily::AssociatedLegendre) return nu * (nu + 1) / d - mu * mu / (d * d);
  return n * (n + 1 + a + b) / d;
}

double FactorizationAnsatz::Q(double w) const { return Q(UnitPoint::at(w)); }
double FactorizationAnsatz::dQ(double w) const { return dQ(UnitPoint::at(w)); }
double FactorizationAnsatz::R(double w) const { return R(UnitPoint::at(w)); }

double FactorizationAnsatz::w(double q) const { return std::sin(std::sqrt(c) * q + phase); }

UnitPoint FactorizationAnsatz::w_point(double q) const {
  double th = std::sqrt(c) * q + phase;
  double sm = std::sin(M_PI / 4 - th / 2), sp = std::sin(M_PI / 4 + th / 2);
  return {std::sin(th), 2 * sm * sm, 2 * sp * sp};
}

double FactorizationAnsatz::dw(double q, int k) const {
  double th = std::sqrt(c) * q + phase, rc = std::sqrt(c);
  switch (k) {
    case 1: return rc * std::cos(th);
    case 2: return -c * std::sin(th);
    case 3: return -c * rc * std::cos(th);
  }
  throw UnsupportedOrder("derivative order 1..3");
}

double FactorizationAnsatz::F(double w) const {
  if (family == AnsatzFamily::AssociatedLegendre) {
    int m = int(std::lround(nu + mu));
    return assoc_legendre({m, mu}, w);
  }
  return jacobi({n, a, b}, w);
}

double master_residual(const FactorizationAnsatz& an, const TransformResult& tr, cplx E,
                       const std::vector<double>& q_grid) {
  double worst = 0;
  for (double q : q_grid) {
    UnitPoint w = an.w_point(q);
    double w1 = an.dw(q, 1), w2 = an.dw(q, 2), w3 = an.dw(q, 3);
    double Qw = an.Q(w);
    double rhs = w3 / (2 * w1) - 0.75 * (w2 / w1) * (w2 / w1) + w1 * w1 * (an.R(w) - an.dQ(w) / 2 - Qw * Qw / 4);
    cplx lhs = E - tr.V_complex(q);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

std::function<double(double)> v_from_Qw(const FactorizationAnsatz& an, const Domain& q_domain) {
  double rc = std::sqrt(an.c);
  if (q_domain.lo_finite() && q_domain.hi_finite()) {
    double lo = rc * q_domain.lo + an.phase, hi = rc * q_domain.hi + an.phase;
    double k = std::floor((lo - M_PI / 2) / M_PI + 1e-9) + 1;
    double crit = M_PI / 2 + k * M_PI;
    if (crit < hi - 1e-9 * std::max(1.0, std::abs(hi))) throw BranchAmbiguity("w reaches +-1 inside the q-domain");
  } else {
    throw BranchAmbiguity("sinusoidal w on an unbounded q-domain");
  }
  double w0 = an.w(0);
  return [an, w0](double q) {
    double w = an.w(q);
    double I = bq::gauss_kronrod<double, 31>::integrate([&](double x) { return an.Q(x); }, w0, w, 15, 1e-14);
    return std::exp(0.5 * I) / std::sqrt(std::abs(an.dw(q, 1)));
  };
}

}  // namespace gup
