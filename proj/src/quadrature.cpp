#include "gupspec/quadrature.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/sinh_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <vector>

#include "gupspec/errors.hpp"
#include "gupspec/specfun.hpp"

namespace gup {

double integrate_gl(const std::function<double(double)>& f, double lo, double hi, double tol, int start) {
  double prev = NAN;
  for (int n = start; n <= 8192; n *= 2) {
    Quadrature q = gauss_legendre_nodes(n);
    double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo), s = 0;
    for (int i = 0; i < n; ++i) s += q.weights[i] * f(c + h * q.nodes[i]);
    s *= h;
    if (std::abs(s - prev) <= tol * std::max(1.0, std::abs(s))) return s;
    prev = s;
  }
  throw ConvergenceFailure("Gauss-Legendre integration did not settle");
}

double integrate_domain(const std::function<double(const NativePoint&)>& f, const Domain& d, double tol) {
  using namespace boost::math::quadrature;
  if (d.lo_finite() && d.hi_finite()) {
    tanh_sinh<double> ts(15);
    auto g = [&](double x, double xc) {
      NativePoint p{x, x - d.lo, d.hi - x};
      if (xc < 0)
        p.d_lo = -xc;
      else if (xc > 0)
        p.d_hi = xc;
      if (p.d_lo <= 0 || p.d_hi <= 0) return 0.0;
      return f(p);
    };
    return ts.integrate(g, d.lo, d.hi, tol);
  }
  if (d.lo_finite()) {
    exp_sinh<double> es(12);
    auto g = [&](double t) {
      if (t <= 0) return 0.0;
      return f(NativePoint{d.lo + t, t, inf});
    };
    return es.integrate(g, 0.0, inf, tol);
  }
  if (d.hi_finite()) {
    exp_sinh<double> es(12);
    auto g = [&](double t) {
      if (t <= 0) return 0.0;
      return f(NativePoint{d.hi - t, inf, t});
    };
    return es.integrate(g, 0.0, inf, tol);
  }
  sinh_sinh<double> ss(12);
  auto g = [&](double x) { return f(NativePoint{x, inf, inf}); };
  return ss.integrate(g, tol);
}

cplx integrate_domain_c(const std::function<cplx(const NativePoint&)>& f, const Domain& d, double tol) {
  double re = integrate_domain([&](const NativePoint& p) { return f(p).real(); }, d, tol);
  double im = integrate_domain([&](const NativePoint& p) { return f(p).imag(); }, d, tol);
  return {re, im};
}

}  // namespace gup
