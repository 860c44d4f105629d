#pragma once
#include <functional>

#include "gupspec/types.hpp"

namespace gup {

// Sample point of a domain with accurately known distances to its ends.
struct NativePoint {
  double xi = 0;
  double d_lo = inf;
  double d_hi = inf;

  static NativePoint at(double xi, const Domain& d) {
    return {xi, d.lo_finite() ? xi - d.lo : inf, d.hi_finite() ? d.hi - xi : inf};
  }
};

// Gauss-Legendre on [lo, hi], node count doubled from `start` until two
// successive results agree to `tol`.
double integrate_gl(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-11,
                    int start = 128);

// Double-exponential quadrature over an open domain; finite ends get
// accurate endpoint distances.
double integrate_domain(const std::function<double(const NativePoint&)>& f, const Domain& d, double tol = 1e-13);
cplx integrate_domain_c(const std::function<cplx(const NativePoint&)>& f, const Domain& d, double tol = 1e-13);

}  // namespace gup
