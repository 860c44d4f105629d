#include "gupspec/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gupspec/errors.hpp"

namespace gup {

int sturm_count(const SymTridiagonal& t, double x) {
  const std::size_t n = t.diag.size();
  const double tiny = std::numeric_limits<double>::min() * 1e4;
  int count = 0;
  double d = t.diag[0] - x;
  if (std::abs(d) < tiny) d = -tiny;
  if (d < 0) ++count;
  for (std::size_t i = 1; i < n; ++i) {
    d = t.diag[i] - x - t.off[i - 1] * t.off[i - 1] / d;
    if (std::abs(d) < tiny) d = -tiny;
    if (d < 0) ++count;
  }
  return count;
}

std::vector<double> lowest_eigenvalues(const SymTridiagonal& t, int count, double rel_tol) {
  const std::size_t n = t.diag.size();
  if (n == 0 || t.off.size() + 1 != n) throw ParameterError("malformed tridiagonal matrix");
  if (count < 0 || std::size_t(count) > n) throw ParameterError("eigenvalue count out of range");

  double glo = std::numeric_limits<double>::max(), ghi = -glo;
  for (std::size_t i = 0; i < n; ++i) {
    double r = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(t.off[i]) : 0.0);
    glo = std::min(glo, t.diag[i] - r);
    ghi = std::max(ghi, t.diag[i] + r);
  }
  double pad = 1e-12 * std::max(1.0, std::max(std::abs(glo), std::abs(ghi)));
  glo -= pad;
  ghi += pad;

  std::vector<double> ev(count);
  double lower = glo;
  for (int k = 0; k < count; ++k) {
    double a = lower, b = ghi;
    while (b - a > rel_tol * std::max(1.0, std::abs(a) + std::abs(b))) {
      double m = 0.5 * (a + b);
      if (m <= a || m >= b) break;
      if (sturm_count(t, m) > k)
        b = m;
      else
        a = m;
    }
    ev[k] = 0.5 * (a + b);
    lower = a;
  }
  return ev;
}

}  // namespace gup
