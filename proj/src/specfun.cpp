#include "gupspec/specfun.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/hypergeometric_pFq.hpp>
#include <cmath>

#include "gupspec/errors.hpp"
#include "gupspec/tridiag.hpp"

namespace gup {

double log_gamma(double x) { return std::lgamma(x); }

template <class T>
static T gegenbauer_t(int n, double l, T x) {
  if (n < 0) return T(0);
  T c0 = 1;
  if (n == 0) return c0;
  T c1 = 2.0 * l * x;
  for (int k = 2; k <= n; ++k) {
    T c2 = (2.0 * (k + l - 1) * x * c1 - double(k + 2 * l - 2) * c0) / double(k);
    c0 = c1;
    c1 = c2;
  }
  return c1;
}

double gegenbauer(int n, double l, double x) { return gegenbauer_t<double>(n, l, x); }
cplx gegenbauer(int n, double l, cplx x) { return gegenbauer_t<cplx>(n, l, x); }

// P_{n+lam}^{-lam} = k_n (1-z^2)^{lam/2} C_n^{lam+1/2}
static double log_kn(int n, double lam) {
  return -lam * std::log(2.0) + std::lgamma(n + 1.0) + std::lgamma(2 * lam + 1) - std::lgamma(lam + 1) -
         std::lgamma(n + 2 * lam + 1);
}

static bool integer_order(double mu, int& m) {
  double r = std::round(mu);
  if (std::abs(mu - r) > 1e-12) return false;
  m = int(r);
  return true;
}

template <class T>
static T legendre_t(const LegendreSpec& s, T z) {
  if (s.n < 0) throw ParameterError("Legendre index n must be non-negative");
  if (s.mu <= 0) {
    double lam = -s.mu;
    T w = 1.0 - z * z;
    T pre = lam == 0 ? T(1) : std::pow(w, lam / 2);
    return std::exp(log_kn(s.n, lam)) * pre * gegenbauer(s.n, lam + 0.5, z);
  }
  int m;
  if (!integer_order(s.mu, m)) throw UnsupportedOrder("positive non-integer Legendre order");
  int np = s.n - 2 * m;
  if (np < 0) return T(0);
  double ratio = std::exp(std::lgamma(np + 2.0 * m + 1) - std::lgamma(np + 1.0));
  T base = legendre_t<T>({np, -double(m)}, z);
  return (m % 2 ? -1.0 : 1.0) * ratio * base;
}

double assoc_legendre(const LegendreSpec& s, double z) {
  if (!(std::abs(z) <= 1)) throw DomainError("Ferrers function needs |z| <= 1");
  return legendre_t<double>(s, z);
}

cplx assoc_legendre(const LegendreSpec& s, cplx z) { return legendre_t<cplx>(s, z); }

double assoc_legendre_deriv(const LegendreSpec& s, double z) {
  if (!(std::abs(z) < 1)) throw DomainError("Ferrers derivative needs |z| < 1");
  if (s.mu > 0) {
    int m;
    if (!integer_order(s.mu, m)) throw UnsupportedOrder("positive non-integer Legendre order");
    int np = s.n - 2 * m;
    if (np < 0) return 0;
    double ratio = std::exp(std::lgamma(np + 2.0 * m + 1) - std::lgamma(np + 1.0));
    return (m % 2 ? -1.0 : 1.0) * ratio * assoc_legendre_deriv({np, -double(m)}, z);
  }
  double lam = -s.mu, l = lam + 0.5, w = 1 - z * z;
  double c = gegenbauer(s.n, l, z);
  double dc = s.n > 0 ? 2 * l * gegenbauer(s.n - 1, l + 1, z) : 0.0;
  double pre = std::pow(w, lam / 2);
  return std::exp(log_kn(s.n, lam)) * pre * (dc - lam * z * c / w);
}

Jet assoc_legendre_jet(const LegendreSpec& s, const UnitPoint& z, int order) {
  if (s.mu > 0) throw UnsupportedOrder("jets are provided for non-positive orders");
  double lam = -s.mu, l = lam + 0.5;
  Jet w(z.one_minus_sq(), order);
  if (order >= 1) w[1] = -2 * z.x;
  if (order >= 2) w[2] = -1;
  Jet c(0.0, order);
  double poch = 1, fact = 1, two = 1;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) {
      poch *= l + k - 1;
      fact *= k;
      two *= 2;
    }
    c[k] = two * poch / fact * gegenbauer(s.n - k, l + k, z.x);
  }
  Jet r = lam == 0 ? c : pow(w, lam / 2) * c;
  return r * std::exp(log_kn(s.n, lam));
}

double legendre_norm_closed(const LegendreSpec& s) {
  if (s.mu > 0) throw UnsupportedOrder("closed-form norm provided for non-positive orders");
  double lam = -s.mu, nu = s.degree();
  return 2.0 / (2 * nu + 1) * std::exp(std::lgamma(s.n + 1.0) - std::lgamma(s.n + 2 * lam + 1));
}

double ferrers_hypergeometric(double nu, double mu, double z) {
  if (!(std::abs(z) < 1)) throw DomainError("hypergeometric Ferrers series needs |z| < 1");
  int m;
  if (integer_order(mu, m) && m > 0) throw UnsupportedOrder("series form undefined for positive integer order");
  double x = (1 - z) / 2;
  double f = boost::math::hypergeometric_pFq({-nu, nu + 1}, {1 - mu}, x);
  double sg = 1;
  double lg = std::lgamma(1 - mu);
  if (std::tgamma(1 - mu) < 0) sg = -1;
  return sg * std::pow((1 + z) / (1 - z), mu / 2) * std::exp(-lg) * f;
}

static void check_ab(const JacobiSpec& s) {
  if (!(s.a > -1) || !(s.b > -1)) throw ParameterError("Jacobi parameters must exceed -1");
  if (s.n < 0) throw ParameterError("Jacobi degree must be non-negative");
}

static double jacobi_raw(int n, double a, double b, double x) {
  if (n < 0) return 0;
  double p0 = 1;
  if (n == 0) return p0;
  double p1 = (a + 1) + (a + b + 2) * (x - 1) / 2;
  for (int k = 2; k <= n; ++k) {
    double s = 2.0 * k + a + b;
    double c1 = 2.0 * k * (k + a + b) * (s - 2);
    double c2 = (s - 1) * (s * (s - 2) * x + a * a - b * b);
    double c3 = 2.0 * (k + a - 1) * (k + b - 1) * s;
    double p2 = (c2 * p1 - c3 * p0) / c1;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double jacobi(const JacobiSpec& s, double x) {
  check_ab(s);
  return jacobi_raw(s.n, s.a, s.b, x);
}

double jacobi_deriv(const JacobiSpec& s, double x) {
  check_ab(s);
  if (s.n == 0) return 0;
  return 0.5 * (s.n + s.a + s.b + 1) * jacobi_raw(s.n - 1, s.a + 1, s.b + 1, x);
}

Jet jacobi_jet(const JacobiSpec& s, double x, int order) {
  check_ab(s);
  Jet j(0.0, order);
  double coef = 1, fact = 1;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) {
      coef *= 0.5 * (s.n + s.a + s.b + k);
      fact *= k;
    }
    j[k] = coef / fact * jacobi_raw(s.n - k, s.a + k, s.b + k, x);
  }
  return j;
}

double jacobi_norm(const JacobiSpec& s) {
  check_ab(s);
  double a = s.a, b = s.b;
  int n = s.n;
  double l = (a + b + 1) * std::log(2.0) + std::lgamma(n + a + 1) + std::lgamma(n + b + 1) - std::lgamma(n + 1.0);
  if (n == 0)
    l -= std::lgamma(a + b + 2);
  else
    l -= std::log(2.0 * n + a + b + 1) + std::lgamma(n + a + b + 1);
  return std::exp(l);
}

Quadrature gauss_legendre_nodes(int count) {
  if (count < 1) throw ParameterError("quadrature needs at least one node");
  Quadrature q;
  q.nodes.resize(count);
  q.weights.resize(count);
  int half = (count + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (count + 0.5));
    double pp = 0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1, p2 = 0;
      for (int j = 1; j <= count; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = count * (z * p1 - p2) / (z * z - 1);
      double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    {
      double p1 = 1, p2 = 0;
      for (int j = 1; j <= count; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = count * (z * p1 - p2) / (z * z - 1);
    }
    double w = 2 / ((1 - z * z) * pp * pp);
    q.nodes[i] = -z;
    q.nodes[count - 1 - i] = z;
    q.weights[i] = w;
    q.weights[count - 1 - i] = w;
  }
  if (count % 2) q.nodes[count / 2] = 0;
  return q;
}

Quadrature gauss_jacobi_nodes(int count, double a, double b) {
  if (count < 1) throw ParameterError("quadrature needs at least one node");
  if (!(a > -1) || !(b > -1)) throw ParameterError("Jacobi weight exponents must exceed -1");
  SymTridiagonal t;
  t.diag.resize(count);
  t.off.resize(count - 1);
  for (int k = 0; k < count; ++k) {
    double s = 2.0 * k + a + b;
    t.diag[k] = (k == 0 && std::abs(a + b + 2) > 0) ? (b - a) / (a + b + 2) : (b * b - a * a) / (s * (s + 2));
  }
  for (int k = 1; k < count; ++k) {
    double s = 2.0 * k + a + b;
    t.off[k - 1] = std::sqrt(4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1) * (s - 1)));
  }
  Quadrature q;
  q.nodes = lowest_eigenvalues(t, count, 1e-15);
  q.weights.resize(count);
  double lc = (a + b + 1) * std::log(2.0) + std::lgamma(count + a + 1) + std::lgamma(count + b + 1) -
              std::lgamma(count + a + b + 1) - std::lgamma(count + 1.0);
  for (int i = 0; i < count; ++i) {
    double x = q.nodes[i];
    for (int it = 0; it < 8; ++it) {
      double p = jacobi_raw(count, a, b, x);
      double dp = 0.5 * (count + a + b + 1) * jacobi_raw(count - 1, a + 1, b + 1, x);
      double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-17) break;
    }
    q.nodes[i] = x;
    double dp = 0.5 * (count + a + b + 1) * jacobi_raw(count - 1, a + 1, b + 1, x);
    q.weights[i] = std::exp(lc) / ((1 - x) * (1 + x) * dp * dp);
  }
  return q;
}

}  // namespace gup
