#include "gupspec/jet.hpp"

#include <algorithm>
#include <cmath>

#include "gupspec/errors.hpp"

namespace gup {

Jet::Jet(cplx value, int order) : n_(order) {
  if (order < 0 || order > kMaxOrder) throw UnsupportedOrder("jet order out of range");
  c_[0] = value;
}

Jet Jet::variable(double x0, int order) {
  Jet j(x0, order);
  if (order >= 1) j.c_[1] = 1.0;
  return j;
}

cplx Jet::deriv(int k) const {
  double f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return c_[k] * f;
}

Jet Jet::derivative() const {
  if (n_ == 0) throw UnsupportedOrder("cannot differentiate an order-0 jet");
  Jet d(0.0, n_ - 1);
  for (int k = 0; k < n_; ++k) d.c_[k] = c_[k + 1] * double(k + 1);
  return d;
}

Jet Jet::with_value(cplx v) const {
  Jet j = *this;
  j.c_[0] = v;
  return j;
}

Jet Jet::truncated(int order) const {
  Jet j = *this;
  j.n_ = std::min(order, n_);
  for (int k = j.n_ + 1; k <= kMaxOrder; ++k) j.c_[k] = 0.0;
  return j;
}

Jet& Jet::operator+=(const Jet& o) {
  n_ = std::min(n_, o.n_);
  for (int k = 0; k <= n_; ++k) c_[k] += o.c_[k];
  for (int k = n_ + 1; k <= kMaxOrder; ++k) c_[k] = 0.0;
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  n_ = std::min(n_, o.n_);
  for (int k = 0; k <= n_; ++k) c_[k] -= o.c_[k];
  for (int k = n_ + 1; k <= kMaxOrder; ++k) c_[k] = 0.0;
  return *this;
}

Jet& Jet::operator*=(const Jet& o) {
  int n = std::min(n_, o.n_);
  std::array<cplx, kMaxOrder + 1> r{};
  for (int k = 0; k <= n; ++k)
    for (int j = 0; j <= k; ++j) r[k] += c_[j] * o.c_[k - j];
  c_ = r;
  n_ = n;
  return *this;
}

Jet& Jet::operator/=(const Jet& o) {
  int n = std::min(n_, o.n_);
  std::array<cplx, kMaxOrder + 1> q{};
  for (int k = 0; k <= n; ++k) {
    cplx s = c_[k];
    for (int j = 1; j <= k; ++j) s -= o.c_[j] * q[k - j];
    q[k] = s / o.c_[0];
  }
  c_ = q;
  n_ = n;
  return *this;
}

Jet& Jet::operator*=(cplx s) {
  for (int k = 0; k <= n_; ++k) c_[k] *= s;
  return *this;
}

Jet& Jet::operator+=(cplx s) {
  c_[0] += s;
  return *this;
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }
Jet operator*(Jet a, const Jet& b) { return a *= b; }
Jet operator/(Jet a, const Jet& b) { return a /= b; }
Jet operator-(Jet a) { return a *= -1.0; }
Jet operator*(Jet a, cplx s) { return a *= s; }
Jet operator*(cplx s, Jet a) { return a *= s; }
Jet operator*(Jet a, double s) { return a *= s; }
Jet operator*(double s, Jet a) { return a *= s; }
Jet operator/(Jet a, cplx s) { return a *= 1.0 / s; }
Jet operator/(Jet a, double s) { return a *= 1.0 / s; }
Jet operator/(cplx s, const Jet& a) { return Jet(s, a.order()) / a; }
Jet operator/(double s, const Jet& a) { return Jet(s, a.order()) / a; }
Jet operator+(Jet a, cplx s) { return a += s; }
Jet operator+(cplx s, Jet a) { return a += s; }
Jet operator+(Jet a, double s) { return a += s; }
Jet operator+(double s, Jet a) { return a += s; }
Jet operator-(Jet a, double s) { return a += -s; }
Jet operator-(double s, Jet a) { return (-a) += s; }

Jet pow(const Jet& x, double e) {
  int n = x.order();
  Jet g(std::pow(x.value(), e), n);
  for (int k = 1; k <= n; ++k) {
    cplx s = 0;
    for (int j = 1; j <= k; ++j) s += (e * j - (k - j)) * x[j] * g[k - j];
    g[k] = s / (double(k) * x.value());
  }
  return g;
}

Jet sqrt(const Jet& x) { return pow(x, 0.5); }

Jet exp(const Jet& x) {
  int n = x.order();
  Jet e(std::exp(x.value()), n);
  for (int k = 1; k <= n; ++k) {
    cplx s = 0;
    for (int j = 1; j <= k; ++j) s += double(j) * x[j] * e[k - j];
    e[k] = s / double(k);
  }
  return e;
}

Jet log(const Jet& x) {
  int n = x.order();
  Jet l(std::log(x.value()), n);
  for (int k = 1; k <= n; ++k) {
    cplx s = x[k];
    for (int j = 1; j < k; ++j) s -= double(j) / k * l[j] * x[k - j];
    l[k] = s / x.value();
  }
  return l;
}

void sincos(const Jet& x, double s0, double c0, Jet& s, Jet& c) {
  int n = x.order();
  s = Jet(s0, n);
  c = Jet(c0, n);
  for (int k = 1; k <= n; ++k) {
    cplx ss = 0, cc = 0;
    for (int j = 1; j <= k; ++j) {
      ss += double(j) * x[j] * c[k - j];
      cc -= double(j) * x[j] * s[k - j];
    }
    s[k] = ss / double(k);
    c[k] = cc / double(k);
  }
}

Jet sin(const Jet& x) {
  Jet s, c;
  double v = x.value().real();
  sincos(x, std::sin(v), std::cos(v), s, c);
  return s;
}

Jet cos(const Jet& x) {
  Jet s, c;
  double v = x.value().real();
  sincos(x, std::sin(v), std::cos(v), s, c);
  return c;
}

Jet tan(const Jet& x) {
  Jet s, c;
  double v = x.value().real();
  sincos(x, std::sin(v), std::cos(v), s, c);
  return s / c;
}

Jet antiderivative(const Jet& d, cplx c0) {
  if (d.order() >= Jet::kMaxOrder) throw UnsupportedOrder("jet order limit reached");
  Jet r(c0, d.order() + 1);
  for (int k = 1; k <= d.order() + 1; ++k) r[k] = d[k - 1] / double(k);
  return r;
}

Jet compose(const Jet& outer, const Jet& inner) {
  int n = std::min(outer.order(), inner.order());
  Jet d = inner.truncated(n).with_value(0.0);
  Jet r(outer[n], n);
  for (int k = n - 1; k >= 0; --k) {
    r *= d;
    r += outer[k];
  }
  return r;
}

}  // namespace gup
