#pragma once
#include <array>

#include "gupspec/types.hpp"

namespace gup {

// Truncated Taylor expansion c_0 + c_1 h + ... + c_n h^n about a fixed point.
class Jet {
 public:
  static constexpr int kMaxOrder = 10;

  Jet() = default;
  Jet(cplx value, int order);
  static Jet variable(double x0, int order);

  int order() const { return n_; }
  cplx value() const { return c_[0]; }
  cplx operator[](int k) const { return c_[k]; }
  cplx& operator[](int k) { return c_[k]; }

  // k-th derivative at the expansion point
  cplx deriv(int k) const;
  Jet derivative() const;
  Jet with_value(cplx v) const;
  Jet truncated(int order) const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  Jet& operator/=(const Jet& o);
  Jet& operator*=(cplx s);
  Jet& operator+=(cplx s);

 private:
  std::array<cplx, kMaxOrder + 1> c_{};
  int n_ = 0;
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator*(Jet a, const Jet& b);
Jet operator/(Jet a, const Jet& b);
Jet operator-(Jet a);
Jet operator*(Jet a, cplx s);
Jet operator*(cplx s, Jet a);
Jet operator*(Jet a, double s);
Jet operator*(double s, Jet a);
Jet operator/(Jet a, cplx s);
Jet operator/(Jet a, double s);
Jet operator/(cplx s, const Jet& a);
Jet operator/(double s, const Jet& a);
Jet operator+(Jet a, cplx s);
Jet operator+(cplx s, Jet a);
Jet operator+(Jet a, double s);
Jet operator+(double s, Jet a);
Jet operator-(Jet a, double s);
Jet operator-(double s, Jet a);

Jet pow(const Jet& x, double e);
Jet sqrt(const Jet& x);
Jet exp(const Jet& x);
Jet log(const Jet& x);
Jet sin(const Jet& x);
Jet cos(const Jet& x);
Jet tan(const Jet& x);
// sin and cos with externally supplied values at the expansion point
void sincos(const Jet& x, double s0, double c0, Jet& s, Jet& c);

// jet of order d.order() + 1 whose derivative is d and whose value is c0
Jet antiderivative(const Jet& d, cplx c0);

// outer is expanded about inner.value(); returns outer(inner(h))
Jet compose(const Jet& outer, const Jet& inner);

}  // namespace gup
