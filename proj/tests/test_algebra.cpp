#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gupspec/algebra.hpp"
#include "gupspec/errors.hpp"

using namespace gup;

namespace {

const cplx I(0, 1);

DeformationParams with_tau(double tau) {
  DeformationParams p;
  p.tau = tau;
  return p;
}

Samples sample(const Grid& g, double (*f)(double)) {
  Samples s(g.n);
  for (int i = 0; i < g.n; ++i) s[i] = f(g.at(i));
  return s;
}

double gauss(double p) { return std::exp(-p * p); }
double dgauss(double p) { return -2 * p * std::exp(-p * p); }

double max_abs_diff(const Samples& a, const Samples& b) {
  double m = 0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

const ModelSpec kModels[] = {HarmonicOscillator{}, Swanson{0.3, 0.15}, PoschlTeller{1.0, 0.5}};

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("deformation parameters") {
    DeformationParams p{2.0, 0.5, 3.0, 0.6};
    CHECK(p.tau_check() == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(with_tau(0).tau_check() == 0);
    DeformationParams bad = p;
    bad.hbar = -1;
    CHECK_THROWS_AS(bad.validate(), ParameterError);
    bad = p;
    bad.tau = NAN;
    CHECK_THROWS_AS(bad.validate(), ParameterError);
  }

  TEST_CASE("representation domains") {
    auto p = with_tau(0.25);
    CHECK_FALSE(make_representation(RepTag::Pi1, p).p_domain.lo_finite());
    CHECK_FALSE(make_representation(RepTag::Pi2, p).p_domain.hi_finite());
    CHECK_FALSE(make_representation(RepTag::Pi4Prime, p).p_domain.hi_finite());
    Domain d3 = make_representation(RepTag::Pi3, p).p_domain;
    CHECK(d3.hi == doctest::Approx(std::numbers::pi / (2 * 0.5)).epsilon(1e-15));
    CHECK(d3.lo == -d3.hi);
    Domain d4 = make_representation(RepTag::Pi4, p).p_domain;
    CHECK(d4.imaginary);
    CHECK(d4.hi == doctest::Approx(2).epsilon(1e-15));
  }

  TEST_CASE("oscillator coefficients") {
    FGHCoefficients c = coefficients(HarmonicOscillator{}, RepTag::Pi1, with_tau(0.2));
    CHECK(c.f(0).real() == doctest::Approx(0.5));
    CHECK(std::abs(c.g(0)) < 1e-15);
    CHECK(c.h(1).real() == doctest::Approx(0.5));
    FGHCoefficients flat = coefficients(HarmonicOscillator{}, RepTag::Pi1, with_tau(0));
    for (double p : {-2.0, 0.3, 5.0}) {
      CHECK(flat.f(p).real() == doctest::Approx(0.5));
      CHECK(std::abs(flat.g(p)) == 0);
    }
  }

  TEST_CASE("Swanson with vanishing couplings is the plain oscillator at tau = 0") {
    auto p = with_tau(0);
    FGHCoefficients s = coefficients(Swanson{0, 0}, RepTag::Pi1, p);
    FGHCoefficients h = coefficients(HarmonicOscillator{}, RepTag::Pi1, p);
    for (double x : {-1.5, 0.0, 0.7, 3.0}) {
      CHECK(std::abs(s.f(x) - h.f(x)) < 1e-14);
      CHECK(std::abs(s.g(x) - h.g(x)) < 1e-14);
      CHECK(std::abs(s.h(x) - h.h(x)) < 1e-14);
    }
  }

  TEST_CASE("coefficient errors") {
    CHECK_THROWS_AS(coefficients(HarmonicOscillator{}, RepTag::Pi2, with_tau(0.1)), UnsupportedPair);
    CHECK_THROWS_AS(coefficients(PoschlTeller{1, 0.5}, RepTag::Pi1, with_tau(0)), IntrinsicNoncommutativity);
  }

  TEST_CASE("coefficient derivatives against central differences") {
    const double h = 1e-4;
    auto fd = [&](const std::function<cplx(double)>& f, double x) {
      return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12 * h);
    };
    for (const auto& m : kModels)
      for (RepTag r : {RepTag::Pi1, RepTag::Pi2, RepTag::Pi3, RepTag::Pi4, RepTag::Pi4Prime}) {
        auto p = with_tau(0.3);
        if (kind_of(m) == ModelKind::PT && r == RepTag::Pi4Prime) continue;
        FGHCoefficients c = derived_coefficients(m, r, p);
        Domain d = c.p_domain;
        double lo = d.lo_finite() ? d.lo : -3, hi = d.hi_finite() ? d.hi : 3;
        CAPTURE(model_name(m));
        CAPTURE(to_string(r));
        for (int k = 1; k < 8; ++k) {
          double x = lo + (hi - lo) * k / 8;
          auto rel = [](cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
          CHECK(rel(c.df(x), fd(c.f, x)) < 1e-6);
          CHECK(rel(c.ddf(x), fd(c.df, x)) < 1e-6);
          CHECK(rel(c.dg(x), fd(c.g, x)) < 1e-6);
        }
      }
  }

  TEST_CASE("position operators") {
    Grid g{-8, 8, 512};
    Samples psi = sample(g, gauss);
    // tau = 0: canonical i hbar d/dp
    Samples x1 = apply_X(RepTag::Pi1, with_tau(0), psi, g);
    Samples x3 = apply_X(RepTag::Pi3, with_tau(0.2), sample(Grid{-3, 3, 512}, gauss), Grid{-3, 3, 512});
    double worst = 0;
    for (int i = 0; i < g.n; ++i) worst = std::max(worst, std::abs(x1[i] - I * dgauss(g.at(i))));
    CHECK(worst < 1e-10);
    // X_3 = x up to the window of its finite domain
    Grid g3{-3, 3, 512};
    for (int i = 200; i < 312; ++i) CHECK(std::abs(x3[i] - I * dgauss(g3.at(i))) < 1e-8);
    // X_4 = -hbar d/dp [(1 + tc p^2)^{1/2} psi]
    Samples x4 = apply_X(RepTag::Pi4, with_tau(0.2), psi, g);
    for (double p0 : {-1.3, -0.4, 0.0, 0.9, 2.1}) {
      int i = int((p0 - g.lo) / g.step());
      double p = g.at(i), s = std::sqrt(1 + 0.2 * p * p);
      double ref = -(0.2 * p / s * gauss(p) + s * dgauss(p));
      CHECK(std::abs(x4[i] - ref) < 1e-9);
    }
  }

  TEST_CASE("momentum multipliers") {
    DeformationParams unit = with_tau(1);
    Grid g{-2, 2, 2};  // centres at -1 and 1
    Samples one(2, 1.0);
    Samples pp = apply_P(RepTag::Pi4Prime, unit, one, g);
    CHECK(pp[1].real() == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
    Grid g3{-std::numbers::pi / 2, std::numbers::pi, 2};  // centres at -pi/4 and 3pi/4 clipped
    Grid h3{-std::numbers::pi / 2, std::numbers::pi / 2, 4};  // centres at +-3pi/8, +-pi/8
    Samples p3 = apply_P(RepTag::Pi3, unit, Samples(4, 1.0), h3);
    CHECK(p3[2].real() == doctest::Approx(std::tan(std::numbers::pi / 8)).epsilon(1e-14));
    CHECK_THROWS_AS(apply_P(RepTag::Pi3, unit, one, g3), DomainMismatch);
    Samples p1 = apply_P(RepTag::Pi1, unit, one, g);
    CHECK(p1[0].real() == -1);
  }

  TEST_CASE("deformed commutator in the four representations") {
    for (RepTag r : {RepTag::Pi1, RepTag::Pi2, RepTag::Pi3, RepTag::Pi4}) {
      auto suite = test_function_suite(r, with_tau(0.3));
      CHECK(suite.size() >= 5);
      for (const auto& f : suite) {
        CAPTURE(to_string(r));
        CAPTURE(f.name);
        CHECK(commutator_residual(r, with_tau(0.3), f.samples, f.grid) < 1e-7);
      }
    }
    Grid g{-14, 14, 2048};
    CHECK(commutator_residual(RepTag::Pi1, with_tau(0), sample(g, gauss), g) < 1e-10);
    CHECK(commutator_residual(RepTag::Pi4, with_tau(0.3), sample(g, gauss), g) < 1e-8);
  }

  TEST_CASE("primed fourth representation flips the sign of the deformation") {
    Grid g{-14, 14, 2048};
    Samples psi = sample(g, gauss);
    auto p = with_tau(0.3);
    CHECK(commutator_residual(RepTag::Pi4Prime, p, psi, g, CommutatorReference::Plus) > 0.1);
    CHECK(commutator_residual(RepTag::Pi4Prime, p, psi, g, CommutatorReference::Minus) < 1e-8);
  }

  TEST_CASE("second representation is similar to the first") {
    auto p = with_tau(0.4);
    Grid g{-14, 14, 2048};
    Samples psi = sample(g, gauss), s(g.n), spsi(g.n);
    for (int i = 0; i < g.n; ++i) {
      s[i] = std::sqrt(1 + 0.4 * g.at(i) * g.at(i));
      spsi[i] = s[i] * psi[i];
    }
    Samples x2 = apply_X(RepTag::Pi2, p, psi, g), x1 = apply_X(RepTag::Pi1, p, spsi, g);
    for (int i = 0; i < g.n; ++i) x1[i] /= s[i];
    CHECK(max_abs_diff(x1, x2) < 1e-8);
    CHECK(max_abs_diff(apply_P(RepTag::Pi2, p, psi, g), apply_P(RepTag::Pi1, p, psi, g)) < 1e-15);
  }

  TEST_CASE("PT action") {
    auto p = with_tau(0.3);
    for (RepTag r : {RepTag::Pi1, RepTag::Pi2, RepTag::Pi3, RepTag::Pi4}) {
      auto f = test_function_suite(r, p)[3];
      Samples psi = f.samples;
      for (int i = 0; i < f.grid.n; ++i) psi[i] *= cplx(1, 0.3 * f.grid.at(i));
      Samples tpsi = pt_conjugate(psi);
      Samples xt = apply_X(r, p, tpsi, f.grid), tx = pt_conjugate(apply_X(r, p, psi, f.grid));
      Samples pt = apply_P(r, p, tpsi, f.grid), tp = pt_conjugate(apply_P(r, p, psi, f.grid));
      double xs = r == RepTag::Pi4 ? 1 : -1, ps = r == RepTag::Pi4 ? -1 : 1;
      for (auto& v : tx) v *= xs;
      for (auto& v : tp) v *= ps;
      CAPTURE(to_string(r));
      CHECK(max_abs_diff(xt, tx) < 1e-8);
      CHECK(max_abs_diff(pt, tp) < 1e-12);
    }
  }

  TEST_CASE("Hamiltonian terms") {
    auto p = with_tau(0.2);
    HamiltonianTerms h = hamiltonian_terms(HarmonicOscillator{}, p);
    CHECK(h.p2.real() == doctest::Approx(0.5));
    CHECK(h.x2.real() == doctest::Approx(0.5));
    CHECK(std::abs(h.sym) == 0);
    CHECK_THROWS_AS(check_model(PoschlTeller{1, 0.5}, with_tau(0)), IntrinsicNoncommutativity);
  }
}
