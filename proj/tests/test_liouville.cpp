#include <cmath>

#include "doctest.h"
#include "gupspec/closed_form.hpp"
#include "gupspec/errors.hpp"

using namespace gup;

namespace {

DeformationParams with_tau(double tau) {
  DeformationParams p;
  p.tau = tau;
  return p;
}

struct Case {
  ModelSpec model;
  double tau;
};

const Case kCases[] = {{HarmonicOscillator{}, 0.5}, {Swanson{0.1, 0.2}, 0.5}, {PoschlTeller{1, 0.5}, 0.25}};
const RepTag kReps[] = {RepTag::Pi1, RepTag::Pi2, RepTag::Pi3, RepTag::Pi4};

std::vector<double> interior(const Domain& d, int n, double reach) {
  double lo = d.lo_finite() ? d.lo : -reach, hi = d.hi_finite() ? d.hi : reach;
  std::vector<double> x;
  for (int k = 1; k <= n; ++k) x.push_back(lo + (hi - lo) * (k - 0.5) / n);
  return x;
}

}  // namespace

TEST_SUITE("liouville") {
  TEST_CASE("oscillator in the first representation is a tangent-squared well") {
    auto p = with_tau(0.2);
    TransformResult tr = to_potential(coefficients(HarmonicOscillator{}, RepTag::Pi1, p), 0);
    for (double x : {-4.0, -0.5, 0.0, 1.0, 7.0}) {
      CHECK(tr.q_of_p(x) == doctest::Approx(std::sqrt(10.0) * std::atan(std::sqrt(0.2) * x)).epsilon(1e-12));
      CHECK(std::abs(tr.chi(x)) < 1e-12);
    }
    for (double q : {-3.0, 0.0, 2.0, 4.5}) {
      double ref = 2.5 * std::pow(std::tan(std::sqrt(0.1) * q), 2);
      CHECK(tr.V(q) == doctest::Approx(ref).epsilon(1e-10).scale(1));
    }
  }

  TEST_CASE("weak deformation approaches the harmonic well") {
    TransformResult tr = to_potential(coefficients(HarmonicOscillator{}, RepTag::Pi1, with_tau(1e-6)), 0);
    for (double q : {0.5, 1.0, 2.0, 3.0}) CHECK(tr.V(q) == doctest::Approx(q * q / 4).epsilon(1e-5));
  }

  TEST_CASE("Swanson in the third representation maps linearly") {
    const double a = 0.1, b = 0.2, Omega = a + b + 1;
    TransformResult tr = to_potential(coefficients(Swanson{a, b}, RepTag::Pi3, with_tau(0.5)), 0);
    for (double x : {-1.0, 0.3, 1.2}) CHECK(tr.q_of_p(x) == doctest::Approx(std::sqrt(2 / Omega) * x).epsilon(1e-12));
  }

  TEST_CASE("coordinate maps round-trip") {
    for (const auto& c : kCases)
      for (RepTag r : kReps) {
        auto p = with_tau(c.tau);
        ClosedFormSolution sol = solve(c.model, r, p);
        TransformResult tr = to_potential(derived_coefficients(c.model, r, p), sol.p0);
        for (double x : interior(tr.p_domain(), 40, 20)) {
          CAPTURE(x);
          CHECK(std::abs(tr.p_of_q(tr.q_of_p(x)) - x) < 1e-10 * std::max(1.0, std::abs(x)));
        }
      }
  }

  TEST_CASE("the potential is real on the physical representations") {
    for (const auto& c : kCases)
      for (RepTag r : kReps) {
        auto p = with_tau(c.tau);
        ClosedFormSolution sol = solve(c.model, r, p);
        TransformResult tr = to_potential(derived_coefficients(c.model, r, p), sol.p0);
        for (double q : interior(tr.q_domain(), 30, 5)) {
          cplx v = tr.V_complex(q);
          CHECK(std::abs(v.imag()) < 1e-10 * std::max(1.0, std::abs(v)));
        }
      }
  }

  TEST_CASE("factorization ansatz satisfies the chart relation") {
    for (const auto& c : kCases)
      for (RepTag r : kReps) {
        ClosedFormSolution sol = solve(c.model, r, with_tau(c.tau));
        TransformResult tr = to_potential(derived_coefficients(c.model, r, with_tau(c.tau)), sol.p0);
        FactorizationAnsatz an = sol.ansatz(1);
        for (double q : interior(tr.q_domain(), 25, 5)) {
          UnitPoint u = an.w_point(q);
          double d = an.dw(q, 1);
          CHECK(d * d / u.one_minus_sq() == doctest::Approx(an.c).epsilon(1e-9));
        }
      }
  }

  TEST_CASE("master identity holds for the closed-form solutions") {
    for (const auto& c : kCases)
      for (RepTag r : kReps) {
        auto p = with_tau(c.tau);
        ClosedFormSolution sol = solve(c.model, r, p);
        TransformResult tr = to_potential(derived_coefficients(c.model, r, p), sol.p0);
        const Domain& qd = tr.q_domain();
        std::vector<double> q;
        for (int k = 1; k < 200; ++k) q.push_back(qd.lo + (qd.hi - qd.lo) * k / 200.0);
        for (int n = 0; n <= 5; ++n) {
          CAPTURE(model_name(c.model));
          CAPTURE(to_string(r));
          CAPTURE(n);
          CHECK(master_residual(sol.ansatz(n), tr, sol.energy(n), q) < 1e-8);
        }
      }
  }

  TEST_CASE("master identity detects a shifted energy") {
    auto p = with_tau(0.3);
    ClosedFormSolution sol = solve(HarmonicOscillator{}, RepTag::Pi1, p);
    TransformResult tr = to_potential(coefficients(HarmonicOscillator{}, RepTag::Pi1, p), 0);
    std::vector<double> q = interior(tr.q_domain(), 99, 5);
    CHECK(master_residual(sol.ansatz(0), tr, sol.energy(0), q) < 1e-9);
    CHECK(master_residual(sol.ansatz(0), tr, sol.energy(0) + 0.1, q) == doctest::Approx(0.1).epsilon(1e-8));
  }

  TEST_CASE("Legendre prefactor is the square root of the cosine") {
    auto p = with_tau(0.4);
    ClosedFormSolution sol = solve(HarmonicOscillator{}, RepTag::Pi1, p);
    TransformResult tr = to_potential(coefficients(HarmonicOscillator{}, RepTag::Pi1, p), 0);
    FactorizationAnsatz an = sol.ansatz(2);
    auto v = v_from_Qw(an, tr.q_domain());
    double r0 = 0;
    for (double q : interior(tr.q_domain(), 40, 5)) {
      // w = sin(sqrt(c) q + phase), so sqrt(1 - w^2) is the cosine
      double r = v(q) / std::sqrt(std::sqrt(an.w_point(q).one_minus_sq()));
      if (r0 == 0) r0 = r;
      CHECK(r == doctest::Approx(r0).epsilon(1e-10));
    }
  }

  TEST_CASE("assembled wavefunction matches the closed form up to a constant") {
    for (const auto& c : kCases)
      for (RepTag r : kReps) {
        auto p = with_tau(c.tau);
        ClosedFormSolution sol = solve(c.model, r, p);
        TransformResult tr = to_potential(derived_coefficients(c.model, r, p), sol.p0);
        for (int n : {0, 3}) {
          FactorizationAnsatz an = sol.ansatz(n);
          auto v = v_from_Qw(an, tr.q_domain());
          cplx r0 = 0;
          for (double x : interior(sol.domain, 50, 4 / std::sqrt(p.tau_check()))) {
            double q = tr.q_of_p(x);
            cplx g = std::exp(tr.chi(x)) * v(q) * an.F(an.w(q));
            cplx ref = sol.psi(n, x);
            if (std::abs(ref) < 1e-12) continue;
            if (r0 == 0.0) r0 = g / ref;
            CAPTURE(model_name(c.model));
            CAPTURE(to_string(r));
            CHECK(std::abs(g / ref / r0 - 1.0) < 1e-8);
          }
        }
      }
  }

  TEST_CASE("reference point outside the domain") {
    auto p = with_tau(0.25);
    CHECK_THROWS_AS(to_potential(coefficients(PoschlTeller{1, 0.5}, RepTag::Pi1, p), -1.0), DomainError);
  }
}
