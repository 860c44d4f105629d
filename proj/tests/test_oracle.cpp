#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gupspec/errors.hpp"
#include "gupspec/oracle.hpp"

using namespace gup;

TEST_SUITE("oracle") {
  TEST_CASE("particle in a box") {
    EigenProblem p;
    p.V = [](double) { return 0.0; };
    p.q_domain = {0, std::numbers::pi};
    p.singular_endpoints = false;
    p.grid_size = 512;
    SpectrumResult r = fd_eigenvalues(p, 6);
    for (int n = 0; n < 6; ++n) CHECK(r.eigenvalues[n] == doctest::Approx((n + 1) * (n + 1)).epsilon(1e-6));
    CHECK(r.extrapolated);
    CHECK(r.lo_end == "dirichlet");
    for (double order : r.observed_order) CHECK(order > 1.9);
  }

  TEST_CASE("oscillator on the line") {
    EigenProblem p;
    p.V = [](double q) { return q * q / 4 - 0.5; };
    p.q_domain = {};
    SpectrumResult r = fd_eigenvalues(p, 5);
    for (int n = 0; n < 5; ++n) CHECK(r.eigenvalues[n] == doctest::Approx(n).epsilon(1e-5));
    CHECK(r.eigenvalues[0] == doctest::Approx(0).epsilon(1e-5));
    CHECK(r.lo_end == "box");
    CHECK(r.box.lo < -10);
    CHECK(r.box.hi > 10);
  }

  TEST_CASE("inverse-square walls") {
    // V = g / sin^2 q with g = lambda (lambda - 1) has E_n = (n + lambda)^2
    const double lam = 2.5, g = lam * (lam - 1);
    EigenProblem p;
    p.V = [g](double q) { return g / (std::sin(q) * std::sin(q)); };
    p.q_domain = {0, std::numbers::pi};
    SpectrumResult r = fd_eigenvalues(p, 4);
    for (int n = 0; n < 4; ++n) CHECK(r.eigenvalues[n] == doctest::Approx((n + lam) * (n + lam)).epsilon(1e-8));
    CHECK(r.lo_end.rfind("weighted", 0) == 0);
  }

  TEST_CASE("closed form against the oracle") {
    DeformationParams p;
    p.tau = 0.5;
    SpectrumReport rep = verify_spectrum(HarmonicOscillator{}, RepTag::Pi1, p, 4);
    CHECK(rep.max_rel_err < 1e-5);
    CHECK(rep.rows.size() == 4);
    for (const auto& row : rep.rows) CHECK(row.error_estimate < 1e-6 * std::abs(row.closed));
    p.tau = 0.25;
    SpectrumReport pt = verify_spectrum(PoschlTeller{1, 0.5}, RepTag::Pi3, p, 3);
    CHECK(pt.max_rel_err < 1e-5);
  }

  TEST_CASE("representations share one oracle spectrum") {
    DeformationParams p;
    p.tau = 0.5;
    double e0 = verify_spectrum(Swanson{0.1, 0.2}, RepTag::Pi1, p, 2).rows[1].oracle;
    for (RepTag r : {RepTag::Pi2, RepTag::Pi3, RepTag::Pi4})
      CHECK(verify_spectrum(Swanson{0.1, 0.2}, r, p, 2).rows[1].oracle == doctest::Approx(e0).epsilon(1e-7));
  }

  TEST_CASE("rejections") {
    EigenProblem p;
    p.V = [](double q) { return q * q; };
    p.q_domain = {-5, 5};
    CHECK_THROWS_AS(fd_eigenvalues(p, 0), ParameterError);
    CHECK_THROWS_AS(fd_eigenvalues(p, 300), ParameterError);
    p.grid_size = 32;
    CHECK_THROWS_AS(fd_eigenvalues(p, 1), ParameterError);

    EigenProblem free;
    free.V = [](double) { return 0.0; };
    CHECK_THROWS_AS(fd_eigenvalues(free, 1), ConvergenceFailure);

    EigenProblem fall;
    fall.V = [](double q) { return -1 / (q * q); };
    fall.q_domain = {0, 1};
    CHECK_THROWS_AS(fd_eigenvalues(fall, 1), ConvergenceFailure);

    DeformationParams d;
    d.tau = 0.3;
    CHECK_THROWS_AS(verify_spectrum(HarmonicOscillator{}, RepTag::Pi4Prime, d, 2), UnsupportedPair);
    d.tau = 0.5;
    CHECK_THROWS_AS(verify_spectrum(Swanson{2, 0.1}, RepTag::Pi1, d, 2), ParameterError);
  }
}
