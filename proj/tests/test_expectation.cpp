#include <cmath>

#include "doctest.h"
#include "gupspec/errors.hpp"
#include "gupspec/expectation.hpp"

using namespace gup;

namespace {

DeformationParams with_tau(double tau) {
  DeformationParams p;
  p.tau = tau;
  return p;
}

}  // namespace

TEST_SUITE("expectation") {
  TEST_CASE("energy and momentum of the oscillator") {
    auto p = with_tau(0.2);
    ClosedFormSolution s = solve(HarmonicOscillator{}, RepTag::Pi1, p);
    for (int n = 0; n < 5; ++n) {
      CHECK(std::abs(expectation_unified(HarmonicOscillator{}, p, n, "H") - s.energy(n)) < 1e-8);
      CHECK(std::abs(expectation_unified(HarmonicOscillator{}, p, n, "P")) < 1e-10);
      CHECK(std::abs(expectation_unified(HarmonicOscillator{}, p, n, "1") - 1.0) < 1e-10);
    }
  }

  TEST_CASE("kinetic and potential parts add up to the energy") {
    auto p = with_tau(0.2);
    cplx x2 = expectation_unified(HarmonicOscillator{}, p, 0, "X^2");
    cplx p2 = expectation_unified(HarmonicOscillator{}, p, 0, "P^2");
    cplx E = solve(HarmonicOscillator{}, RepTag::Pi1, p).energy(0);
    CHECK(std::abs(p2 / 2.0 + x2 / 2.0 - E) < 1e-10);
    CHECK(std::abs(p2 - 2.0 * (E - 0.5 * x2)) < 1e-10);
  }

  TEST_CASE("direct quadrature agrees with the unified integral") {
    auto p = with_tau(0.3);
    for (const ModelSpec& m : {ModelSpec{HarmonicOscillator{}}, ModelSpec{Swanson{0.1, 0.2}}}) {
      ClosedFormSolution base = solve(m, RepTag::Pi1, p);
      for (RepTag r : {RepTag::Pi1, RepTag::Pi2, RepTag::Pi3, RepTag::Pi4}) {
        ClosedFormSolution s = solve(m, r, p);
        for (const char* w : {"X^2", "P^2", "XP+PX", "X^2*P^2"}) {
          OperatorWord word = parse_word(w, hamiltonian_terms(m, p));
          CAPTURE(w);
          CHECK(std::abs(matrix_element_direct(s, 1, word, 1) - matrix_element_unified(base, 1, word, 1)) < 1e-7);
        }
      }
    }
  }

  TEST_CASE("off-diagonal elements vanish by orthogonality") {
    auto p = with_tau(0.4);
    ClosedFormSolution s = solve(PoschlTeller{1, 0.5}, RepTag::Pi1, p);
    OperatorWord one = parse_word("1");
    CHECK(std::abs(matrix_element_unified(s, 0, one, 2)) < 1e-10);
    OperatorWord h = parse_word("H", hamiltonian_terms(PoschlTeller{1, 0.5}, p));
    CHECK(std::abs(matrix_element_unified(s, 1, h, 3)) < 1e-8);
  }

  TEST_CASE("inverse momentum powers") {
    auto p = with_tau(0.3);
    CHECK_THROWS_AS(expectation_unified(HarmonicOscillator{}, p, 0, "P^-2"), NonIntegrable);
    cplx v = expectation_unified(PoschlTeller{1, 0.5}, p, 0, "P^-2");
    CHECK(v.real() > 0);
    CHECK(std::abs(v.imag()) < 1e-10);
  }

  TEST_CASE("word parser") {
    HamiltonianTerms H = hamiltonian_terms(HarmonicOscillator{}, with_tau(0.1));
    CHECK(parse_word("XP+PX").terms.size() == 2);
    CHECK(parse_word("X^2").terms.at(0).length() == 2);
    CHECK(parse_word("2*X^2 - H", H).x_count() == 2);
    CHECK(parse_word("(X+P)*P").terms.size() == 2);
    CHECK_THROWS_AS(parse_word("X^-1"), ParameterError);
    CHECK_THROWS_AS(parse_word("X^5"), ParameterError);
    CHECK_THROWS_AS(parse_word("XPXPX"), ParameterError);
    CHECK_THROWS_AS(parse_word("X+"), ParameterError);
    CHECK_THROWS_AS(parse_word("Q"), ParameterError);
    CHECK_THROWS(parse_word("H"));
  }

  TEST_CASE("minimal length for the oscillator") {
    for (double tau : {0.1, 0.5})
      for (int n = 0; n < 5; ++n) {
        UncertaintyReport u = uncertainty(HarmonicOscillator{}, with_tau(tau), n);
        CHECK(u.holds);
        CHECK(u.dx >= std::sqrt(tau));
        CHECK(u.min_dx == doctest::Approx(std::sqrt(tau)).epsilon(1e-14));
      }
  }
}
