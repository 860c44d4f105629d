// One line per acceptance criterion; exit status 1 when any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gupspec/algebra.hpp"
#include "gupspec/closed_form.hpp"
#include "gupspec/errors.hpp"
#include "gupspec/expectation.hpp"
#include "gupspec/liouville.hpp"
#include "gupspec/oracle.hpp"
#include "gupspec/phase.hpp"

using namespace gup;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

DeformationParams with_tau(double tau) {
  DeformationParams p;
  p.tau = tau;
  return p;
}

const RepTag kReps[] = {RepTag::Pi1, RepTag::Pi2, RepTag::Pi3, RepTag::Pi4};

struct Case {
  ModelSpec model;
  double tau;
};

const std::vector<Case>& solvable_cases() {
  static const std::vector<Case> cases = {
      {HarmonicOscillator{}, 0.1}, {HarmonicOscillator{}, 0.5}, {HarmonicOscillator{}, 1.0},
      {Swanson{0.1, 0.2}, 0.1},    {Swanson{0.1, 0.2}, 0.5},    {Swanson{15, 0.1}, 0.5},
      {PoschlTeller{1, 0.5}, 0.25}, {PoschlTeller{0.3, 2}, 0.7}};
  return cases;
}

std::string describe(const Case& c, RepTag r) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s/%s tau=%g", model_name(c.model).c_str(), to_string(r).c_str(), c.tau);
  return buf;
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// collects the worst value of a quantity and where it occurred
struct Worst {
  double value = 0;
  std::string where;
  void see(double v, const std::string& w) {
    if (!(v <= value)) {
      value = std::isnan(v) ? INFINITY : v;
      where = w;
    }
  }
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome c1_oscillator_oracle() {
  auto t0 = Clock::now();
  Worst w;
  for (double tau : {0.1, 0.5, 1.0}) {
    SpectrumReport r = verify_spectrum(HarmonicOscillator{}, RepTag::Pi1, with_tau(tau), 6, 2048);
    if (r.oracle.grid_sizes != std::vector<int>{2048, 4096, 8192}) return {false, "unexpected grid ladder"};
    w.see(r.max_rel_err, fmt("tau=%g", tau));
  }
  double secs = seconds_since(t0);
  return {w.value < 1e-5 && secs < 10, fmt("max rel err %.2e (tol 1e-5), %.2f s (limit 10 s)", w.value, secs)};
}

Outcome c2_commutative_limits() {
  double ho = 0, sw = 0;
  for (RepTag r : kReps) {
    ClosedFormSolution s = solve(HarmonicOscillator{}, r, with_tau(0));
    for (int n = 0; n <= 5; ++n) ho = std::max(ho, std::abs(s.energy(n) - (n + 0.5)));
  }
  ClosedFormSolution s = solve(Swanson{0.1, 0.2}, RepTag::Pi1, with_tau(1e-8));
  for (int n = 0; n <= 5; ++n) sw = std::max(sw, std::abs(s.energy(n) - (n + 0.5) * std::sqrt(1 - 4 * 0.1 * 0.2)));
  return {ho < 1e-10 && sw < 1e-6, fmt("oscillator %.1e (tol 1e-10), Swanson %.1e (tol 1e-6)", ho, sw)};
}

Outcome c3_swanson_claims() {
  struct Claim {
    double a, b, tau;
    bool complex;
  };
  const Claim claims[] = {{2, 0.1, 0, false}, {2, 0.1, 0.5, true}, {15, 0.1, 0, true}, {15, 0.1, 0.5, false}};
  int wrong = 0;
  for (const auto& c : claims)
    wrong += classify_physical(Swanson{c.a, c.b}, RepTag::Pi1, with_tau(c.tau)).complex_spectrum != c.complex;
  cplx E0 = solve(Swanson{15, 0.1}, RepTag::Pi1, with_tau(0.5)).energy(0);
  double formula = std::abs(E0 - 2.9);
  SpectrumReport r = verify_spectrum(Swanson{15, 0.1}, RepTag::Pi1, with_tau(0.5), 1);
  double oracle = std::abs(r.rows[0].oracle - 2.9) / 2.9;
  return {wrong == 0 && formula < 1e-10 && oracle < 1e-4,
          fmt("%g misclassified, |E0 - 2.9| = %.1e, oracle rel %.1e", wrong, formula, oracle)};
}

Outcome c4_poschl_teller() {
  const double tau = 0.25;
  double E0 = solve(PoschlTeller{1, 0.5}, RepTag::Pi1, with_tau(tau)).energy(0).real();
  double closed = std::abs(E0 - 4.4012985);
  SpectrumReport r = verify_spectrum(PoschlTeller{1, 0.5}, RepTag::Pi1, with_tau(tau), 1);
  double oracle = r.rows[0].rel_err;
  auto complex_at = [&](double a, double b) {
    return classify_physical(PoschlTeller{a, b}, RepTag::Pi1, with_tau(tau)).complex_spectrum;
  };
  const double ac = -tau / 4, bc = -tau * tau / 4, d = 1e-6;
  bool flips = !complex_at(ac + d, 0.5) && complex_at(ac - d, 0.5) && !complex_at(1, bc + d) && complex_at(1, bc - d);
  // the reference carries 8 significant digits
  return {closed <= 1e-7 && oracle < 1e-4 && flips,
          fmt("E0 = %.9f, oracle rel %.1e, boundary flips ", E0, oracle) + (flips ? "yes" : "no")};
}

Outcome c5_commutators() {
  Worst w;
  int functions = 0;
  for (double tau : {0.1, 0.5})
    for (RepTag r : kReps) {
      auto suite = test_function_suite(r, with_tau(tau));
      functions = std::max<int>(functions, suite.size());
      for (const auto& f : suite)
        w.see(commutator_residual(r, with_tau(tau), f.samples, f.grid), to_string(r) + " " + f.name);
    }
  double minus = 0, plus = INFINITY;
  for (const auto& f : test_function_suite(RepTag::Pi4Prime, with_tau(0.5))) {
    minus = std::max(minus, commutator_residual(RepTag::Pi4Prime, with_tau(0.5), f.samples, f.grid,
                                                CommutatorReference::Minus));
    plus = std::min(plus, commutator_residual(RepTag::Pi4Prime, with_tau(0.5), f.samples, f.grid,
                                              CommutatorReference::Plus));
  }
  return {functions >= 5 && w.value < 1e-7 && minus < 1e-7 && plus > 0.1,
          fmt("worst %.1e over 5 functions, primed minus-sign %.1e, plus-sign min %.3f", w.value, minus, plus)};
}

Outcome c6_metrics() {
  Worst ratio, gram;
  int compared = 0;
  for (const auto& c : solvable_cases())
    for (RepTag r : kReps) {
      auto p = with_tau(c.tau);
      ClosedFormSolution s = solve(c.model, r, p);
      if (r != RepTag::Pi2) {
        auto generic = metric_generic(c.model, r, p);
        const double reach = 3 / std::sqrt(p.tau_check());
        double lo = s.domain.lo_finite() ? s.domain.lo : -reach, hi = s.domain.hi_finite() ? s.domain.hi : reach;
        double r0 = 0, spread = 0;
        for (int k = 1; k <= 100; ++k) {
          double x = lo + (hi - lo) * (k - 0.5) / 100;
          double q = generic(x) / s.metric(x);
          if (k == 1) r0 = q;
          spread = std::max(spread, std::abs(q / r0 - 1));
        }
        ratio.see(spread, describe(c, r));
        ++compared;
      }
      for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j)
          gram.see(std::abs(s.inner_product(i, j) - (i == j ? 1.0 : 0.0)), describe(c, r));
    }
  return {ratio.value < 1e-8 && gram.value < 1e-8,
          fmt("metric ratio spread %.1e over %g (model, rep, tau) cases, Gram deviation %.1e", ratio.value,
              compared, gram.value) +
              " (worst at " + gram.where + ")"};
}

Outcome c7_representation_independence() {
  const char* words[] = {"P", "P^2", "X", "X^2", "H"};
  Worst dev, energy, momentum;
  for (const auto& c : solvable_cases()) {
    auto p = with_tau(c.tau);
    ClosedFormSolution base = solve(c.model, RepTag::Pi1, p);
    std::vector<ClosedFormSolution> sols;
    for (RepTag r : kReps) sols.push_back(solve(c.model, r, p));
    const HamiltonianTerms H = hamiltonian_terms(c.model, p);
    for (int n = 0; n <= 3; ++n)
      for (const char* w : words) {
        OperatorWord word = parse_word(w, H);
        std::vector<cplx> v{matrix_element_unified(base, n, word, n)};
        for (const auto& s : sols) v.push_back(matrix_element_direct(s, n, word, n));
        for (size_t i = 0; i < v.size(); ++i)
          for (size_t j = i + 1; j < v.size(); ++j) dev.see(std::abs(v[i] - v[j]), describe(c, RepTag::Pi1) + " " + w);
        if (std::string(w) == "H") energy.see(std::abs(v[0] - base.energy(n)), describe(c, RepTag::Pi1));
        if (std::string(w) == "P" && kind_of(c.model) != ModelKind::PT)
          momentum.see(std::abs(v[0]), describe(c, RepTag::Pi1));
      }
  }
  return {dev.value < 1e-6 && energy.value < 1e-8 && momentum.value < 1e-10,
          fmt("pairwise %.1e, <H>-E %.1e, <P> %.1e", dev.value, energy.value, momentum.value)};
}

Outcome c8_master_residual() {
  Worst w;
  for (const auto& c : solvable_cases())
    for (RepTag r : kReps) {
      auto p = with_tau(c.tau);
      ClosedFormSolution s = solve(c.model, r, p);
      TransformResult tr = to_potential(derived_coefficients(c.model, r, p), s.p0);
      const Domain& qd = tr.q_domain();
      std::vector<double> q;
      for (int k = 1; k < 200; ++k) q.push_back(qd.lo + (qd.hi - qd.lo) * k / 200.0);
      for (int n = 0; n <= 5; ++n) w.see(master_residual(s.ansatz(n), tr, s.energy(n), q), describe(c, r));
    }
  return {w.value < 1e-8, fmt("worst %.1e (tol 1e-8)", w.value) + " at " + w.where};
}

Outcome c9_minimal_length() {
  std::string failures;
  int checked = 0;
  double worst = INFINITY;
  const ModelSpec models[] = {HarmonicOscillator{}, Swanson{0.1, 0.2}, Swanson{0.15, 0.15}};
  for (const auto& m : models)
    for (double tau : {0.1, 0.5}) {
      auto p = with_tau(tau);
      if (classify_physical(m, RepTag::Pi1, p).complex_spectrum) continue;
      for (int n = 0; n <= 4; ++n) {
        UncertaintyReport u = uncertainty(m, p, n);
        ++checked;
        double margin = std::min(u.dx / u.min_dx, u.dx * u.dp / u.product_bound) - 1;
        worst = std::min(worst, margin);
        if (!u.holds && failures.size() < 200)
          failures += " [" + model_name(m) + fmt(" tau=%g n=%g: dx dp = %.6f", tau, n, u.dx * u.dp) +
                      fmt(" < %.6f]", u.product_bound);
      }
    }
  return {failures.empty(), fmt("%g states, worst relative margin %.2e", checked, worst) + failures};
}

Outcome c10_phase_scan() {
  PhaseQuery q;
  q.alpha_lo = 0.5;
  q.alpha_hi = 16;
  q.alpha_step = (16 - 0.5) / 299;
  q.taus = {0, 0.5, 1};
  auto t0 = Clock::now();
  auto curves = scan(q);
  double secs = seconds_since(t0);
  double hyper = 0, resid = 0;
  size_t points = 0;
  for (const auto& c : curves)
    for (const auto& pt : c.points) {
      ++points;
      resid = std::max(resid, std::abs(discriminant(pt.alpha, pt.beta, c.tau, q.params)));
      if (c.tau == 0) hyper = std::max(hyper, std::abs(pt.alpha * pt.beta - 0.25));
    }
  bool complete = curves.size() == 3 && curves[0].points.size() >= 300;
  return {complete && hyper < 1e-10 && resid < 1e-9 && secs < 2,
          fmt("|alpha beta - 1/4| %.1e, max |D| %.1e, ", hyper, resid) +
              fmt("%g points in %.3f s", double(points), secs)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"oscillator spectrum vs finite-difference oracle", c1_oscillator_oracle},
      {"commutative limits", c2_commutative_limits},
      {"Swanson point claims", c3_swanson_claims},
      {"Poschl-Teller ground state and reality boundary", c4_poschl_teller},
      {"commutator suite", c5_commutators},
      {"metrics and orthonormality", c6_metrics},
      {"representation independence", c7_representation_independence},
      {"master identity residual", c8_master_residual},
      {"minimal length", c9_minimal_length},
      {"phase scan", c10_phase_scan}};
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
