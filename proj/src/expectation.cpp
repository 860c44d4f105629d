#include "gupspec/expectation.hpp"

#include <cmath>
#include <functional>

#include "gupspec/errors.hpp"

namespace gup {

namespace {

const cplx I(0, 1);

void require_states(const ClosedFormSolution& sol) {
  if (!sol.has_states()) throw ParameterError("expectation values need normalizable states (real spectrum, tau > 0)");
  if (sol.branch != Branch::Minus) throw ParameterError("expectation values use the normalizable branch");
}

// X -> i hbar d (d/dw + g1), P -> pw, all as jets in w
struct WFrame {
  Jet d, g1, pw;
};

WFrame w_frame(const ClosedFormSolution& sol, const UnitPoint& u, int order) {
  const double t = std::sqrt(sol.params.tau_check());
  Jet w = Jet::variable(u.x, order);
  Jet om = (1.0 - w).with_value(u.one_minus), op = (1.0 + w).with_value(u.one_plus);
  Jet root = sqrt(om * op);
  WFrame f;
  if (sol.family == AnsatzFamily::AssociatedLegendre) {
    double e = sol.kappa + 0.25;
    f.d = t * root;
    f.g1 = -2.0 * e * w / (om * op);
    f.pw = w / (t * root);
  } else {
    double ea = sol.a() / 2 + 0.25, eb = sol.b() / 2 + 0.25;
    f.d = -2.0 * t * root;
    f.g1 = -ea / om + eb / op;
    f.pw = sqrt(om / op) / t;
  }
  return f;
}

Jet ipow(const Jet& x, int k) {
  if (k < 0) return 1.0 / ipow(x, -k);
  Jet r(1.0, x.order());
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

Jet apply_term_w(const WordTerm& term, const WFrame& f, Jet J, double hbar) {
  for (auto it = term.factors.rbegin(); it != term.factors.rend(); ++it) {
    if (it->symbol == 'X') {
      for (int k = 0; k < it->power; ++k) J = I * hbar * f.d * (J.derivative() + f.g1 * J);
    } else {
      J = J * ipow(f.pw, it->power);
    }
  }
  return J;
}

Jet apply_term_native(const WordTerm& term, const OperatorJets& o, Jet J, double hbar) {
  for (auto it = term.factors.rbegin(); it != term.factors.rend(); ++it) {
    if (it->symbol == 'X') {
      for (int k = 0; k < it->power; ++k) J = I * hbar * (o.A * J.derivative() + o.B * J);
    } else {
      J = J * ipow(o.M, it->power);
    }
  }
  return J;
}

}  // namespace

std::pair<double, double> endpoint_exponents(const ClosedFormSolution& sol, const WordTerm& term) {
  double em, ep;
  if (sol.family == AnsatzFamily::AssociatedLegendre) {
    em = ep = sol.lambda();
    for (const auto& f : term.factors) {
      if (f.symbol == 'P' && f.power < 0)
        throw NonIntegrable("negative powers of P are singular at p = 0 for this model");
      em -= 0.5 * f.power;
      ep -= 0.5 * f.power;
    }
  } else {
    em = sol.a();
    ep = sol.b();
    for (const auto& f : term.factors) {
      if (f.symbol == 'X') {
        em -= 0.5 * f.power;
        ep -= 0.5 * f.power;
      } else {
        em += 0.5 * f.power;
        ep -= 0.5 * f.power;
      }
    }
  }
  if (em <= -1 || ep <= -1) throw NonIntegrable("operator word is not integrable against these states");
  return {em, ep};
}

cplx matrix_element_unified(const ClosedFormSolution& sol, int m, const OperatorWord& word, int n) {
  require_states(sol);
  const double hbar = sol.params.hbar;
  const double scale = 1 / std::sqrt(sol.norm(m) * sol.norm(n));
  cplx total = 0;
  for (const auto& term : word.terms) {
    auto [em, ep] = endpoint_exponents(sol, term);
    const int k = term.x_count();
    const int nodes = std::max(m, n) + 2 * term.length() + 8;
    Quadrature q = gauss_jacobi_nodes(nodes, em, ep);
    cplx s = 0;
    for (size_t i = 0; i < q.nodes.size(); ++i) {
      double z = q.nodes[i];
      UnitPoint u = UnitPoint::at(z);
      WFrame f = w_frame(sol, u, k);
      Jet J = apply_term_w(term, f, sol.F_jet(n, u, k), hbar);
      double Fm = sol.F(m, u);
      double rho = 1;
      if (sol.family == AnsatzFamily::Jacobi) rho = std::pow(u.one_minus, sol.a()) * std::pow(u.one_plus, sol.b());
      s += q.weights[i] * rho * Fm * J.value() / (std::pow(u.one_minus, em) * std::pow(u.one_plus, ep));
    }
    total += term.coeff * s;
  }
  return total * scale;
}

cplx expectation_unified(const ModelSpec& model, const DeformationParams& params, int n, const OperatorWord& word) {
  return matrix_element_unified(solve(model, RepTag::Pi1, params), n, word, n);
}

cplx expectation_unified(const ModelSpec& model, const DeformationParams& params, int n, const std::string& word) {
  return expectation_unified(model, params, n, parse_word(word, hamiltonian_terms(model, params)));
}

namespace {

// c d^e near a finite end. With 1 -+ w ~ d^k the exponent follows from the
// w-exponent of the leading term; only c is fitted, at the cut.
struct EndLaw {
  cplx c = 0;
  double e = 0;
  cplx operator()(double d) const { return c == 0.0 ? cplx(0) : c * std::pow(d, e); }
};

EndLaw fit_end(const std::function<cplx(const NativePoint&)>& f, const ClosedFormSolution& sol,
               const OperatorWord& word, bool lower, double cut) {
  const Domain& dom = sol.domain;
  auto point = [&](double d) {
    double xi = lower ? dom.lo + d : dom.hi - d, L = dom.hi - dom.lo;
    return lower ? NativePoint{xi, d, L - d} : NativePoint{xi, L - d, d};
  };
  UnitPoint u1 = sol.chart(point(100 * cut), 0).u, u0 = sol.chart(point(cut), 0).u;
  const bool minus_end = u0.one_minus < u0.one_plus;
  double r = minus_end ? u1.one_minus / u0.one_minus : u1.one_plus / u0.one_plus;
  const int k = int(std::lround(std::log(r) / std::log(100.0)));
  double ew = inf;
  for (const auto& term : word.terms) {
    auto [em, ep] = endpoint_exponents(sol, term);
    ew = std::min(ew, minus_end ? em : ep);
  }
  EndLaw law;
  law.e = k * (ew + 1) - 1;
  law.c = f(point(cut)) / std::pow(cut, law.e);
  return law;
}

}  // namespace

cplx matrix_element_direct(const ClosedFormSolution& sol, int m, const OperatorWord& word, int n) {
  require_states(sol);
  for (const auto& term : word.terms) endpoint_exponents(sol, term);
  const int k = word.x_count();
  const double hbar = sol.params.hbar;
  const double Nm = sol.norm(m), Nn = sol.norm(n);
  const double edge_scale = 1 / std::sqrt(sol.params.tau_check());
  const double cut = 1e-9 * edge_scale;
  auto value = [&](const NativePoint& pt) -> cplx {
    auto cp = sol.chart(pt, k);
    // G is factored out of both states as |G| sqrt(rho) on each side
    double pm = cp.gs * sol.F(m, cp.u);
    if (pm == 0.0) return 0;
    Jet psi = cp.Gn * compose(sol.F_jet(n, cp.u, k), cp.w);
    OperatorJets o = operator_jets(sol.rep, sol.params, pt, k);
    cplx acc = 0;
    for (const auto& term : word.terms) acc += term.coeff * apply_term_native(term, o, psi, hbar).value();
    cplx v = pm * sol.metric_constant * cp.gs * acc;
    if (std::isfinite(v.real()) && std::isfinite(v.imag())) return v;
    // Taylor coefficients overflow only where the state has underflowed
    if (std::abs(pm) < 1e-100) return 0;
    throw ConvergenceFailure("non-finite integrand at xi = " + std::to_string(pt.xi));
  };
  EndLaw lo_law, hi_law;
  if (sol.domain.lo_finite()) lo_law = fit_end(value, sol, word, true, cut);
  if (sol.domain.hi_finite()) hi_law = fit_end(value, sol, word, false, cut);
  auto integrand = [&](const NativePoint& pt) -> cplx {
    // differentiated terms cancel catastrophically close to an end
    if (pt.d_lo < cut) return lo_law(pt.d_lo);
    if (pt.d_hi < cut) return hi_law(pt.d_hi);
    // far tails of infinite domains lie below roundoff for every integrable word
    if (std::abs(pt.xi) > 1e150 * edge_scale) return 0;
    return value(pt);
  };
  cplx total = integrate_domain_c(integrand, sol.domain, 1e-12);
  return total / std::sqrt(Nm * Nn);
}

cplx expectation_direct(const ModelSpec& model, RepTag rep, const DeformationParams& params, int n,
                        const OperatorWord& word) {
  return matrix_element_direct(solve(model, rep, params), n, word, n);
}

cplx expectation_direct(const ModelSpec& model, RepTag rep, const DeformationParams& params, int n,
                        const std::string& word) {
  return expectation_direct(model, rep, params, n, parse_word(word, hamiltonian_terms(model, params)));
}

UncertaintyReport uncertainty(const ModelSpec& model, const DeformationParams& params, int n) {
  ClosedFormSolution sol = solve(model, RepTag::Pi1, params);
  UncertaintyReport r;
  r.x = matrix_element_unified(sol, n, parse_word("X"), n);
  r.x2 = matrix_element_unified(sol, n, parse_word("X^2"), n);
  r.p = matrix_element_unified(sol, n, parse_word("P"), n);
  r.p2 = matrix_element_unified(sol, n, parse_word("P^2"), n);
  r.dx = std::sqrt(std::max(0.0, (r.x2 - r.x * r.x).real()));
  r.dp = std::sqrt(std::max(0.0, (r.p2 - r.p * r.p).real()));
  const double tc = params.tau_check();
  r.min_dx = params.hbar * std::sqrt(tc);
  r.product_bound = params.hbar / 2 * (1 + tc * r.p2.real());
  // ground states saturate both bounds; allow quadrature roundoff
  const double slack = 1 - 1e-9;
  r.holds = r.dx >= slack * r.min_dx && r.dx * r.dp >= slack * r.product_bound;
  return r;
}

}  // namespace gup
