#include "gupspec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>

#include "gupspec/errors.hpp"
#include "gupspec/tridiag.hpp"

namespace gup {

namespace {

constexpr double kStrongWall = 10;    // plain Dirichlet with truncation above this g
constexpr double kWallCut = 1e8;      // truncation level for V
constexpr double kDecayAction = 35;   // WKB action beyond the turning point of a box end

enum class EndKind { Plain, Weighted };

struct End {
  EndKind kind = EndKind::Plain;
  double rho = 0;  // phi ~ d^rho for weighted ends
  std::string label;
};

struct Setup {
  double a = 0, b = 0;
  End lo, hi;
};

double wall_strength(const std::function<double(double)>& V, double end, double dir, double L) {
  auto A = [&](double d) { return d * d * V(end + dir * d); };
  double d = 1e-3 * L;
  return (4 * A(d) - A(2 * d)) / 3;
}

// distance from the end at which V first drops below the cut level
double cut_distance(const std::function<double(double)>& V, double end, double dir, double L, double level) {
  double lo = 0, hi = 0.5 * L;
  if (V(end + dir * hi) > level) throw ConvergenceFailure("potential exceeds the cut level across the domain");
  for (int i = 0; i < 200 && hi - lo > 1e-15 * L; ++i) {
    double m = 0.5 * (lo + hi);
    if (m <= 0 || V(end + dir * m) > level)
      lo = m;
    else
      hi = m;
  }
  return hi;
}

// -phi'' + V phi with phi = phi0 chi, phi0 = sin^rho_a(theta) cos^rho_b(theta),
// theta = pi (q - a) / (2L), symmetrized with sqrt(phi0^2)
SymTridiagonal assemble(const Setup& s, const std::function<double(double)>& V, int N) {
  const double L = s.b - s.a, h = L / N, c = std::numbers::pi / (2 * L);
  const double ra = s.lo.kind == EndKind::Weighted ? s.lo.rho : 0;
  const double rb = s.hi.kind == EndKind::Weighted ? s.hi.rho : 0;
  auto log_weight = [&](double dl, double dh) {
    double r = 0;
    if (ra != 0) r += 2 * ra * std::log(std::sin(c * dl));
    if (rb != 0) r += 2 * rb * std::log(std::sin(c * dh));
    return r;
  };
  std::vector<double> lWn(N), lWf(N + 1);
  for (int i = 0; i < N; ++i) lWn[i] = log_weight((i + 0.5) * h, (N - i - 0.5) * h);
  for (int i = 1; i < N; ++i) lWf[i] = log_weight(i * h, (N - i) * h);
  // plain ends: mirror ghost node, the wall sits on the boundary face
  lWf[0] = ra != 0 ? -inf : std::log(2.0);
  lWf[N] = rb != 0 ? -inf : std::log(2.0);

  SymTridiagonal t;
  t.diag.resize(N);
  t.off.resize(N - 1);
  const double ih2 = 1 / (h * h);
  for (int i = 0; i < N; ++i) {
    double dl = (i + 0.5) * h, dh = (N - i - 0.5) * h;
    double q = dl <= dh ? s.a + dl : s.b - dh;
    double U = V(q);
    if (!std::isfinite(U)) throw ConvergenceFailure("potential not finite at q = " + std::to_string(q));
    if (ra != 0 || rb != 0) {
      double sa = std::sin(c * dl), sb = std::sin(c * dh);
      double ca = std::cos(c * dl), cb = std::cos(c * dh);
      // phi0'/phi0 and (phi0'/phi0)' in units of c
      double lp = ra * ca / sa - rb * cb / sb;
      double lpp = -ra / (sa * sa) - rb / (sb * sb);
      U -= c * c * (lpp + lp * lp);
    }
    t.diag[i] = (std::exp(lWf[i + 1] - lWn[i]) + std::exp(lWf[i] - lWn[i])) * ih2 + U;
    if (i + 1 < N) t.off[i] = -std::exp(lWf[i + 1] - 0.5 * (lWn[i] + lWn[i + 1])) * ih2;
  }
  return t;
}

End finite_end(const EigenProblem& p, const std::optional<double>& given, double& end, double dir, double L) {
  End e;
  if (!p.singular_endpoints && !given) {
    e.label = "dirichlet";
    return e;
  }
  double g = given ? *given : wall_strength(p.V, end, dir, L);
  if (g >= kStrongWall) {
    double scale = std::max(1.0, std::abs(p.V(end + dir * 0.5 * L)));
    end += dir * cut_distance(p.V, end, dir, L, kWallCut * scale);
    e.label = "dirichlet-cut g=" + std::to_string(g);
    return e;
  }
  if (g < -0.25) throw ConvergenceFailure("wall strength below -1/4: the end is not limit-circle regular");
  e.kind = EndKind::Weighted;
  e.rho = 0.5 + std::sqrt(0.25 + g);
  e.label = "weighted g=" + std::to_string(g);
  return e;
}

// position beyond which the state of energy E has decayed by exp(-kDecayAction)
double decay_end(const std::function<double(double)>& V, double start, double dir, double E, double scale) {
  const double step = scale * 1e-3;
  double q = start, action = 0;
  for (long i = 0; i < 100000000L; ++i) {
    double v = V(q) - E;
    if (!std::isfinite(v)) throw ConvergenceFailure("potential not finite while sizing the box");
    if (v > 0) action += std::sqrt(v) * step;
    if (action >= kDecayAction) return q;
    q += dir * step;
    if (std::abs(q - start) > 1e4 * scale) break;
  }
  throw ConvergenceFailure("potential does not confine: no box contains the requested states");
}

Setup make_setup(const EigenProblem& p, int count) {
  const Domain& d = p.q_domain;
  if (!(d.lo < d.hi)) throw ParameterError("empty q domain");
  Setup s;
  if (d.lo_finite() && d.hi_finite()) {
    s.a = d.lo;
    s.b = d.hi;
    const double L = s.b - s.a;
    s.lo = finite_end(p, p.wall_lo, s.a, +1, L);
    s.hi = finite_end(p, p.wall_hi, s.b, -1, L);
    return s;
  }
  // box for the infinite ends, sized by the highest requested level
  double centre = d.lo_finite() ? d.lo + 1 : d.hi_finite() ? d.hi - 1 : 0;
  double width = 10;
  s.a = d.lo_finite() ? d.lo : centre - width;
  s.b = d.hi_finite() ? d.hi : centre + width;
  for (int iter = 0; iter < 12; ++iter) {
    Setup trial = s;
    double L = trial.b - trial.a;
    if (d.lo_finite()) trial.lo = finite_end(p, p.wall_lo, trial.a, +1, L);
    if (d.hi_finite()) trial.hi = finite_end(p, p.wall_hi, trial.b, -1, L);
    auto ev = lowest_eigenvalues(assemble(trial, p.V, 1024), count, 1e-10);
    double E = ev.back() + 0.1 * (std::abs(ev.back()) + 1);
    double na = s.a, nb = s.b;
    if (!d.lo_finite()) na = decay_end(p.V, centre, -1, E, width);
    if (!d.hi_finite()) nb = decay_end(p.V, centre, +1, E, width);
    bool stable = std::abs(na - s.a) <= 0.02 * (s.b - s.a) && std::abs(nb - s.b) <= 0.02 * (s.b - s.a);
    s.a = na;
    s.b = nb;
    if (stable) break;
  }
  const double L = s.b - s.a;
  if (d.lo_finite())
    s.lo = finite_end(p, p.wall_lo, s.a, +1, L);
  else
    s.lo.label = "box";
  if (d.hi_finite())
    s.hi = finite_end(p, p.wall_hi, s.b, -1, L);
  else
    s.hi.label = "box";
  return s;
}

}  // namespace

SpectrumResult fd_eigenvalues(const EigenProblem& problem, int count) {
  if (!problem.V) throw ParameterError("eigen problem without a potential");
  if (problem.grid_size < 64) throw ParameterError("grid size must be at least 64");
  if (count < 1 || count > problem.grid_size / 8) throw ParameterError("count must lie in [1, grid_size/8]");
  Setup s = make_setup(problem, count);

  SpectrumResult r;
  r.box = {s.a, s.b};
  r.lo_end = s.lo.label;
  r.hi_end = s.hi.label;
  r.grid_sizes = {problem.grid_size, 2 * problem.grid_size, 4 * problem.grid_size};
  std::vector<std::future<std::vector<double>>> jobs;
  for (int N : r.grid_sizes)
    jobs.push_back(std::async(std::launch::async, [&s, &problem, N, count] {
      return lowest_eigenvalues(assemble(s, problem.V, N), count, 1e-13);
    }));
  for (auto& j : jobs) r.raw.push_back(j.get());

  r.extrapolated = true;
  for (int k = 0; k < count; ++k) {
    double e1 = r.raw[0][k], e2 = r.raw[1][k], e3 = r.raw[2][k];
    double r12 = e2 + (e2 - e1) / 3, r23 = e3 + (e3 - e2) / 3;
    double floor = 1e-15 * std::max(1.0, std::abs(r23));
    double err = std::max(std::abs(r23 - r12), floor);
    r.eigenvalues.push_back(r23);
    r.error_estimates.push_back(err);
    double num = std::abs(e1 - e2), den = std::abs(e2 - e3);
    // differences at roundoff level mean the weight already resolves the level
    bool exact = num < 1e-11 * std::max(1.0, std::abs(r23));
    r.observed_order.push_back(exact || den == 0 ? inf : std::log2(num / den));
    if (!std::isfinite(r23) || err > problem.tolerance * std::max(1.0, std::abs(r23)))
      throw ConvergenceFailure("extrapolated level " + std::to_string(k) + " unsettled: spread " +
                               std::to_string(err));
  }
  return r;
}

SpectrumReport verify_spectrum(const ModelSpec& model, RepTag rep, const DeformationParams& params, int count,
                               int grid_size) {
  if (rep == RepTag::Pi4Prime)
    throw UnsupportedPair("the primed fourth representation has no bounded spectrum to compare");
  ClosedFormSolution sol = solve(model, rep, params);
  if (sol.classification.complex_spectrum) throw ParameterError("complex spectrum: nothing to compare on the real line");
  TransformResult tr = to_potential(derived_coefficients(model, rep, params), sol.p0);
  EigenProblem prob;
  prob.V = [tr](double q) { return tr.V(q); };
  prob.q_domain = tr.q_domain();
  prob.grid_size = grid_size;

  SpectrumReport rep_out;
  rep_out.model = model_name(model);
  rep_out.rep = to_string(rep);
  rep_out.oracle = fd_eigenvalues(prob, count);
  for (int n = 0; n < count; ++n) {
    SpectrumRow row;
    row.n = n;
    row.closed = sol.energy(n);
    row.oracle = rep_out.oracle.eigenvalues[n];
    row.error_estimate = rep_out.oracle.error_estimates[n];
    row.rel_err = std::abs(row.oracle - row.closed) / std::max(std::abs(row.closed), 1e-300);
    rep_out.max_rel_err = std::max(rep_out.max_rel_err, row.rel_err);
    rep_out.rows.push_back(row);
  }
  return rep_out;
}

}  // namespace gup
