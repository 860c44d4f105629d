#pragma once
#include <string>

#include "gupspec/closed_form.hpp"
#include "gupspec/operator_word.hpp"

namespace gup {

// <psi_m | rho W psi_n> from the representation-free integral over w in (-1, 1),
//   X -> i hbar d(w) (d/dw + G'/G),  P -> P(w)
// evaluated by Gauss-Jacobi quadrature matched to the endpoint behaviour.
cplx matrix_element_unified(const ClosedFormSolution& sol, int m, const OperatorWord& word, int n);
cplx expectation_unified(const ModelSpec& model, const DeformationParams& params, int n, const OperatorWord& word);
cplx expectation_unified(const ModelSpec& model, const DeformationParams& params, int n, const std::string& word);

// <psi_m | rho W psi_n> by quadrature on the representation's own coordinate,
// with the operators acting through their differential form.
cplx matrix_element_direct(const ClosedFormSolution& sol, int m, const OperatorWord& word, int n);
cplx expectation_direct(const ModelSpec& model, RepTag rep, const DeformationParams& params, int n,
                        const OperatorWord& word);
cplx expectation_direct(const ModelSpec& model, RepTag rep, const DeformationParams& params, int n,
                        const std::string& word);

// Endpoint exponents (e_minus, e_plus) of the w-integrand of one term;
// throws NonIntegrable when either is <= -1.
std::pair<double, double> endpoint_exponents(const ClosedFormSolution& sol, const WordTerm& term);

struct UncertaintyReport {
  cplx x, x2, p, p2;
  double dx = 0, dp = 0;
  double min_dx = 0;         // hbar sqrt(tau_check)
  double product_bound = 0;  // hbar/2 (1 + tau_check <P^2>)
  bool holds = false;
};

UncertaintyReport uncertainty(const ModelSpec& model, const DeformationParams& params, int n);

}  // namespace gup
