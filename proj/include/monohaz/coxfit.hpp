#pragma once

#include <Eigen/Core>

#include "monohaz/types.hpp"

namespace monohaz {

struct CoxFit {
  Eigen::VectorXd beta;
  double loglik = 0.0;
  int iterations = 0;
  double gradient_norm = 0.0;
};

//! Cox log partial likelihood with Breslow handling of ties: all events at a
//! tied time share the risk set {j : T_j >= t}.
double log_partial_likelihood(const Dataset& dataset, const Eigen::VectorXd& beta);

//! Analytic score and observed information, for diagnostics and tests.
void partial_likelihood_derivatives(const Dataset& dataset, const Eigen::VectorXd& beta,
                                    double& loglik, Eigen::VectorXd& gradient,
                                    Eigen::MatrixXd& neg_hessian);

//! Newton iteration with step-halving on the concave log partial likelihood.
//! Throws convergence_error after max_iter iterations without meeting tol,
//! separation_error when the iterate runs away (|beta|_inf > 50).
CoxFit fit_beta(const Dataset& dataset, const Eigen::VectorXd& init, double tol = 1e-10,
                int max_iter = 50);
CoxFit fit_beta(const Dataset& dataset);

//! Phi_n(x; beta) = n^{-1} sum_i 1{T_i >= x} exp(beta'Z_i).
double phi_n(const Dataset& dataset, double x, const Eigen::VectorXd& beta);

}  // namespace monohaz
