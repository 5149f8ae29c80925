#include "monohaz/coxfit.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Cholesky>

#include "monohaz/errors.hpp"

namespace monohaz {

namespace {

// One backward sweep over the time-sorted sample. Risk-set sums S0, S1, S2
// are accumulated per distinct time so tied events share the same risk set.
void sweep(const Dataset& ds, const Eigen::VectorXd& beta, double* loglik,
           Eigen::VectorXd* gradient, Eigen::MatrixXd* neg_hessian) {
  const Index n = ds.n();
  const Index p = ds.p();
  const Eigen::ArrayXd eta = (ds.covariates * beta).array();
  const Eigen::ArrayXd expz = eta.exp();

  double ll = 0.0;
  double s0 = 0.0;
  Eigen::VectorXd s1 = Eigen::VectorXd::Zero(p);
  Eigen::MatrixXd s2 = Eigen::MatrixXd::Zero(p, p);
  if (gradient) gradient->setZero(p);
  if (neg_hessian) neg_hessian->setZero(p, p);

  Index i = n - 1;
  while (i >= 0) {
    Index lo = i;
    while (lo > 0 && ds.time(lo - 1) == ds.time(i)) --lo;
    for (Index j = lo; j <= i; ++j) {
      s0 += expz(j);
      if (gradient || neg_hessian) {
        s1.noalias() += expz(j) * ds.covariates.row(j).transpose();
        if (neg_hessian)
          s2.noalias() += expz(j) * ds.covariates.row(j).transpose() * ds.covariates.row(j);
      }
    }
    for (Index j = lo; j <= i; ++j) {
      if (ds.status(j) == 0) continue;
      ll += eta(j) - std::log(s0);
      if (gradient) *gradient += ds.covariates.row(j).transpose() - s1 / s0;
      if (neg_hessian) *neg_hessian += s2 / s0 - (s1 / s0) * (s1 / s0).transpose();
    }
    i = lo - 1;
  }
  if (loglik) *loglik = ll;
}

}  // namespace

double log_partial_likelihood(const Dataset& dataset, const Eigen::VectorXd& beta) {
  if (beta.size() != dataset.p())
    throw std::invalid_argument("beta dimension does not match the covariate dimension");
  double ll = 0.0;
  sweep(dataset, beta, &ll, nullptr, nullptr);
  return ll;
}

void partial_likelihood_derivatives(const Dataset& dataset, const Eigen::VectorXd& beta,
                                    double& loglik, Eigen::VectorXd& gradient,
                                    Eigen::MatrixXd& neg_hessian) {
  if (beta.size() != dataset.p())
    throw std::invalid_argument("beta dimension does not match the covariate dimension");
  sweep(dataset, beta, &loglik, &gradient, &neg_hessian);
}

CoxFit fit_beta(const Dataset& dataset, const Eigen::VectorXd& init, double tol, int max_iter) {
  if (init.size() != dataset.p())
    throw std::invalid_argument("beta dimension does not match the covariate dimension");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  constexpr double kSeparationCap = 50.0;

  Eigen::VectorXd beta = init;
  double ll = 0.0;
  Eigen::VectorXd grad(dataset.p());
  Eigen::MatrixXd info(dataset.p(), dataset.p());
  sweep(dataset, beta, &ll, &grad, &info);

  for (int iter = 0; iter < max_iter; ++iter) {
    const double gnorm = grad.lpNorm<Eigen::Infinity>();
    if (gnorm < tol) return CoxFit{beta, ll, iter, gnorm};

    Eigen::VectorXd step = info.ldlt().solve(grad);
    if (!step.allFinite()) {
      Eigen::MatrixXd ridged = info;
      ridged.diagonal().array() += 1e-12 * (1.0 + info.diagonal().array().abs().maxCoeff());
      step = ridged.ldlt().solve(grad);
      if (!step.allFinite())
        throw convergence_error("singular information matrix in Newton step", beta);
    }

    double scale = 1.0;
    bool accepted = false;
    for (int half = 0; half < 40; ++half) {
      const Eigen::VectorXd candidate = beta + scale * step;
      if (candidate.lpNorm<Eigen::Infinity>() > kSeparationCap)
        throw separation_error("partial likelihood appears monotone (separated data)", candidate);
      double ll_new = 0.0;
      Eigen::VectorXd grad_new(dataset.p());
      Eigen::MatrixXd info_new(dataset.p(), dataset.p());
      sweep(dataset, candidate, &ll_new, &grad_new, &info_new);
      if (std::isfinite(ll_new) && ll_new >= ll) {
        beta = candidate;
        ll = ll_new;
        grad.swap(grad_new);
        info.swap(info_new);
        accepted = true;
        break;
      }
      scale *= 0.5;
    }
    if (!accepted) throw convergence_error("step-halving failed to improve the likelihood", beta);
  }
  const double gnorm = grad.lpNorm<Eigen::Infinity>();
  if (gnorm < tol) return CoxFit{beta, ll, max_iter, gnorm};
  throw convergence_error("Newton iteration did not converge in " + std::to_string(max_iter) +
                              " iterations",
                          beta);
}

CoxFit fit_beta(const Dataset& dataset) {
  return fit_beta(dataset, Eigen::VectorXd::Zero(dataset.p()));
}

double phi_n(const Dataset& dataset, double x, const Eigen::VectorXd& beta) {
  if (beta.size() != dataset.p())
    throw std::invalid_argument("beta dimension does not match the covariate dimension");
  const Index n = dataset.n();
  const double* first = dataset.time.data();
  const double* it = std::lower_bound(first, first + n, x);  // first T_i >= x
  const Index lo = static_cast<Index>(it - first);
  if (lo == n) return 0.0;
  double sum = 0.0;
  for (Index i = lo; i < n; ++i) sum += std::exp(dataset.covariates.row(i) * beta);
  return sum / static_cast<double>(n);
}

}  // namespace monohaz
