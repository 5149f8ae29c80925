#include "monohaz/nonparam.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "monohaz/errors.hpp"

namespace monohaz {

StepFunction breslow(const Dataset& dataset, const Eigen::VectorXd& beta) {
  if (beta.size() != dataset.p())
    throw std::invalid_argument("beta dimension does not match the covariate dimension");
  const Index n = dataset.n();
  const Eigen::ArrayXd expz = (dataset.covariates * beta).array().exp();

  // suffix(i) = sum_{j >= i} exp(beta'Z_j); Phi_n at a tied time uses the
  // suffix from the first index of the tie group.
  std::vector<double> knots, values;
  double cum = 0.0;
  std::vector<double> suffix_at(static_cast<std::size_t>(n) + 1, 0.0);
  for (Index i = n - 1; i >= 0; --i)
    suffix_at[static_cast<std::size_t>(i)] = suffix_at[static_cast<std::size_t>(i) + 1] + expz(i);

  Index i = 0;
  while (i < n) {
    Index hi = i;
    while (hi + 1 < n && dataset.time(hi + 1) == dataset.time(i)) ++hi;
    const double phi = suffix_at[static_cast<std::size_t>(i)] / static_cast<double>(n);
    double jump = 0.0;
    for (Index j = i; j <= hi; ++j)
      if (dataset.status(j) == 1) {
        if (!(phi > 0.0)) throw numeric_error("Phi_n vanished at an event time");
        jump += 1.0 / (static_cast<double>(n) * phi);
      }
    if (jump > 0.0) {
      cum += jump;
      knots.push_back(dataset.time(i));
      values.push_back(cum);
    }
    i = hi + 1;
  }

  StepFunction out;
  out.initial = 0.0;
  out.knots = Eigen::Map<Eigen::VectorXd>(knots.data(), static_cast<Index>(knots.size()));
  out.values = Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Index>(values.size()));
  return out;
}

StepFunction uncensored_ecdf(const Dataset& dataset) {
  const Index n = dataset.n();
  std::vector<double> knots, values;
  double cum = 0.0;
  Index i = 0;
  while (i < n) {
    Index hi = i;
    while (hi + 1 < n && dataset.time(hi + 1) == dataset.time(i)) ++hi;
    Index events = 0;
    for (Index j = i; j <= hi; ++j) events += dataset.status(j);
    if (events > 0) {
      cum += static_cast<double>(events) / static_cast<double>(n);
      knots.push_back(dataset.time(i));
      values.push_back(cum);
    }
    i = hi + 1;
  }
  StepFunction out;
  out.initial = 0.0;
  out.knots = Eigen::Map<Eigen::VectorXd>(knots.data(), static_cast<Index>(knots.size()));
  out.values = Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Index>(values.size()));
  return out;
}

StepFunction kaplan_meier_censoring(const Dataset& dataset) {
  const Index n = dataset.n();
  std::vector<double> knots, values;
  double survival = 1.0;
  Index i = 0;
  while (i < n) {
    Index hi = i;
    while (hi + 1 < n && dataset.time(hi + 1) == dataset.time(i)) ++hi;
    Index censorings = 0;
    for (Index j = i; j <= hi; ++j) censorings += 1 - dataset.status(j);
    if (censorings > 0) {
      const double at_risk = static_cast<double>(n - i);
      survival *= 1.0 - static_cast<double>(censorings) / at_risk;
      knots.push_back(dataset.time(i));
      values.push_back(1.0 - survival);
    }
    i = hi + 1;
  }
  StepFunction out;
  out.initial = 0.0;
  out.knots = Eigen::Map<Eigen::VectorXd>(knots.data(), static_cast<Index>(knots.size()));
  out.values = Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Index>(values.size()));
  return out;
}

}  // namespace monohaz
