#include "monohaz/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "monohaz/errors.hpp"

namespace monohaz {

Dataset make_dataset(Eigen::VectorXd time, Eigen::VectorXi status, Eigen::MatrixXd covariates) {
  const Index n = time.size();
  if (n == 0) throw validation_error("dataset is empty");
  if (status.size() != n || covariates.rows() != n)
    throw validation_error("time, status and covariates must have the same number of rows");
  if (covariates.cols() < 1) throw validation_error("covariate dimension must be >= 1");

  for (Index i = 0; i < n; ++i) {
    if (!std::isfinite(time(i)) || time(i) < 0.0)
      throw validation_error("follow-up times must be finite and nonnegative");
    if (status(i) != 0 && status(i) != 1)
      throw validation_error("status must be 0 (censored) or 1 (event)");
    if (!covariates.row(i).allFinite())
      throw validation_error("covariates must be finite");
  }
  if (status.cast<Index>().sum() == 0)
    throw validation_error("dataset has no events; estimators are degenerate");

  // Stable sort by time with events before censorings at ties.
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    if (time(a) != time(b)) return time(a) < time(b);
    return status(a) > status(b);
  });

  Dataset out;
  out.time.resize(n);
  out.status.resize(n);
  out.covariates.resize(n, covariates.cols());
  for (Index i = 0; i < n; ++i) {
    out.time(i) = time(order[static_cast<std::size_t>(i)]);
    out.status(i) = status(order[static_cast<std::size_t>(i)]);
    out.covariates.row(i) = covariates.row(order[static_cast<std::size_t>(i)]);
  }
  for (Index i = 0; i + 1 < n; ++i)
    if (out.time(i) == out.time(i + 1)) {
      out.has_ties = true;
      break;
    }
  return out;
}

double empirical_quantile(const Dataset& dataset, double q) {
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("quantile level must be in (0,1)");
  const Index n = dataset.n();
  const Index k = static_cast<Index>(std::ceil(q * static_cast<double>(n)));
  return dataset.time(std::max<Index>(k, 1) - 1);  // times already sorted
}

double StepFunction::operator()(double x) const {
  const Index m = knots.size();
  if (m == 0 || x < knots(0)) return initial;
  // largest j with knots[j] <= x
  const double* first = knots.data();
  const double* it = std::upper_bound(first, first + m, x);
  return values(static_cast<Index>(it - first) - 1);
}

double HazardCurve::operator()(double x) const {
  const Index m = grid.size();
  if (m == 0) throw std::invalid_argument("empty hazard curve");
  if (x < grid(0) || x > grid(m - 1))
    throw std::invalid_argument("evaluation point outside the curve range");
  const double* first = grid.data();
  const double* it = std::lower_bound(first, first + m, x);
  Index j = static_cast<Index>(it - first);
  if (j == 0) return values(0);
  if (grid(j) == x) return values(j);
  const double t = (x - grid(j - 1)) / (grid(j) - grid(j - 1));
  return values(j - 1) + t * (values(j) - values(j - 1));
}

}  // namespace monohaz
