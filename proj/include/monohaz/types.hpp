#pragma once

#include <Eigen/Core>

namespace monohaz {

using Eigen::Index;

//! One right-censored triplet (T_i, Delta_i, Z_i).
struct Observation {
  double time = 0.0;
  bool event = false;  // true = uncensored
  Eigen::VectorXd covariates;
};

//! Column-oriented sample of right-censored survival triplets.
//!
//! Invariants: times ascending with events placed before censorings at tied
//! times, at least one event, all times finite and nonnegative, covariate
//! dimension fixed at p >= 1. Immutable after construction; safe to share
//! across threads.
struct Dataset {
  Eigen::VectorXd time;        // sorted ascending
  Eigen::VectorXi status;      // 1 = event, 0 = censored
  Eigen::MatrixXd covariates;  // n x p
  bool has_ties = false;

  Index n() const { return time.size(); }
  Index p() const { return covariates.cols(); }
  Index num_events() const { return status.cast<Index>().sum(); }
  double max_time() const { return time(time.size() - 1); }

  Observation row(Index i) const {
    return Observation{time(i), status(i) != 0, covariates.row(i).transpose()};
  }
};

//! Validates, sorts and packs raw columns into a Dataset.
//! Throws validation_error on negative/non-finite times, status outside
//! {0,1}, empty input, mismatched lengths, or a sample without any event.
Dataset make_dataset(Eigen::VectorXd time, Eigen::VectorXi status, Eigen::MatrixXd covariates);

//! The q-th empirical quantile as the ceil(q*n)-th order statistic.
double empirical_quantile(const Dataset& dataset, double q);

//! Right-continuous piecewise-constant function.
//!
//! f(x) = values[j] for the largest j with knots[j] <= x, and `initial`
//! left of the first knot. Knots strictly increasing.
struct StepFunction {
  Eigen::VectorXd knots;
  Eigen::VectorXd values;
  double initial = 0.0;

  double operator()(double x) const;
  Index num_knots() const { return knots.size(); }
  double terminal() const { return values.size() ? values(values.size() - 1) : initial; }
};

//! Grid-sampled hazard estimate. Linear interpolation between grid points.
struct HazardCurve {
  Eigen::VectorXd grid;  // strictly increasing
  Eigen::VectorXd values;
  double bandwidth = 0.0;
  bool monotone = false;

  //! Linear interpolation; throws std::invalid_argument outside the grid range.
  double operator()(double x) const;
};

}  // namespace monohaz
