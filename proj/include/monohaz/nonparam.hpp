#pragma once

#include <Eigen/Core>

#include "monohaz/types.hpp"

namespace monohaz {

//! Breslow estimator of the cumulative baseline hazard: a jump of
//! 1/(n Phi_n(T_i; beta)) at each event time, tied events pooled into a
//! single knot.
StepFunction breslow(const Dataset& dataset, const Eigen::VectorXd& beta);

//! Empirical sub-distribution function of the uncensored observations:
//! jump 1/n at each event time.
StepFunction uncensored_ecdf(const Dataset& dataset);

//! Kaplan-Meier estimate of the censoring distribution function, treating
//! censorings as the events of interest: G(x) = 1 - prod_{c <= x}(1 - d_c/R_c).
StepFunction kaplan_meier_censoring(const Dataset& dataset);

}  // namespace monohaz
