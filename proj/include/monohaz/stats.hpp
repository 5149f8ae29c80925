#pragma once

#include <vector>

namespace monohaz {

//! Standard normal quantile (Wichura's AS 241, PPND16 accuracy).
//! Throws std::invalid_argument unless p is in (0, 1).
double normal_quantile(double p);

//! Percentile with the linear-interpolation convention: for sorted values
//! v_0..v_{m-1} and level q, h = (m-1)q, result = v_i + (h-i)(v_{i+1}-v_i).
//! Sorts a copy of the input. Throws std::invalid_argument on empty input
//! or q outside [0, 1].
double percentile(std::vector<double> values, double q);

}  // namespace monohaz
