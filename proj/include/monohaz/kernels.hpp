#pragma once

#include <string_view>

namespace monohaz {

//! An m-orthogonal smoothing kernel supported on [-1, 1] with unit mass,
//! described through closed-form evaluators.
//!
//! antiderivative is K(u) = int_{-1}^u k, clamped to 0 below -1 and 1 above
//! +1. second_antiderivative is K2(u) = int_{-1}^u K, which is 0 below -1 and
//! continues linearly (slope K(1) = 1) above +1 so that cumulative-process
//! formulas can be evaluated for any argument.
struct Kernel {
  int order = 2;  // m: moments 1..m-1 vanish
  double (*value)(double) = nullptr;
  double (*derivative)(double) = nullptr;
  double (*antiderivative)(double) = nullptr;
  double (*second_antiderivative)(double) = nullptr;
  double (*first_moment_integral)(double) = nullptr;   // phi_1(t) = int_{-1}^t u k(u) du
  double (*second_moment_integral)(double) = nullptr;  // phi_2(t) = int_{-1}^t u^2 k(u) du
  double square_integral = 0.0;                        // int k^2
  std::string_view name;
};

//! k(u) = (35/32)(1-u^2)^3 on |u| <= 1. Order m = 2; all antiderivatives and
//! moment integrals are exact polynomials.
Kernel triweight();

//! Looks up a built-in kernel by name; throws std::invalid_argument for
//! anything other than "triweight".
Kernel kernel_by_name(std::string_view name);

//! k_b(u) = b^{-1} k(u/b). Throws std::invalid_argument unless b > 0.
double eval_scaled(const Kernel& kernel, double b, double u);

//! int_t^inf k_b(u - s) du = 1 - K((t - s)/b).
double survival_integral(const Kernel& kernel, double b, double t, double s);

//! First-order moment-matching boundary kernel on [-1, cut]:
//!   k_cut(u) = (phi2(cut) - phi1(cut) u) k(u) / (phi0 phi2 - phi1^2).
//! Has unit mass and zero first moment on [-1, cut]; equals the base kernel
//! at cut = 1.
class BoundaryKernel {
public:
  //! Throws std::invalid_argument for cut outside [-1, 1], numeric_error if
  //! the moment matrix phi0*phi2 - phi1^2 is (numerically) singular.
  BoundaryKernel(const Kernel& base, double cut);

  double operator()(double u) const;
  //! int_{-1}^s k_cut, clamped to 0 below -1 and 1 above cut.
  double antiderivative(double s) const;

  double cut() const { return cut_; }

private:
  const Kernel base_;
  double cut_;
  double a0_, a1_;  // k_cut(u) = (a0 + a1 u) k(u)
};

//! Spec-level convenience: the boundary-corrected kernel as a callable.
BoundaryKernel boundary_kernel(const Kernel& base, double cut);

}  // namespace monohaz
