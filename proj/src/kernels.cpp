#include "monohaz/kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "monohaz/errors.hpp"

namespace monohaz {

namespace {

constexpr double kTriScale = 35.0 / 32.0;

double tri_value(double u) {
  if (u <= -1.0 || u >= 1.0) return 0.0;
  const double w = 1.0 - u * u;
  return kTriScale * w * w * w;
}

double tri_derivative(double u) {
  if (u <= -1.0 || u >= 1.0) return 0.0;
  const double w = 1.0 - u * u;
  return -(105.0 / 16.0) * u * w * w;
}

// K(u) = 1/2 + (35/32) u (1 - u^2 + (3/5)u^4 - (1/7)u^6) on [-1,1]
double tri_antiderivative(double u) {
  if (u <= -1.0) return 0.0;
  if (u >= 1.0) return 1.0;
  const double s = u * u;
  return 0.5 + kTriScale * u * (1.0 + s * (-1.0 + s * (0.6 - s / 7.0)));
}

// K2(u) = Q(u) - Q(1) + (u+1)/2 with Q(u) = (35/32) s (1/2 - s/4 + s^2/10 - s^3/56),
// s = u^2, Q(1) = 93/256. Linear continuation K2(u) = u above 1.
double tri_second_antiderivative(double u) {
  if (u <= -1.0) return 0.0;
  if (u >= 1.0) return u;
  const double s = u * u;
  const double q = kTriScale * s * (0.5 + s * (-0.25 + s * (0.1 - s / 56.0)));
  return q - 93.0 / 256.0 + 0.5 * (u + 1.0);
}

// phi1(t) = R(t) - 35/256 with R(u) = (35/32) s (1/2 - (3/4)s + (1/2)s^2 - (1/8)s^3)
double tri_first_moment_integral(double t) {
  if (t <= -1.0 || t >= 1.0) return 0.0;
  const double s = t * t;
  const double r = kTriScale * s * (0.5 + s * (-0.75 + s * (0.5 - 0.125 * s)));
  return r - 35.0 / 256.0;
}

// phi2(t) = S(t) + 1/18 with S(u) = (35/32) u s (1/3 - (3/5)s + (3/7)s^2 - (1/9)s^3)
double tri_second_moment_integral(double t) {
  if (t <= -1.0) return 0.0;
  if (t >= 1.0) return 1.0 / 9.0;
  const double s = t * t;
  const double v = kTriScale * t * s * (1.0 / 3.0 + s * (-0.6 + s * (3.0 / 7.0 - s / 9.0)));
  return v + 1.0 / 18.0;
}

}  // namespace

Kernel triweight() {
  Kernel k;
  k.order = 2;
  k.value = tri_value;
  k.derivative = tri_derivative;
  k.antiderivative = tri_antiderivative;
  k.second_antiderivative = tri_second_antiderivative;
  k.first_moment_integral = tri_first_moment_integral;
  k.second_moment_integral = tri_second_moment_integral;
  k.square_integral = 350.0 / 429.0;
  k.name = "triweight";
  return k;
}

Kernel kernel_by_name(std::string_view name) {
  if (name == "triweight") return triweight();
  throw std::invalid_argument("unknown kernel: " + std::string(name));
}

double eval_scaled(const Kernel& kernel, double b, double u) {
  if (!(b > 0.0)) throw std::invalid_argument("bandwidth must be positive");
  return kernel.value(u / b) / b;
}

double survival_integral(const Kernel& kernel, double b, double t, double s) {
  if (!(b > 0.0)) throw std::invalid_argument("bandwidth must be positive");
  return 1.0 - kernel.antiderivative((t - s) / b);
}

BoundaryKernel::BoundaryKernel(const Kernel& base, double cut) : base_(base), cut_(cut) {
  if (!(cut >= -1.0 && cut <= 1.0))
    throw std::invalid_argument("boundary kernel cut must lie in [-1, 1]");
  const double phi0 = base.antiderivative(cut);
  const double phi1 = base.first_moment_integral(cut);
  const double phi2 = base.second_moment_integral(cut);
  const double det = phi0 * phi2 - phi1 * phi1;
  if (!(det > 1e-12))
    throw numeric_error("boundary kernel moment matrix is singular (cut too close to -1)");
  a0_ = phi2 / det;
  a1_ = -phi1 / det;
}

double BoundaryKernel::operator()(double u) const {
  if (u <= -1.0 || u > cut_) return 0.0;
  return (a0_ + a1_ * u) * base_.value(u);
}

double BoundaryKernel::antiderivative(double s) const {
  if (s <= -1.0) return 0.0;
  if (s >= cut_) return 1.0;
  return a0_ * base_.antiderivative(s) + a1_ * base_.first_moment_integral(s);
}

BoundaryKernel boundary_kernel(const Kernel& base, double cut) { return BoundaryKernel(base, cut); }

}  // namespace monohaz
