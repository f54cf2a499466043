#pragma once

namespace prefatt {

// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
// Accurate to relative error <= 1e-10 for a <= 200, x <= 1e4.
double regularized_lower_incomplete_gamma(double a, double x);

// Regularized incomplete beta I_x(a, b).
double regularized_incomplete_beta(double a, double b, double x);

}  // namespace prefatt
