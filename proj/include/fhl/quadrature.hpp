// Adaptive quadrature for the radial measures: everything lives on [0,1)
// with possible power-law behavior at the right endpoint, so integrals are
// computed after the grading substitution t = 1 - (1-t0)(1-u)^kappa.
//
// Integrands receive both t and the exact distance 1-t in the graded
// variable; near t = 1 the distance carries far more precision than 1-t
// recomputed from t ever could.
#pragma once

#include <functional>

namespace fhl {

struct QuadratureResult {
  double value;
  double error_estimate;
};

// Integral of f over [a,b] by adaptive Gauss-Kronrod. Throws NumericError
// if the error estimate cannot be brought under
// max(abs_tol, 1e-10*|value|) within the subdivision budget.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol);

// Integral over [t0, 1) of f(t, 1-t), graded by t = 1 - (1-t0)(1-u)^kappa.
// kappa >= 1 flattens an integrable (1-t)^{s-1} singularity when kappa*s >= 1.
QuadratureResult integrate_graded_tail(const std::function<double(double, double)>& f,
                                       double t0, int kappa, double abs_tol);

}  // namespace fhl
