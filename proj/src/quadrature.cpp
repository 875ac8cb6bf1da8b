#include "fhl/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "fhl/errors.hpp"

namespace fhl {
namespace {
using Integrator = boost::math::quadrature::gauss_kronrod<double, 15>;
constexpr unsigned kMaxDepth = 14;
}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol) {
  double error = 0.0;
  const double value = Integrator::integrate(f, a, b, kMaxDepth, 1e-13, &error);
  if (!std::isfinite(value) || error > std::max(abs_tol, 1e-10 * std::fabs(value)))
    throw NumericError("quadrature: tolerance not met within node budget");
  return QuadratureResult{value, error};
}

QuadratureResult integrate_graded_tail(const std::function<double(double, double)>& f,
                                       double t0, int kappa, double abs_tol) {
  const double width = 1.0 - t0;
  const double dk = static_cast<double>(kappa);
  auto graded = [&](double u) {
    const double one_minus_u = 1.0 - u;
    const double pw = std::pow(one_minus_u, dk - 1.0);
    const double dist = width * pw * one_minus_u;  // exact-precision 1-t
    return f(1.0 - dist, dist) * dk * width * pw;
  };
  return integrate(graded, 0.0, 1.0, abs_tol);
}

}  // namespace fhl
