#include "fhl/fock_space.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fhl/errors.hpp"
#include "fhl/special_functions.hpp"

namespace fhl {
namespace {

constexpr double kLogDblMax = 709.0;  // just under ln(DBL_MAX)

// log of the orthonormal scale sqrt(n!) (n+theta)^{alpha/2}.
double log_scale(std::size_t n, const FockWeight& w) {
  const double dn = static_cast<double>(n);
  return 0.5 * (log_gamma(dn + 1.0) + w.alpha * std::log(dn + w.theta));
}

// a * exp(log_factor), kept finite by working on |a| in the log domain.
Complex scale_by_exp(Complex a, double log_factor) {
  const double mag = std::abs(a);
  if (mag == 0.0) return Complex(0.0, 0.0);
  const double log_out = std::log(mag) + log_factor;
  if (log_out > kLogDblMax)
    throw std::overflow_error("fock_space: scaled coefficient overflows double range");
  return (a / mag) * std::exp(log_out);
}

}  // namespace

FockWeight::FockWeight(double theta_, double alpha_) : theta(theta_), alpha(alpha_) {
  if (!std::isfinite(theta) || theta <= 0.0)
    throw std::invalid_argument("FockWeight: theta must be positive and finite");
  if (!std::isfinite(alpha))
    throw std::invalid_argument("FockWeight: alpha must be finite");
}

CoeffVec::CoeffVec(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("CoeffVec: needs at least one coefficient");
  for (const Complex& a : coeffs_)
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw std::invalid_argument("CoeffVec: coefficients must be finite");
}

double norm_sq(const CoeffVec& f, const FockWeight& w) {
  double acc = 0.0;
  for (std::size_t n = 0; n < f.trunc(); ++n) {
    const double mag = std::abs(f[n]);
    if (mag == 0.0) continue;
    const double dn = static_cast<double>(n);
    const double log_term =
        w.alpha * std::log(dn + w.theta) + log_gamma(dn + 1.0) + 2.0 * std::log(mag);
    if (log_term > kLogDblMax)
      throw std::overflow_error("norm_sq: term overflows double range");
    acc += std::exp(log_term);
  }
  return acc;
}

OrthoVec to_orthonormal(const CoeffVec& f, const FockWeight& w) {
  OrthoVec out;
  out.weight = w;
  out.values.resize(f.trunc());
  for (std::size_t n = 0; n < f.trunc(); ++n)
    out.values[n] = scale_by_exp(f[n], log_scale(n, w));
  return out;
}

CoeffVec from_orthonormal(const OrthoVec& u) {
  std::vector<Complex> coeffs(u.values.size());
  for (std::size_t n = 0; n < u.values.size(); ++n)
    coeffs[n] = scale_by_exp(u.values[n], -log_scale(n, u.weight));
  return CoeffVec(std::move(coeffs));
}

Complex evaluate(const CoeffVec& f, Complex z) {
  Complex acc(0.0, 0.0);
  for (std::size_t i = f.trunc(); i-- > 0;) acc = acc * z + f[i];
  return acc;
}

Complex kernel_eval(const FockWeight& w, Complex z, Complex y, double tol,
                    std::size_t term_cap) {
  if (!(tol > 0.0)) throw std::invalid_argument("kernel_eval: tol must be positive");
  const Complex q = z * std::conj(y);
  const double qabs = std::abs(q);

  // T_0 = theta^{-alpha}; T_{n+1} = T_n * q/(n+1) * ((n+1+theta)/(n+theta))^{-alpha}.
  Complex term = std::pow(w.theta, -w.alpha);
  Complex sum = term;
  for (std::size_t n = 0; n < term_cap; ++n) {
    const double dn = static_cast<double>(n);
    const double growth = std::pow((dn + 1.0 + w.theta) / (dn + w.theta), -w.alpha);
    // Bounds |T_{m+1}|/|T_m| for every m >= n (the |q|/(m+1) factor only
    // shrinks and the weight factor is monotone toward 1).
    const double ratio_bound = qabs / (dn + 1.0) * std::max(1.0, growth);
    if (ratio_bound < 0.5) {
      const double tail = std::abs(term) * ratio_bound / (1.0 - ratio_bound);
      if (tail <= tol) return sum;
    }
    term *= q / (dn + 1.0) * growth;
    sum += term;
  }
  throw NumericError("kernel_eval: tolerance unreachable within term cap");
}

}  // namespace fhl
