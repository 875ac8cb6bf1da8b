// Weighted Fock space coefficient model: the weight pair (theta, alpha),
// truncated Taylor coefficient vectors, the orthonormal coordinate map
//   u_n = a_n sqrt(n!) (n+theta)^{alpha/2},
// point evaluation, and the reproducing kernel series.
//
// Factorials are never materialized: every n! enters through log_gamma(n+1)
// and is combined in the log domain before exponentiation, so truncations up
// to N ~ 1e4 stay representable.
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace fhl {

using Complex = std::complex<double>;

// The pair (theta, alpha) parameterizing |f|^2 = sum (n+theta)^alpha |a_n|^2 n!.
struct FockWeight {
  double theta = 1.0;
  double alpha = 0.0;

  FockWeight() = default;
  FockWeight(double theta_, double alpha_);

  // The theorems additionally require -1 < alpha < 1; the space itself does not.
  bool in_theorem_range() const { return -1.0 < alpha && alpha < 1.0; }
};

// Finitely truncated Taylor coefficient vector a_0..a_{N-1}, N >= 1.
class CoeffVec {
 public:
  explicit CoeffVec(std::vector<Complex> coeffs);

  std::size_t trunc() const { return coeffs_.size(); }
  const Complex& operator[](std::size_t n) const { return coeffs_[n]; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

 private:
  std::vector<Complex> coeffs_;
};

// Orthonormal coordinates of a CoeffVec with respect to a FockWeight; the
// l2 norm of `values` equals the Fock norm of the originating vector.
struct OrthoVec {
  std::vector<Complex> values;
  FockWeight weight;
};

// sum_{n<N} (n+theta)^alpha |a_n|^2 n!, each term assembled in log domain.
// Throws std::overflow_error if a single term exceeds the double range.
double norm_sq(const CoeffVec& f, const FockWeight& w);

// u_n = a_n sqrt(n!) (n+theta)^{alpha/2}.
OrthoVec to_orthonormal(const CoeffVec& f, const FockWeight& w);

// a_n = u_n (n!)^{-1/2} (n+theta)^{-alpha/2}; inverse of to_orthonormal.
CoeffVec from_orthonormal(const OrthoVec& u);

// Horner evaluation of the truncated series at z.
Complex evaluate(const CoeffVec& f, Complex z);

// Reproducing kernel K_{theta,alpha}(z,y) = sum (n+theta)^{-alpha} (z conj(y))^n / n!,
// truncated once a geometric bound certifies the remaining tail <= tol.
// Throws NumericError if the tolerance is unreachable within term_cap terms.
Complex kernel_eval(const FockWeight& w, Complex z, Complex y, double tol,
                    std::size_t term_cap = 100000);

}  // namespace fhl
