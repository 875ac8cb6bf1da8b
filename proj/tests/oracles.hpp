// Test-only oracles, independent of the library's numerical paths.
#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace fhl_test {

// Largest eigenvalue of a dense symmetric matrix by cyclic Jacobi sweeps.
inline double jacobi_max_eigenvalue(std::vector<double> a, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
    if (off <= 1e-26 * n * n) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (std::fabs(apq) < 1e-300) continue;
        const double tau = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t i = 0; i < n; ++i) {
          const double aip = at(i, p), aiq = at(i, q);
          at(i, p) = c * aip - s * aiq;
          at(i, q) = s * aip + c * aiq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double api = at(p, i), aqi = at(q, i);
          at(p, i) = c * api - s * aqi;
          at(q, i) = s * api + c * aqi;
        }
      }
    }
  }
  double best = at(0, 0);
  for (std::size_t i = 1; i < n; ++i) best = std::max(best, at(i, i));
  return best;
}

// Largest singular value of a dense row-major matrix: Jacobi on M^T M.
inline double svd_max_oracle(const std::vector<double>& m, std::size_t rows, std::size_t cols) {
  std::vector<double> mtm(cols * cols, 0.0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const double mij = m[i * cols + j];
      if (mij == 0.0) continue;
      for (std::size_t k = 0; k < cols; ++k) mtm[j * cols + k] += mij * m[i * cols + k];
    }
  const double top = jacobi_max_eigenvalue(std::move(mtm), cols);
  return std::sqrt(std::max(top, 0.0));
}

}  // namespace fhl_test
