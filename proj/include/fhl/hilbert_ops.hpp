// Truncated matrix realizations of the Hilbert-type operators in orthonormal
// coordinates. With u_k = a_k sqrt(k!) (k+theta)^{alpha/2} on the source side
// and v_n on the target side, every operator becomes the nonnegative matrix
//   M[n][k] = (n+theta)^{beta/2} (k+theta)^{-alpha/2} kappa(n,k)
// where kappa is 1/((k+n)^lambda + 1), 1/(k+n+2 theta)^{1+(beta-alpha)/2},
// mu[k+n], or the transformed moments mu_lambda[k+n]. The sqrt(k!)/sqrt(n!)
// factors of the coefficient definitions cancel exactly, which keeps entries
// polynomial-sized and makes the top singular value the operator norm proxy.
#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "fhl/fock_space.hpp"
#include "fhl/radial_measure.hpp"

namespace fhl {

struct HLambda {
  double lambda;
};
struct HCheck {};
struct HMu {
  MeasureSpec measure;
};
struct HLambdaMu {
  double lambda;
  MeasureSpec measure;
};

class OperatorSpec {
 public:
  using Kernel = std::variant<HLambda, HCheck, HMu, HLambdaMu>;

  // source = (theta, alpha), target = (theta, beta); one theta across both.
  OperatorSpec(Kernel kernel, FockWeight source, FockWeight target);

  const Kernel& kernel() const { return kernel_; }
  const FockWeight& source() const { return source_; }
  const FockWeight& target() const { return target_; }
  double theta() const { return source_.theta; }
  double alpha() const { return source_.alpha; }
  double beta() const { return target_.alpha; }

  bool needs_moments() const;
  // HMu -> mu; HLambdaMu -> (1-t)^{lambda-1} d mu. Throws for kernel types
  // that carry no measure.
  MeasureSpec effective_measure() const;

  std::string kernel_name() const;

 private:
  Kernel kernel_;
  FockWeight source_;
  FockWeight target_;
};

struct TruncatedOperator {
  std::size_t dim = 0;
  std::vector<double> entries;  // row-major dim x dim
  OperatorSpec spec;

  double at(std::size_t n, std::size_t k) const { return entries[n * dim + k]; }
};

// Single matrix entry; HMu/HLambdaMu require a MomentTable covering n+k
// (for HLambdaMu the table must already be of the transformed measure).
double entry(const OperatorSpec& spec, std::size_t n, std::size_t k,
             const MomentTable* moments = nullptr);

// The kernel depends on n and k only through m = n+k; table[m] for m <= max_sum.
std::vector<double> kernel_table(const OperatorSpec& spec, std::size_t max_sum);

// Dense N x N truncation, deterministic row-major fill; moments are
// precomputed once up to 2N-2. Rows may be assembled in parallel.
TruncatedOperator build_truncated(const OperatorSpec& spec, std::size_t N, int jobs = 1);

// Taylor coefficients b_0..b_{out_len-1} of the image of f: map to
// orthonormal coordinates, multiply (inner dimension = f.trunc(), ascending-k
// accumulation), map back with the target weight.
CoeffVec apply(const OperatorSpec& spec, const CoeffVec& f, std::size_t out_len);

// y = M u in orthonormal coordinates (target side), fixed serial order.
std::vector<double> apply_ortho(const TruncatedOperator& op, const std::vector<double>& u);

// l2 norm of the image of an orthonormal-coordinate vector under the
// out_len x u.size() truncation, streamed row by row (no matrix storage).
// This equals ||H f||_{theta,beta} for the vector's originating function.
double image_norm_ortho(const OperatorSpec& spec, const std::vector<double>& u,
                        std::size_t out_len);

// Largest singular value via power iteration on M^T M with the deterministic
// all-ones start vector. A lower bound for the untruncated operator norm.
// Throws NumericError at the iteration cap.
double op_norm(const TruncatedOperator& op, double tol = 1e-10, std::size_t max_iter = 100000);

// The same power iteration with rows regenerated from the kernel table on
// each pass; O(N) storage for truncations past the dense comfort zone.
double op_norm_streaming(const OperatorSpec& spec, std::size_t N, double tol = 1e-10,
                         std::size_t max_iter = 100000);

// Norm of the output-side tail: the N_big truncation with rows 0..N_keep-1
// zeroed (the finite-rank part keeps the first N_keep output coefficients).
double tail_norm(const OperatorSpec& spec, std::size_t N_keep, std::size_t N_big,
                 double tol = 1e-10, int jobs = 1);

}  // namespace fhl
