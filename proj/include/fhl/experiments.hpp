// Desk-scale experiments: the extremal test families from the proofs, the
// w-bound lemma checks with certified tails, threshold/Carleson/compactness
// scans over truncations, the (4.1) series estimate, and the property-(*)
// disk model with its lambda >= 1 necessity scan.
//
// Divergence cannot be proven numerically: every "unbounded" verdict is a
// growth-ratio trend against frozen calibration factors, never a boolean.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fhl/fock_space.hpp"
#include "fhl/hilbert_ops.hpp"
#include "fhl/radial_measure.hpp"
#include "fhl/report.hpp"

namespace fhl {

// ---------------------------------------------------------------------------
// Test families (Taylor-coefficient form).
// ---------------------------------------------------------------------------

// a_0 = 0, a_k = sqrt(eps theta^eps) (k+theta)^{-(alpha+1+eps)/2} / sqrt(k!);
// unit-ball family with ||f_eps||^2 <= 1 for every truncation.
CoeffVec make_f_eps(double eps, const FockWeight& w, std::size_t N);

// a_k = (1-w^2)^{1/2} (k+theta)^{-alpha/2} w^k / sqrt(k!).
CoeffVec make_f_w(double w_val, const FockWeight& w, std::size_t N);

// a_k = (1-w^2)^{(1+alpha)/2} w^k / sqrt(k!)  (theta-independent coefficients).
CoeffVec make_f_tilde(double w_val, double alpha, std::size_t N);

// The same families in orthonormal coordinates (factorials cancel; these stay
// representable to arbitrary truncations and are what the scans consume):
//   f_eps:   u_0 = 0, u_k = sqrt(eps theta^eps) (k+theta)^{-(1+eps)/2}
//   f_w:     u_k = sqrt(1-w^2) w^k
//   f_tilde: u_k = (1-w^2)^{(1+alpha)/2} (k+theta)^{alpha/2} w^k
std::vector<double> f_eps_ortho(double eps, const FockWeight& w, std::size_t N);
std::vector<double> f_w_ortho(double w_val, std::size_t N);
std::vector<double> f_tilde_ortho(double w_val, const FockWeight& w, std::size_t N);

// ---------------------------------------------------------------------------
// Lemma w-bound checks.
// ---------------------------------------------------------------------------

struct LemmaWitness {
  long index;             // n (for w1) or k (for w2)
  double value;           // certified series value
  double certified_error; // total certified absolute error of `value`
  double bound;           // B((1+beta)/2,(1-alpha)/2) (n+theta)^{-beta} resp. (k+theta)^{alpha}
  bool violated;          // value exceeds bound beyond the certified error
};

struct LemmaWReport {
  double theta = 0.0, alpha = 0.0, beta = 0.0;
  double beta_constant = 0.0;  // B((1+beta)/2, (1-alpha)/2)
  std::vector<LemmaWitness> w1;
  std::vector<LemmaWitness> w2;

  bool any_violation() const;
  double max_certified_error() const;
};

// w1(n) = sum_k (k+n+2 theta)^{-(1+(beta-alpha)/2)} (n+theta)^{(1-beta)/2} (k+theta)^{-(1+alpha)/2},
// evaluated as a K-term partial sum plus an Euler-Maclaurin tail whose
// certified error is kept below err_target; symmetrically for w2(k).
LemmaWReport check_lemma_w_bounds(double theta, double alpha, double beta,
                                  const std::vector<long>& n_list,
                                  const std::vector<long>& k_list, double err_target = 1e-10);

// Single w1/w2 evaluations (exposed for the tests' direct-summation oracle).
double w1_value(double theta, double alpha, double beta, long n, double err_target,
                double* certified_error = nullptr);
double w2_value(double theta, double alpha, double beta, long k, double err_target,
                double* certified_error = nullptr);

// ---------------------------------------------------------------------------
// Scans.
// ---------------------------------------------------------------------------

// H_lambda truncation norms over (lambda, N); for lambda below the threshold
// lambda* = 1 + (beta-alpha)/2 also records the lower-bound witness
// ||H_lambda f_eps|| with eps = ((beta-alpha) + 2(1-lambda))/2.
ScanReport threshold_scan(double theta, double alpha, double beta,
                          const std::vector<double>& lambda_grid,
                          const std::vector<long>& N_grid, int jobs = 1, double tol = 1e-9);

// H_mu truncation norms over N paired with the s*-Carleson evidence
// (s* = 1 + (beta-alpha)/2). With `lambda` present the operator is
// H_lambda^mu, i.e. H_nu for d nu = (1-t)^{lambda-1} d mu.
ScanReport carleson_boundedness_experiment(const MeasureSpec& m, double theta, double alpha,
                                           double beta, const std::vector<long>& N_grid,
                                           int jobs = 1, double tol = 1e-9,
                                           std::optional<double> lambda = std::nullopt);

// Three side-by-side compactness trends: output-side tail norms over
// N_keep_grid at fixed N_big, witness norms ||H_mu f~_w|| over w_grid
// (truncation N_witness), and the vanishing profile Q_{s*}(t).
ScanReport compactness_experiment(const MeasureSpec& m, double theta, double alpha, double beta,
                                  const std::vector<long>& N_keep_grid,
                                  const std::vector<double>& w_grid, long N_big = 1024,
                                  long N_witness = 4096, int jobs = 1, double tol = 1e-9);

// ---------------------------------------------------------------------------
// The (4.1) estimate.
// ---------------------------------------------------------------------------

struct EstReport {
  double c = 0.0;
  std::vector<std::pair<double, double>> values;  // (w, R(w))
  double r_min = 0.0;
  double r_max = 0.0;

  bool finite_positive() const;
};

// R(w) = (1-w^2)^c sum_{n>=1} n^{c-1} w^{2n}, summed until a geometric tail
// bound certifies relative accuracy 1e-14.
EstReport check_est(double c, const std::vector<double>& w_list);

// ---------------------------------------------------------------------------
// Property-(*) disk model.
// ---------------------------------------------------------------------------

// A coefficient-characterized space: f in X_p iff sum n^{G_X} a_n^p < inf
// (decreasing nonnegative a_n). G_X > -1 always; p > 1.
struct XpModel {
  double p;
  double g_x;
  std::string label;

  static XpModel hardy(double p);                    // G_X = p-2
  static XpModel dirichlet(double p, double alpha);  // p-2 < alpha <= p-1, G_X = 2p-3-alpha
  static XpModel bergman(double p, double alpha);    // -1 < alpha < p-2,  G_X = 2p-3-alpha
  static XpModel custom(double p, double g_x);
};

// Nonnegative sequence a_0..a_{N-1}. The property-(*) characterization
// assumes a nonincreasing sequence; operations whose contracts require it
// (apply_hhat) enforce is_nonincreasing on their input.
class XpSeq {
 public:
  explicit XpSeq(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t n) const { return values_[n]; }
  const std::vector<double>& values() const { return values_; }
  bool is_nonincreasing() const;

 private:
  std::vector<double> values_;
};

// sum_{1 <= n < N} n^{G_X} a_n^p  (the n = 0 term is excluded).
double xp_norm_p(const XpSeq& a, const XpModel& model);

// b_n = sum_k a_k / (k+n+1)^lambda, n < out_len; nonincreasing by construction.
XpSeq apply_hhat(const XpSeq& a, double lambda, std::size_t out_len);

// a^_0 = (eps/(1+eps))^{1/p}, a^_k = (eps/(1+eps))^{1/p} k^{-(G_X+1+eps)/p}.
XpSeq make_f_hat(double eps, const XpModel& model, std::size_t N);

// For each lambda: the X_p norm metric (p-th root of xp_norm_p) of
// H^_lambda f^_eps across N_grid, with eps = p(1-lambda)/2 for lambda < 1 and
// eps = 0.1 otherwise. Growth ratios expose the lambda >= 1 necessity.
ScanReport proposition_scan(const XpModel& model, const std::vector<double>& lambda_grid,
                            const std::vector<long>& N_grid, int jobs = 1);

}  // namespace fhl
