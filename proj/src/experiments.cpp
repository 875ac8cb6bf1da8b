#include "fhl/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fhl/errors.hpp"
#include "fhl/parallel.hpp"
#include "fhl/special_functions.hpp"

namespace fhl {
namespace {

void require_theorem_range(double theta, double alpha, double beta, const char* where) {
  if (!std::isfinite(theta) || theta <= 0.0)
    throw std::invalid_argument(std::string(where) + ": theta must be positive");
  if (!(alpha > -1.0 && alpha < 1.0 && beta > -1.0 && beta < 1.0))
    throw std::invalid_argument(std::string(where) + ": need -1 < alpha, beta < 1");
}

// log of sqrt(k!)
double half_log_factorial(std::size_t k) {
  return 0.5 * log_gamma(static_cast<double>(k) + 1.0);
}

// coefficient magnitude exp(log_mag - log sqrt(k!)), underflowing to zero
// beyond k ~ 300 (the documented raw-coefficient representation limit).
double coeff_from_log(double log_mag, std::size_t k) {
  return std::exp(log_mag - half_log_factorial(k));
}

}  // namespace

// ---------------------------------------------------------------------------
// Test families.
// ---------------------------------------------------------------------------

CoeffVec make_f_eps(double eps, const FockWeight& w, std::size_t N) {
  if (!(eps > 0.0)) throw std::invalid_argument("make_f_eps: eps must be positive");
  if (N < 1) throw std::invalid_argument("make_f_eps: N must be >= 1");
  std::vector<Complex> a(N, Complex(0.0, 0.0));
  const double log_front = 0.5 * (std::log(eps) + eps * std::log(w.theta));
  for (std::size_t k = 1; k < N; ++k) {
    const double log_mag =
        log_front - 0.5 * (w.alpha + 1.0 + eps) * std::log(static_cast<double>(k) + w.theta);
    a[k] = coeff_from_log(log_mag, k);
  }
  return CoeffVec(std::move(a));
}

CoeffVec make_f_w(double w_val, const FockWeight& w, std::size_t N) {
  if (!(w_val > 0.0 && w_val < 1.0))
    throw std::invalid_argument("make_f_w: w must lie in (0,1)");
  if (N < 1) throw std::invalid_argument("make_f_w: N must be >= 1");
  std::vector<Complex> a(N);
  const double log_front = 0.5 * std::log1p(-w_val * w_val);
  const double log_w = std::log(w_val);
  for (std::size_t k = 0; k < N; ++k) {
    const double log_mag = log_front -
                           0.5 * w.alpha * std::log(static_cast<double>(k) + w.theta) +
                           static_cast<double>(k) * log_w;
    a[k] = coeff_from_log(log_mag, k);
  }
  return CoeffVec(std::move(a));
}

CoeffVec make_f_tilde(double w_val, double alpha, std::size_t N) {
  if (!(w_val > 0.0 && w_val < 1.0))
    throw std::invalid_argument("make_f_tilde: w must lie in (0,1)");
  if (N < 1) throw std::invalid_argument("make_f_tilde: N must be >= 1");
  std::vector<Complex> a(N);
  const double log_front = 0.5 * (1.0 + alpha) * std::log1p(-w_val * w_val);
  const double log_w = std::log(w_val);
  for (std::size_t k = 0; k < N; ++k)
    a[k] = coeff_from_log(log_front + static_cast<double>(k) * log_w, k);
  return CoeffVec(std::move(a));
}

std::vector<double> f_eps_ortho(double eps, const FockWeight& w, std::size_t N) {
  if (!(eps > 0.0)) throw std::invalid_argument("f_eps_ortho: eps must be positive");
  std::vector<double> u(N, 0.0);
  const double front = std::sqrt(eps * std::pow(w.theta, eps));
  for (std::size_t k = 1; k < N; ++k)
    u[k] = front * std::pow(static_cast<double>(k) + w.theta, -0.5 * (1.0 + eps));
  return u;
}

std::vector<double> f_w_ortho(double w_val, std::size_t N) {
  std::vector<double> u(N);
  const double front = std::sqrt(1.0 - w_val * w_val);
  double pw = 1.0;
  for (std::size_t k = 0; k < N; ++k) {
    u[k] = front * pw;
    pw *= w_val;
  }
  return u;
}

std::vector<double> f_tilde_ortho(double w_val, const FockWeight& w, std::size_t N) {
  std::vector<double> u(N);
  const double front = std::pow(1.0 - w_val * w_val, 0.5 * (1.0 + w.alpha));
  double pw = 1.0;
  for (std::size_t k = 0; k < N; ++k) {
    u[k] = front * std::pow(static_cast<double>(k) + w.theta, 0.5 * w.alpha) * pw;
    pw *= w_val;
  }
  return u;
}

// ---------------------------------------------------------------------------
// Certified evaluation of w1/w2: partial sum + Euler-Maclaurin tail.
// ---------------------------------------------------------------------------

namespace {

// g(x) = (x+a)^{-s} (x+b)^{-p} with s, p > 0 and a >= b > 0: completely
// monotone on [0, inf), so the Euler-Maclaurin remainder after the -g'/12
// term is bounded by |g'''(K)|/720.
struct ShiftedProduct {
  double a, s, b, p;

  double operator()(double x) const {
    return std::pow(x + a, -s) * std::pow(x + b, -p);
  }
  double d1(double x) const { return -(s / (x + a) + p / (x + b)) * (*this)(x); }
  double d3_abs(double x) const {
    const double A = x + a, Bx = x + b;
    const double s2 = s * (s + 1.0), s3 = s2 * (s + 2.0);
    const double p2 = p * (p + 1.0), p3 = p2 * (p + 2.0);
    return std::pow(A, -s) * std::pow(Bx, -p) *
           (s3 / (A * A * A) + 3.0 * s2 * p / (A * A * Bx) + 3.0 * s * p2 / (A * Bx * Bx) +
            p3 / (Bx * Bx * Bx));
  }
};

// int_K^inf g dx = int_0^U u^{c-1} (1+z u)^{-s} du with c = s+p-1, z = a-b,
// U = 1/(K+b); alternating binomial series, certified once ratios fall
// below 1 (caller guarantees zU <= 1/2).
double em_tail_integral(const ShiftedProduct& g, double K, double series_tol) {
  const double c = g.s + g.p - 1.0;
  const double z = g.a - g.b;
  const double U = 1.0 / (K + g.b);

  double sum = 0.0;
  double mag = std::pow(U, c) / c;  // |t_0|
  double sign = 1.0;
  for (int j = 0; j < 1000; ++j) {
    sum += sign * mag;
    const double dj = static_cast<double>(j);
    const double ratio = (g.s + dj) / (dj + 1.0) * z * U * (c + dj) / (c + dj + 1.0);
    const double next = mag * ratio;
    if (ratio < 1.0 && next / (1.0 - ratio) <= series_tol) return sum;
    mag = next;
    sign = -sign;
  }
  throw NumericError("w-bound tail integral: series did not certify");
}

// sum_{j=0}^inf g(j) with certified absolute error <= err_target.
double shifted_product_sum(double a, double s, double b, double p, double err_target,
                           double* err_out) {
  const ShiftedProduct g{a, s, b, p};
  const double z = a - b;

  // K large enough for the series domain (zU <= 1/2) and the EM remainder.
  std::size_t K = 64;
  const double z_floor = 2.0 * z - b;
  while (static_cast<double>(K) < z_floor) K *= 2;
  while (g.d3_abs(static_cast<double>(K)) / 720.0 > 0.25 * err_target) {
    K *= 2;
    if (K > (1u << 22))
      throw NumericError("w-bound sum: certified tail needs too many terms");
  }

  double sum = 0.0;
  for (std::size_t j = 0; j < K; ++j) sum += g(static_cast<double>(j));

  const double dK = static_cast<double>(K);
  const double series_tol = 0.25 * err_target;
  const double tail = em_tail_integral(g, dK, series_tol) + 0.5 * g(dK) - g.d1(dK) / 12.0;
  const double em_err = g.d3_abs(dK) / 720.0;
  const double rounding = 2e-16 * static_cast<double>(K) * g(0.0) + 1e-15 * (sum + std::fabs(tail));
  if (err_out != nullptr) *err_out = em_err + series_tol + rounding;
  return sum + tail;
}

}  // namespace

double w1_value(double theta, double alpha, double beta, long n, double err_target,
                double* certified_error) {
  require_theorem_range(theta, alpha, beta, "w1_value");
  const double s = 1.0 + 0.5 * (beta - alpha);
  const double p = 0.5 * (1.0 + alpha);
  const double pref = std::pow(static_cast<double>(n) + theta, 0.5 * (1.0 - beta));
  double err = 0.0;
  const double sum =
      shifted_product_sum(static_cast<double>(n) + 2.0 * theta, s, theta, p, err_target / pref, &err);
  if (certified_error != nullptr) *certified_error = pref * err;
  return pref * sum;
}

double w2_value(double theta, double alpha, double beta, long k, double err_target,
                double* certified_error) {
  require_theorem_range(theta, alpha, beta, "w2_value");
  const double s = 1.0 + 0.5 * (beta - alpha);
  const double p = 0.5 * (1.0 - beta);
  const double pref = std::pow(static_cast<double>(k) + theta, 0.5 * (1.0 + alpha));
  double err = 0.0;
  const double sum =
      shifted_product_sum(static_cast<double>(k) + 2.0 * theta, s, theta, p, err_target / pref, &err);
  if (certified_error != nullptr) *certified_error = pref * err;
  return pref * sum;
}

bool LemmaWReport::any_violation() const {
  for (const LemmaWitness& w : w1)
    if (w.violated) return true;
  for (const LemmaWitness& w : w2)
    if (w.violated) return true;
  return false;
}

double LemmaWReport::max_certified_error() const {
  double worst = 0.0;
  for (const LemmaWitness& w : w1) worst = std::max(worst, w.certified_error);
  for (const LemmaWitness& w : w2) worst = std::max(worst, w.certified_error);
  return worst;
}

LemmaWReport check_lemma_w_bounds(double theta, double alpha, double beta,
                                  const std::vector<long>& n_list,
                                  const std::vector<long>& k_list, double err_target) {
  require_theorem_range(theta, alpha, beta, "check_lemma_w_bounds");
  LemmaWReport report;
  report.theta = theta;
  report.alpha = alpha;
  report.beta = beta;
  report.beta_constant = fhl::beta(0.5 * (1.0 + beta), 0.5 * (1.0 - alpha));

  for (long n : n_list) {
    LemmaWitness wit{};
    wit.index = n;
    wit.value = w1_value(theta, alpha, beta, n, err_target, &wit.certified_error);
    wit.bound = report.beta_constant * std::pow(static_cast<double>(n) + theta, -beta);
    wit.violated = wit.value > wit.bound + wit.certified_error;
    report.w1.push_back(wit);
  }
  for (long k : k_list) {
    LemmaWitness wit{};
    wit.index = k;
    wit.value = w2_value(theta, alpha, beta, k, err_target, &wit.certified_error);
    wit.bound = report.beta_constant * std::pow(static_cast<double>(k) + theta, alpha);
    wit.violated = wit.value > wit.bound + wit.certified_error;
    report.w2.push_back(wit);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Scans.
// ---------------------------------------------------------------------------

ScanReport threshold_scan(double theta, double alpha, double beta,
                          const std::vector<double>& lambda_grid,
                          const std::vector<long>& N_grid, int jobs, double tol) {
  require_theorem_range(theta, alpha, beta, "threshold_scan");
  if (lambda_grid.empty() || N_grid.empty())
    throw std::invalid_argument("threshold_scan: grids must be nonempty");
  std::vector<long> Ns = N_grid;
  std::sort(Ns.begin(), Ns.end());

  const double lambda_star = 1.0 + 0.5 * (beta - alpha);
  const FockWeight src(theta, alpha), dst(theta, beta);
  const long N_max = Ns.back();

  ScanReport report;
  report.experiment = "threshold_scan";
  report.add_meta("theta", theta);
  report.add_meta("alpha", alpha);
  report.add_meta("beta", beta);
  report.add_meta("lambda_star", lambda_star);

  struct Task {
    double lambda;
    long N;
    bool witness;
    double value;
  };
  std::vector<Task> tasks;
  for (double lam : lambda_grid) {
    for (long N : Ns) tasks.push_back(Task{lam, N, false, 0.0});
    if (lam < lambda_star) tasks.push_back(Task{lam, N_max, true, 0.0});
  }

  parallel_for(tasks.size(), jobs, [&](std::size_t i) {
    Task& t = tasks[i];
    const OperatorSpec spec(HLambda{t.lambda}, src, dst);
    if (t.witness) {
      const double eps = 0.5 * ((beta - alpha) + 2.0 * (1.0 - t.lambda));
      t.value = image_norm_ortho(spec, f_eps_ortho(eps, src, static_cast<std::size_t>(t.N)),
                                 static_cast<std::size_t>(t.N));
    } else {
      t.value = op_norm(build_truncated(spec, static_cast<std::size_t>(t.N)), tol);
    }
  });

  for (const Task& t : tasks)
    report.push_cell(t.witness ? "witness" : "opnorm", t.lambda, t.N, t.value);
  for (double lam : lambda_grid)
    if (lam < lambda_star) {
      std::ostringstream key;
      key << "epsilon(lambda=" << format_double(lam) << ")";
      report.add_meta(key.str(), 0.5 * ((beta - alpha) + 2.0 * (1.0 - lam)));
    }
  return report;
}

ScanReport carleson_boundedness_experiment(const MeasureSpec& m, double theta, double alpha,
                                           double beta, const std::vector<long>& N_grid,
                                           int jobs, double tol, std::optional<double> lambda) {
  require_theorem_range(theta, alpha, beta, "carleson_boundedness_experiment");
  if (N_grid.empty())
    throw std::invalid_argument("carleson_boundedness_experiment: N grid must be nonempty");
  std::vector<long> Ns = N_grid;
  std::sort(Ns.begin(), Ns.end());

  const double s_star = 1.0 + 0.5 * (beta - alpha);
  const FockWeight src(theta, alpha), dst(theta, beta);
  const OperatorSpec spec = lambda.has_value()
                                ? OperatorSpec(HLambdaMu{*lambda, m}, src, dst)
                                : OperatorSpec(HMu{m}, src, dst);
  // The Carleson evidence concerns the measure the operator actually sees.
  const MeasureSpec effective = spec.needs_moments() ? spec.effective_measure() : m;

  ScanReport report;
  report.experiment = "carleson_boundedness";
  report.add_meta("theta", theta);
  report.add_meta("alpha", alpha);
  report.add_meta("beta", beta);
  report.add_meta("s_star", s_star);
  report.add_meta("measure", m.id());
  report.add_meta("operator", spec.kernel_name());
  if (lambda.has_value()) report.add_meta("lambda", *lambda);
  report.add_meta("carleson_constant", carleson_constant(effective, s_star));

  std::vector<double> values(Ns.size());
  parallel_for(Ns.size(), jobs, [&](std::size_t i) {
    values[i] = op_norm(build_truncated(spec, static_cast<std::size_t>(Ns[i])), tol);
  });
  for (std::size_t i = 0; i < Ns.size(); ++i)
    report.push_cell("opnorm", s_star, Ns[i], values[i]);
  return report;
}

ScanReport compactness_experiment(const MeasureSpec& m, double theta, double alpha, double beta,
                                  const std::vector<long>& N_keep_grid,
                                  const std::vector<double>& w_grid, long N_big, long N_witness,
                                  int jobs, double tol) {
  require_theorem_range(theta, alpha, beta, "compactness_experiment");
  std::vector<long> keeps = N_keep_grid;
  std::sort(keeps.begin(), keeps.end());

  const double s_star = 1.0 + 0.5 * (beta - alpha);
  const FockWeight src(theta, alpha), dst(theta, beta);
  const OperatorSpec spec(HMu{m}, src, dst);

  ScanReport report;
  report.experiment = "compactness";
  report.add_meta("theta", theta);
  report.add_meta("alpha", alpha);
  report.add_meta("beta", beta);
  report.add_meta("s_star", s_star);
  report.add_meta("measure", m.id());
  report.add_meta("N_big", static_cast<double>(N_big));
  report.add_meta("N_witness", static_cast<double>(N_witness));

  std::vector<double> tail_values(keeps.size());
  std::vector<double> witness_values(w_grid.size());
  const std::size_t total = keeps.size() + w_grid.size();
  parallel_for(total, jobs, [&](std::size_t i) {
    if (i < keeps.size()) {
      tail_values[i] = tail_norm(spec, static_cast<std::size_t>(keeps[i]),
                                 static_cast<std::size_t>(N_big), tol);
    } else {
      const std::size_t j = i - keeps.size();
      witness_values[j] =
          image_norm_ortho(spec, f_tilde_ortho(w_grid[j], src, static_cast<std::size_t>(N_witness)),
                           static_cast<std::size_t>(N_witness));
    }
  });

  for (std::size_t i = 0; i < keeps.size(); ++i)
    report.push_cell("tail_norm", static_cast<double>(keeps[i]), N_big, tail_values[i]);
  for (std::size_t j = 0; j < w_grid.size(); ++j)
    report.push_cell("witness", w_grid[j], N_witness, witness_values[j]);
  for (const auto& [t, q] : vanishing_profile(m, s_star, default_carleson_grid()))
    report.push_cell("profile", t, 0, q);
  return report;
}

// ---------------------------------------------------------------------------
// The (4.1) estimate.
// ---------------------------------------------------------------------------

bool EstReport::finite_positive() const {
  return std::isfinite(r_min) && std::isfinite(r_max) && r_min > 0.0 && r_max > 0.0;
}

EstReport check_est(double c, const std::vector<double>& w_list) {
  if (!(c > 0.0)) throw std::invalid_argument("check_est: c must be positive");
  EstReport report;
  report.c = c;
  report.r_min = std::numeric_limits<double>::infinity();
  report.r_max = 0.0;
  for (double w : w_list) {
    if (!(w > 0.0 && w < 1.0))
      throw std::invalid_argument("check_est: w values must lie in (0,1)");
    const double x = w * w;
    double sum = 0.0;
    double R = 0.0;
    bool done = false;
    for (std::size_t n = 1; n <= 100000000; ++n) {
      const double dn = static_cast<double>(n);
      const double term = std::pow(dn, c - 1.0) * std::pow(x, dn);
      sum += term;
      const double ratio = x * std::max(1.0, std::pow((dn + 1.0) / dn, c - 1.0));
      if (ratio < 1.0 && term * ratio / (1.0 - ratio) <= 1e-14 * sum) {
        R = std::pow(1.0 - x, c) * sum;
        done = true;
        break;
      }
    }
    if (!done) throw NumericError("check_est: series tail bound not reached");
    report.values.emplace_back(w, R);
    report.r_min = std::min(report.r_min, R);
    report.r_max = std::max(report.r_max, R);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Property-(*) disk model.
// ---------------------------------------------------------------------------

namespace {

XpModel make_model(double p, double g_x, std::string label) {
  if (!(p > 1.0)) throw std::invalid_argument("XpModel: p must exceed 1");
  if (!(g_x > -1.0)) throw std::invalid_argument("XpModel: G_X must exceed -1");
  return XpModel{p, g_x, std::move(label)};
}

}  // namespace

XpModel XpModel::hardy(double p) { return make_model(p, p - 2.0, "hardy"); }

XpModel XpModel::dirichlet(double p, double alpha) {
  if (!(p - 2.0 < alpha && alpha <= p - 1.0))
    throw std::invalid_argument("XpModel::dirichlet: need p-2 < alpha <= p-1");
  return make_model(p, 2.0 * p - 3.0 - alpha, "dirichlet");
}

XpModel XpModel::bergman(double p, double alpha) {
  if (!(-1.0 < alpha && alpha < p - 2.0))
    throw std::invalid_argument("XpModel::bergman: need -1 < alpha < p-2");
  return make_model(p, 2.0 * p - 3.0 - alpha, "bergman");
}

XpModel XpModel::custom(double p, double g_x) { return make_model(p, g_x, "custom"); }

XpSeq::XpSeq(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("XpSeq: needs at least one value");
  for (double v : values_)
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument("XpSeq: values must be finite and nonnegative");
}

bool XpSeq::is_nonincreasing() const {
  const double slack = 1e-12 * (values_[0] + 1.0);
  for (std::size_t n = 1; n < values_.size(); ++n)
    if (values_[n] > values_[n - 1] + slack) return false;
  return true;
}

double xp_norm_p(const XpSeq& a, const XpModel& model) {
  double acc = 0.0;
  for (std::size_t n = 1; n < a.size(); ++n)
    acc += std::pow(static_cast<double>(n), model.g_x) * std::pow(a[n], model.p);
  return acc;
}

XpSeq apply_hhat(const XpSeq& a, double lambda, std::size_t out_len) {
  if (!(lambda > 0.0)) throw std::invalid_argument("apply_hhat: lambda must be positive");
  if (out_len < 1) throw std::invalid_argument("apply_hhat: out_len must be >= 1");
  if (!a.is_nonincreasing())
    throw std::invalid_argument("apply_hhat: input sequence must be nonincreasing");
  const std::size_t in_len = a.size();
  std::vector<double> table(in_len + out_len - 1);
  for (std::size_t m = 0; m < table.size(); ++m)
    table[m] = std::pow(static_cast<double>(m) + 1.0, -lambda);
  std::vector<double> b(out_len, 0.0);
  for (std::size_t n = 0; n < out_len; ++n) {
    double acc = 0.0;
    for (std::size_t k = 0; k < in_len; ++k) acc += a[k] * table[k + n];
    b[n] = acc;
  }
  XpSeq image(std::move(b));
  if (!image.is_nonincreasing())
    throw NumericError("apply_hhat: kernel failed to preserve monotonicity");
  return image;
}

XpSeq make_f_hat(double eps, const XpModel& model, std::size_t N) {
  if (!(eps > 0.0)) throw std::invalid_argument("make_f_hat: eps must be positive");
  if (N < 1) throw std::invalid_argument("make_f_hat: N must be >= 1");
  const double front = std::pow(eps / (1.0 + eps), 1.0 / model.p);
  const double ex = (model.g_x + 1.0 + eps) / model.p;
  std::vector<double> a(N);
  a[0] = front;
  for (std::size_t k = 1; k < N; ++k) a[k] = front * std::pow(static_cast<double>(k), -ex);
  return XpSeq(std::move(a));
}

ScanReport proposition_scan(const XpModel& model, const std::vector<double>& lambda_grid,
                            const std::vector<long>& N_grid, int jobs) {
  if (lambda_grid.empty() || N_grid.empty())
    throw std::invalid_argument("proposition_scan: grids must be nonempty");
  std::vector<long> Ns = N_grid;
  std::sort(Ns.begin(), Ns.end());

  ScanReport report;
  report.experiment = "proposition_scan";
  report.add_meta("model", model.label);
  report.add_meta("p", model.p);
  report.add_meta("G_X", model.g_x);

  struct Task {
    double lambda;
    long N;
    double value;
  };
  std::vector<Task> tasks;
  for (double lam : lambda_grid)
    for (long N : Ns) tasks.push_back(Task{lam, N, 0.0});

  parallel_for(tasks.size(), jobs, [&](std::size_t i) {
    Task& t = tasks[i];
    const double eps = t.lambda < 1.0 ? model.p * (1.0 - t.lambda) / 2.0 : 0.1;
    const XpSeq image = apply_hhat(make_f_hat(eps, model, static_cast<std::size_t>(t.N)),
                                   t.lambda, static_cast<std::size_t>(t.N));
    t.value = std::pow(xp_norm_p(image, model), 1.0 / model.p);
  });

  for (const Task& t : tasks) report.push_cell("xp_norm", t.lambda, t.N, t.value);
  for (double lam : lambda_grid) {
    std::ostringstream key;
    key << "epsilon(lambda=" << format_double(lam) << ")";
    report.add_meta(key.str(), lam < 1.0 ? model.p * (1.0 - lam) / 2.0 : 0.1);
  }
  return report;
}

}  // namespace fhl
