#include "fhl/hilbert_ops.hpp"

#include <cmath>
#include <stdexcept>

#include "fhl/errors.hpp"
#include "fhl/parallel.hpp"
#include "fhl/special_functions.hpp"

namespace fhl {
namespace {

double kernel_factor(const OperatorSpec& spec, std::size_t n, std::size_t k,
                     const MomentTable* moments) {
  const double m = static_cast<double>(n + k);
  return std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, HLambda>) {
          return 1.0 / (std::pow(m, v.lambda) + 1.0);
        } else if constexpr (std::is_same_v<T, HCheck>) {
          const double ex = 1.0 + 0.5 * (spec.beta() - spec.alpha());
          return std::pow(m + 2.0 * spec.theta(), -ex);
        } else {
          if (moments == nullptr || moments->max_index() < n + k)
            throw std::invalid_argument("entry: moment table missing index n+k");
          return (*moments)[n + k];
        }
      },
      spec.kernel());
}

}  // namespace

OperatorSpec::OperatorSpec(Kernel kernel, FockWeight source, FockWeight target)
    : kernel_(std::move(kernel)), source_(source), target_(target) {
  if (source_.theta != target_.theta)
    throw std::invalid_argument("OperatorSpec: source and target must share theta");
  if (const auto* h = std::get_if<HLambda>(&kernel_)) {
    if (!std::isfinite(h->lambda) || h->lambda <= 0.0)
      throw std::invalid_argument("OperatorSpec: lambda must be positive");
  }
  if (const auto* h = std::get_if<HLambdaMu>(&kernel_)) {
    if (!std::isfinite(h->lambda) || h->lambda <= 0.0)
      throw std::invalid_argument("OperatorSpec: lambda must be positive");
  }
}

bool OperatorSpec::needs_moments() const {
  return std::holds_alternative<HMu>(kernel_) || std::holds_alternative<HLambdaMu>(kernel_);
}

MeasureSpec OperatorSpec::effective_measure() const {
  if (const auto* h = std::get_if<HMu>(&kernel_)) return h->measure;
  if (const auto* h = std::get_if<HLambdaMu>(&kernel_))
    return lambda_transform(h->measure, h->lambda);
  throw std::logic_error("OperatorSpec: kernel carries no measure");
}

std::string OperatorSpec::kernel_name() const {
  if (std::holds_alternative<HLambda>(kernel_)) return "hlambda";
  if (std::holds_alternative<HCheck>(kernel_)) return "hcheck";
  if (std::holds_alternative<HMu>(kernel_)) return "hmu";
  return "hlambdamu";
}

double entry(const OperatorSpec& spec, std::size_t n, std::size_t k,
             const MomentTable* moments) {
  const double wn = std::pow(static_cast<double>(n) + spec.theta(), 0.5 * spec.beta());
  const double wk = std::pow(static_cast<double>(k) + spec.theta(), -0.5 * spec.alpha());
  return wn * wk * kernel_factor(spec, n, k, moments);
}

std::vector<double> kernel_table(const OperatorSpec& spec, std::size_t max_sum) {
  std::vector<double> table(max_sum + 1);
  if (spec.needs_moments()) {
    const MomentTable moments = moment_table(spec.effective_measure(), std::max<std::size_t>(max_sum, 1));
    for (std::size_t m = 0; m <= max_sum; ++m) table[m] = moments[m];
    return table;
  }
  for (std::size_t m = 0; m <= max_sum; ++m) table[m] = kernel_factor(spec, m, 0, nullptr);
  return table;
}

namespace {

std::vector<double> source_weights(const OperatorSpec& spec, std::size_t N) {
  std::vector<double> wk(N);
  for (std::size_t k = 0; k < N; ++k)
    wk[k] = std::pow(static_cast<double>(k) + spec.theta(), -0.5 * spec.alpha());
  return wk;
}

std::vector<double> target_weights(const OperatorSpec& spec, std::size_t N) {
  std::vector<double> wn(N);
  for (std::size_t n = 0; n < N; ++n)
    wn[n] = std::pow(static_cast<double>(n) + spec.theta(), 0.5 * spec.beta());
  return wn;
}

}  // namespace

TruncatedOperator build_truncated(const OperatorSpec& spec, std::size_t N, int jobs) {
  if (N < 1) throw std::invalid_argument("build_truncated: N must be >= 1");
  TruncatedOperator op{N, std::vector<double>(N * N), spec};

  const std::vector<double> kappa = kernel_table(spec, 2 * N - 2);
  const std::vector<double> wk = source_weights(spec, N);
  const std::vector<double> wn = target_weights(spec, N);

  parallel_for(N, jobs, [&](std::size_t n) {
    double* row = op.entries.data() + n * N;
    const double* k_row = kappa.data() + n;
    for (std::size_t k = 0; k < N; ++k) row[k] = wn[n] * wk[k] * k_row[k];
  });
  for (double v : op.entries)
    if (!std::isfinite(v) || v < 0.0)
      throw NumericError("build_truncated: non-finite or negative entry (weights out of range)");
  return op;
}

CoeffVec apply(const OperatorSpec& spec, const CoeffVec& f, std::size_t out_len) {
  if (out_len < 1) throw std::invalid_argument("apply: out_len must be >= 1");
  const std::size_t in_len = f.trunc();

  const std::vector<double> kappa = kernel_table(spec, out_len + in_len - 2);
  const std::vector<double> wk = source_weights(spec, in_len);
  const std::vector<double> wn = target_weights(spec, out_len);

  const OrthoVec u = to_orthonormal(f, spec.source());
  OrthoVec v;
  v.weight = spec.target();
  v.values.resize(out_len);
  for (std::size_t n = 0; n < out_len; ++n) {
    Complex acc(0.0, 0.0);
    for (std::size_t k = 0; k < in_len; ++k) acc += wn[n] * wk[k] * kappa[n + k] * u.values[k];
    v.values[n] = acc;
  }
  return from_orthonormal(v);
}

double image_norm_ortho(const OperatorSpec& spec, const std::vector<double>& u,
                        std::size_t out_len) {
  if (u.empty() || out_len < 1)
    throw std::invalid_argument("image_norm_ortho: empty input or output");
  const std::size_t in_len = u.size();

  const std::vector<double> kappa = kernel_table(spec, out_len + in_len - 2);
  const std::vector<double> wk = source_weights(spec, in_len);
  const std::vector<double> wn = target_weights(spec, out_len);

  // fold the source weights into the vector once
  std::vector<double> g(in_len);
  for (std::size_t k = 0; k < in_len; ++k) g[k] = wk[k] * u[k];

  double acc = 0.0;
  for (std::size_t n = 0; n < out_len; ++n) {
    const double* k_row = kappa.data() + n;
    double vn = 0.0;
    for (std::size_t k = 0; k < in_len; ++k) vn += k_row[k] * g[k];
    vn *= wn[n];
    acc += vn * vn;
  }
  return std::sqrt(acc);
}

std::vector<double> apply_ortho(const TruncatedOperator& op, const std::vector<double>& u) {
  if (u.size() != op.dim) throw std::invalid_argument("apply_ortho: dimension mismatch");
  std::vector<double> y(op.dim, 0.0);
  for (std::size_t n = 0; n < op.dim; ++n) {
    const double* row = op.entries.data() + n * op.dim;
    double acc = 0.0;
    for (std::size_t k = 0; k < op.dim; ++k) acc += row[k] * u[k];
    y[n] = acc;
  }
  return y;
}

double op_norm(const TruncatedOperator& op, double tol, std::size_t max_iter) {
  if (!(tol > 0.0)) throw std::invalid_argument("op_norm: tol must be positive");
  const std::size_t N = op.dim;
  std::vector<double> x(N, 1.0 / std::sqrt(static_cast<double>(N)));
  std::vector<double> y(N), z(N);

  double prev = 0.0;
  for (std::size_t it = 0; it < max_iter; ++it) {
    // y = M x
    for (std::size_t n = 0; n < N; ++n) {
      const double* row = op.entries.data() + n * N;
      double acc = 0.0;
      for (std::size_t k = 0; k < N; ++k) acc += row[k] * x[k];
      y[n] = acc;
    }
    double ny = 0.0;
    for (double v : y) ny += v * v;
    ny = std::sqrt(ny);
    if (ny == 0.0) return 0.0;

    // z = M^T y
    std::fill(z.begin(), z.end(), 0.0);
    for (std::size_t n = 0; n < N; ++n) {
      const double* row = op.entries.data() + n * N;
      const double yn = y[n];
      for (std::size_t k = 0; k < N; ++k) z[k] += row[k] * yn;
    }
    double nz = 0.0;
    for (double v : z) nz += v * v;
    nz = std::sqrt(nz);

    // ||x|| = 1, so ny is the Rayleigh estimate of the top singular value;
    // it is nondecreasing along the iteration for M^T M psd.
    if (std::fabs(ny - prev) <= tol * ny) return ny;
    prev = ny;
    for (std::size_t k = 0; k < N; ++k) x[k] = z[k] / nz;
  }
  throw NumericError("op_norm: power iteration did not converge within the iteration cap");
}

double op_norm_streaming(const OperatorSpec& spec, std::size_t N, double tol,
                         std::size_t max_iter) {
  if (N < 1) throw std::invalid_argument("op_norm_streaming: N must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("op_norm_streaming: tol must be positive");
  const std::vector<double> kappa = kernel_table(spec, 2 * N - 2);
  const std::vector<double> wk = source_weights(spec, N);
  const std::vector<double> wn = target_weights(spec, N);

  std::vector<double> x(N, 1.0 / std::sqrt(static_cast<double>(N)));
  std::vector<double> g(N), y(N), h(N), z(N);

  double prev = 0.0;
  for (std::size_t it = 0; it < max_iter; ++it) {
    for (std::size_t k = 0; k < N; ++k) g[k] = wk[k] * x[k];
    for (std::size_t n = 0; n < N; ++n) {
      const double* k_row = kappa.data() + n;
      double acc = 0.0;
      for (std::size_t k = 0; k < N; ++k) acc += k_row[k] * g[k];
      y[n] = wn[n] * acc;
    }
    double ny = 0.0;
    for (double v : y) ny += v * v;
    ny = std::sqrt(ny);
    if (ny == 0.0) return 0.0;

    for (std::size_t n = 0; n < N; ++n) h[n] = wn[n] * y[n];
    for (std::size_t k = 0; k < N; ++k) {
      const double* k_col = kappa.data() + k;
      double acc = 0.0;
      for (std::size_t n = 0; n < N; ++n) acc += k_col[n] * h[n];
      z[k] = wk[k] * acc;
    }
    double nz = 0.0;
    for (double v : z) nz += v * v;
    nz = std::sqrt(nz);

    if (std::fabs(ny - prev) <= tol * ny) return ny;
    prev = ny;
    for (std::size_t k = 0; k < N; ++k) x[k] = z[k] / nz;
  }
  throw NumericError("op_norm_streaming: power iteration did not converge within the iteration cap");
}

double tail_norm(const OperatorSpec& spec, std::size_t N_keep, std::size_t N_big, double tol,
                 int jobs) {
  if (N_keep > N_big) throw std::invalid_argument("tail_norm: N_keep must be <= N_big");
  TruncatedOperator op = build_truncated(spec, N_big, jobs);
  std::fill(op.entries.begin(), op.entries.begin() + N_keep * N_big, 0.0);
  return op_norm(op, tol);
}

}  // namespace fhl
