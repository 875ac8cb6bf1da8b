#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "fhl/errors.hpp"
#include "fhl/experiments.hpp"
#include "fhl/special_functions.hpp"

using fhl::CoeffVec;
using fhl::FockWeight;
using fhl::MeasureSpec;
using fhl::XpModel;
using fhl::XpSeq;

TEST_CASE("make_f_eps examples") {
  const FockWeight w(1.0, 0.0);
  const auto f = fhl::make_f_eps(1.0, w, 2);
  CHECK(std::abs(f[0]) == 0.0);
  CHECK(f[1].real() == doctest::Approx(0.5).epsilon(1e-13));

  for (double eps : {0.1, 0.5, 1.0, 2.0})
    for (const FockWeight& fw : {FockWeight(1.0, 0.0), FockWeight(0.5, -0.5), FockWeight(2.0, 0.5)})
      for (std::size_t N : {16u, 256u, 4096u})
        CHECK(fhl::norm_sq(fhl::make_f_eps(eps, fw, N), fw) <= 1.0 + 1e-12);
}

TEST_CASE("make_f_w examples and bracket") {
  const FockWeight w10(1.0, 0.0);
  CHECK(fhl::make_f_w(0.5, w10, 4)[0].real() == doctest::Approx(std::sqrt(0.75)).epsilon(1e-13));

  // alpha = 0: geometric series gives exactly 1 - w^{2N}
  CHECK(fhl::norm_sq(fhl::make_f_w(0.5, w10, 2048), w10) == doctest::Approx(1.0).epsilon(1e-12));

  // frozen two-sided bracket C = 1.05 at N = 4096
  const double C = 1.05;
  for (const FockWeight& fw : {FockWeight(1.0, 0.0), FockWeight(0.5, -0.5), FockWeight(2.0, 0.5)})
    for (double wv : {0.3, 0.5, 0.9, 0.99}) {
      const double n2 = fhl::norm_sq(fhl::make_f_w(wv, fw, 4096), fw);
      CHECK(n2 >= 1.0 / (C * C));
      CHECK(n2 <= C * C);
    }
}

TEST_CASE("make_f_tilde examples and bracket") {
  CHECK(fhl::make_f_tilde(0.5, 0.0, 4)[1].real() ==
        doctest::Approx(std::sqrt(0.75) * 0.5).epsilon(1e-13));
  CHECK(fhl::make_f_tilde(0.5, 1.0, 4)[0].real() == doctest::Approx(0.75).epsilon(1e-13));

  // frozen bracket: norm^2 within [1/2.5, 2.5] for the tested weights
  for (const FockWeight& fw :
       {FockWeight(0.5, -0.5), FockWeight(1.0, 0.0), FockWeight(2.0, 0.5)})
    for (double wv : {0.3, 0.9, 0.99}) {
      const double n2 = fhl::norm_sq(fhl::make_f_tilde(wv, fw.alpha, 4096), fw);
      CHECK(n2 >= 1.0 / 2.5);
      CHECK(n2 <= 2.5);
    }
}

TEST_CASE("orthonormal family builders agree with the coefficient families") {
  const FockWeight fw(0.8, -0.4);
  const std::size_t N = 64;

  const auto u_eps = fhl::to_orthonormal(fhl::make_f_eps(0.7, fw, N), fw);
  const auto v_eps = fhl::f_eps_ortho(0.7, fw, N);
  for (std::size_t k = 0; k < N; ++k)
    CHECK(std::abs(u_eps.values[k] - v_eps[k]) <= 1e-12 * (1.0 + v_eps[k]));

  const auto u_w = fhl::to_orthonormal(fhl::make_f_w(0.6, fw, N), fw);
  const auto v_w = fhl::f_w_ortho(0.6, N);
  for (std::size_t k = 0; k < N; ++k)
    CHECK(std::abs(u_w.values[k] - v_w[k]) <= 1e-12 * (1.0 + v_w[k]));

  const auto u_t = fhl::to_orthonormal(fhl::make_f_tilde(0.6, fw.alpha, N), fw);
  const auto v_t = fhl::f_tilde_ortho(0.6, fw, N);
  for (std::size_t k = 0; k < N; ++k)
    CHECK(std::abs(u_t.values[k] - v_t[k]) <= 1e-12 * (1.0 + v_t[k]));
}

TEST_CASE("check_lemma_w_bounds on a small grid") {
  std::vector<long> idx;
  for (long n = 0; n <= 8; ++n) idx.push_back(n);
  const auto report = fhl::check_lemma_w_bounds(1.0, 0.0, 0.0, idx, idx);
  CHECK_FALSE(report.any_violation());
  CHECK(report.max_certified_error() < 1e-10);
  CHECK(report.beta_constant == doctest::Approx(M_PI).epsilon(1e-12));
  CHECK(report.w1[0].value <= M_PI);
  CHECK(report.w1[0].value > 0.0);
}

TEST_CASE("w1 matches a direct-summation sandwich") {
  // theta = 1, alpha = beta = 0: w1(0) = sum_k (k+2)^{-3/2+...}, here
  // (k+2)^{-1} (k+1)^{-1/2}; partial sum plus a crude integral bound brackets it.
  const std::size_t K = 100000;
  double partial = 0.0;
  for (std::size_t k = 0; k < K; ++k)
    partial += 1.0 / ((k + 2.0) * std::sqrt(k + 1.0));
  const double tail_hi = std::pow(K + 1.0, -0.5) / 0.5;

  double cert = 0.0;
  const double value = fhl::w1_value(1.0, 0.0, 0.0, 0, 1e-10, &cert);
  CHECK(value >= partial - 1e-12);
  CHECK(value <= partial + tail_hi + 1e-12);
  CHECK(cert < 1e-10);
}

TEST_CASE("w2 matches a direct-summation sandwich") {
  // theta = 0.5, alpha = 0.5, beta = -0.5: summand (n+1)^{-3/4} -> needs the
  // certified tail; sandwich with the crude integral bound.
  const double theta = 0.5, alpha = 0.5, beta_t = -0.5;
  const double s = 1.0 + 0.5 * (beta_t - alpha);  // 0.5
  const double p = 0.5 * (1.0 - beta_t);          // 0.75
  const std::size_t K = 200000;
  const long k_idx = 3;
  double partial = 0.0;
  for (std::size_t n = 0; n < K; ++n)
    partial += std::pow(n + k_idx + 2.0 * theta, -s) * std::pow(n + theta, -p);
  const double pref = std::pow(k_idx + theta, 0.5 * (1.0 + alpha));
  const double tail_hi = pref * std::pow(K + theta, 1.0 - s - p) / (s + p - 1.0);

  double cert = 0.0;
  const double value = fhl::w2_value(theta, alpha, beta_t, k_idx, 1e-10, &cert);
  CHECK(value >= pref * partial - 1e-10);
  CHECK(value <= pref * partial + tail_hi + 1e-10);
  CHECK(cert < 1e-10);
}

TEST_CASE("threshold_scan structure") {
  const auto r00 = fhl::threshold_scan(1.0, 0.0, 0.0, {1.0}, {8, 16});
  CHECK(*r00.find_meta("lambda_star") == fhl::format_double(1.0));

  const auto r = fhl::threshold_scan(1.0, -0.5, 0.5, {1.0, 1.5}, {8, 16, 32});
  CHECK(*r.find_meta("lambda_star") == fhl::format_double(1.5));

  // opnorm cells nondecreasing along N for each lambda (nesting)
  for (double lam : {1.0, 1.5}) {
    double prev = 0.0;
    for (const auto& cell : r.cells)
      if (cell.series == "opnorm" && cell.param == lam) {
        CHECK(cell.value >= prev - 1e-10);
        prev = cell.value;
      }
  }
  // lambda = 1.0 < lambda* carries a witness; lambda = 1.5 does not
  int witnesses = 0;
  for (const auto& cell : r.cells)
    if (cell.series == "witness") {
      ++witnesses;
      CHECK(cell.param == 1.0);
      CHECK(cell.value > 0.0);
    }
  CHECK(witnesses == 1);
}

TEST_CASE("scan reports are byte-identical across job counts") {
  const auto a = fhl::threshold_scan(1.0, 0.0, 0.5, {1.0, 1.25}, {8, 16, 32}, 1);
  const auto b = fhl::threshold_scan(1.0, 0.0, 0.5, {1.0, 1.25}, {8, 16, 32}, 8);
  CHECK(fhl::report_to_csv(a) == fhl::report_to_csv(b));
}

TEST_CASE("carleson experiment on the rank-one point mass at 0") {
  const auto m = MeasureSpec::atoms({fhl::Atom{0.0, 1.0}});
  const auto r = fhl::carleson_boundedness_experiment(m, 4.0, 0.0, 0.5, {4, 16, 64});
  const double expected = std::pow(4.0, 0.25);
  for (const auto& cell : r.cells)
    if (cell.series == "opnorm") CHECK(cell.value == doctest::Approx(expected).epsilon(1e-9));
  CHECK(*r.find_meta("s_star") == fhl::format_double(1.25));
}

TEST_CASE("carleson experiment with the lambda transform matches the plain one") {
  // H_lambda^mu with lambda = 2 on Lebesgue equals H_nu with nu = power(1,2)
  const auto direct =
      fhl::carleson_boundedness_experiment(MeasureSpec::power(1.0, 2.0), 1.0, 0.0, 0.5, {8, 16});
  const auto transformed = fhl::carleson_boundedness_experiment(
      MeasureSpec::power(1.0, 1.0), 1.0, 0.0, 0.5, {8, 16}, 1, 1e-9, 2.0);
  for (std::size_t i = 0; i < direct.cells.size(); ++i)
    if (direct.cells[i].series == "opnorm")
      CHECK(direct.cells[i].value == doctest::Approx(transformed.cells[i].value).epsilon(1e-12));
}

TEST_CASE("compactness experiment trends at small scale") {
  const auto m = MeasureSpec::power(1.0, 1.75);  // s* + 0.5 for (alpha,beta)=(0,0.5)
  const auto r = fhl::compactness_experiment(m, 1.0, 0.0, 0.5, {8, 32}, {0.9, 0.99}, 128, 512);

  double prev_tail = std::numeric_limits<double>::infinity();
  double prev_wit = std::numeric_limits<double>::infinity();
  int profiles = 0;
  for (const auto& cell : r.cells) {
    if (cell.series == "tail_norm") {
      CHECK(cell.value < prev_tail);
      prev_tail = cell.value;
    } else if (cell.series == "witness") {
      CHECK(cell.value < prev_wit);
      prev_wit = cell.value;
    } else if (cell.series == "profile") {
      ++profiles;
    }
  }
  CHECK(profiles == 41);
}

TEST_CASE("check_est exact cases and frozen brackets") {
  for (double c : {1.0, 2.0}) {
    const auto r = fhl::check_est(c, {0.5, 0.9, 0.99});
    for (const auto& [w, R] : r.values) CHECK(R == doctest::Approx(w * w).epsilon(1e-12));
  }

  // frozen from the oracle run: c = 0.5 -> [0.25, 1.80]; c = 1.5 -> [0.22, 0.95]
  std::vector<double> ws;
  for (double w = 0.5; w <= 0.9901; w += 0.01) ws.push_back(w);
  ws.push_back(0.995);
  const auto r05 = fhl::check_est(0.5, ws);
  CHECK(r05.finite_positive());
  CHECK(r05.r_min > 0.25);
  CHECK(r05.r_max < 1.80);
  const auto r15 = fhl::check_est(1.5, ws);
  CHECK(r15.finite_positive());
  CHECK(r15.r_min > 0.22);
  CHECK(r15.r_max < 0.95);
}

TEST_CASE("check_est brackets absorb w -> 1 (limit Gamma(c))") {
  // enlarging the list toward 1 never exits the frozen brackets
  std::vector<double> ws{0.5, 0.9, 0.99, 0.999, 0.9999};
  const double brackets[4][3] = {
      {0.5, 0.25, 1.80}, {1.0, 0.24, 1.00 + 1e-12}, {1.5, 0.22, 0.95}, {2.0, 0.24, 1.00 + 1e-12}};
  for (const auto& b : brackets) {
    const auto r = fhl::check_est(b[0], ws);
    CHECK(r.r_min > b[1]);
    CHECK(r.r_max < b[2] + 1e-9);
  }
}

TEST_CASE("xp_norm_p examples") {
  const XpModel hardy2 = XpModel::hardy(2.0);
  CHECK(fhl::xp_norm_p(XpSeq({1.0, 0.0, 0.0}), hardy2) == 0.0);
  CHECK(fhl::xp_norm_p(XpSeq({0.0, 1.0, 0.5}), hardy2) == doctest::Approx(1.25).epsilon(1e-14));

  // Basel series: a_n = 1/n, G = 0, p = 2
  std::vector<double> a(1000000, 0.0);
  a[0] = 1.0;
  for (std::size_t n = 1; n < a.size(); ++n) a[n] = 1.0 / static_cast<double>(n);
  CHECK(fhl::xp_norm_p(XpSeq(std::move(a)), hardy2) ==
        doctest::Approx(M_PI * M_PI / 6.0).epsilon(1e-5));
}

TEST_CASE("apply_hhat examples") {
  const auto unit = XpSeq({1.0, 0.0, 0.0});
  const auto img = fhl::apply_hhat(unit, 0.8, 6);
  for (std::size_t n = 0; n < 6; ++n)
    CHECK(img[n] == doctest::Approx(std::pow(n + 1.0, -0.8)).epsilon(1e-13));

  const auto pair = fhl::apply_hhat(XpSeq({1.0, 1.0}), 1.0, 3);
  CHECK(pair[0] == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(pair[1] == doctest::Approx(0.5 + 1.0 / 3.0).epsilon(1e-14));

  CHECK_THROWS_AS(fhl::apply_hhat(XpSeq({0.0, 1.0}), 1.0, 2), std::invalid_argument);
}

TEST_CASE("apply_hhat preserves the nonincreasing property") {
  std::vector<double> a(64);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = 1.0 / (1.0 + 0.3 * k);
  const auto img = fhl::apply_hhat(XpSeq(std::move(a)), 0.6, 64);
  CHECK(img.is_nonincreasing());
}

TEST_CASE("make_f_hat examples and membership") {
  const XpModel hardy2 = XpModel::hardy(2.0);
  const auto f = fhl::make_f_hat(1.0, hardy2, 8);
  CHECK(f[1] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-13));
  CHECK(f[0] == doctest::Approx(f[1]).epsilon(1e-13));
  CHECK(f.is_nonincreasing());

  // xp_norm_p(f_hat) < 1 for every truncation: (eps/(1+eps)) sum k^{-1-eps} < 1
  for (double eps : {0.1, 0.5, 2.0})
    for (std::size_t N : {64u, 4096u})
      CHECK(fhl::xp_norm_p(fhl::make_f_hat(eps, hardy2, N), hardy2) < 1.0);
}

TEST_CASE("XpModel validation") {
  CHECK(XpModel::hardy(2.0).g_x == doctest::Approx(0.0));
  CHECK(XpModel::hardy(3.0).g_x == doctest::Approx(1.0));
  CHECK(XpModel::dirichlet(2.0, 0.5).g_x == doctest::Approx(0.5));
  CHECK(XpModel::bergman(4.0, 0.5).g_x == doctest::Approx(4.5));
  CHECK_THROWS_AS(XpModel::custom(2.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(XpModel::custom(0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(XpModel::dirichlet(2.0, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(XpModel::bergman(2.0, 0.5), std::invalid_argument);
}

TEST_CASE("proposition_scan smoke") {
  const auto r = fhl::proposition_scan(XpModel::hardy(2.0), {0.75, 1.0}, {256, 512, 1024});
  double grow_last = 0.0, stable_last = 0.0;
  for (const auto& cell : r.cells) {
    if (cell.param == 0.75 && cell.trunc == 1024) grow_last = cell.ratio;
    if (cell.param == 1.0 && cell.trunc == 1024) stable_last = cell.ratio;
  }
  CHECK(grow_last > stable_last);
  CHECK(*r.find_meta("epsilon(lambda=0.75)") == fhl::format_double(0.25));
  CHECK(*r.find_meta("epsilon(lambda=1)") == fhl::format_double(0.1));
}

TEST_CASE("report csv shape") {
  const auto r = fhl::threshold_scan(1.0, 0.0, 0.0, {1.0}, {4, 8});
  const std::string csv = fhl::report_to_csv(r);
  CHECK(csv.rfind("series,parameter,N,value,ratio\n", 0) == 0);
  CHECK(csv.find("opnorm,1,4,") != std::string::npos);
  const std::string json = fhl::report_to_json(r);
  CHECK(json.find("\"experiment\"") != std::string::npos);
}
