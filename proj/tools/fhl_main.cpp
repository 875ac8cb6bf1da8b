// fhl: Hilbert-type operators between weighted Fock spaces, desk-scale
// experiment harness. Subcommands cover moments/Carleson evidence, operator
// norms, coefficient images, the threshold and Carleson scans, compactness
// trends, the lemma verifications, and the disk-model necessity scan.
//
// Exit codes: 0 success, 1 a verified bound was violated, 2 configuration or
// parse error, 3 numerical nonconvergence.
#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fhl/errors.hpp"
#include "fhl/experiments.hpp"
#include "fhl/fock_space.hpp"
#include "fhl/hilbert_ops.hpp"
#include "fhl/radial_measure.hpp"
#include "fhl/report.hpp"
#include "fhl/special_functions.hpp"

namespace {

using fhl::format_double;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct OutputOpts {
  std::string out;
  std::string format = "csv";
};

void add_output_opts(CLI::App* cmd, OutputOpts& opts) {
  cmd->add_option("--out", opts.out, "Output file (stdout when omitted)");
  cmd->add_option("--format", opts.format, "Report format")
      ->check(CLI::IsMember({"csv", "json"}));
}

// Writes the report; the one-line summary always lands on a stream the
// report does not occupy.
void emit(const OutputOpts& opts, const std::string& csv, const std::string& jsn,
          const std::string& summary) {
  const std::string& body = opts.format == "json" ? jsn : csv;
  if (opts.out.empty()) {
    std::cout << body;
    std::cerr << summary << '\n';
  } else {
    std::ofstream f(opts.out, std::ios::binary);
    if (!f) throw fhl::ConfigError("cannot open output file: " + opts.out);
    f << body;
    std::cout << summary << '\n';
  }
}

fhl::MeasureSpec load_measure(const std::string& arg) {
  std::string text = arg;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw fhl::ConfigError("empty measure spec");
  if (text[first] != '{') {
    std::ifstream f(arg);
    if (!f) throw fhl::ConfigError("cannot open measure file: " + arg);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  return fhl::parse_measure_json(text);
}

json config_json(const CLI::App* cmd) {
  json j = json::object();
  for (const CLI::Option* opt : cmd->get_options()) {
    if (opt->get_name() == "--help") continue;
    if (!opt->count() && opt->get_default_str().empty()) continue;
    const auto results = opt->results();
    if (results.empty())
      j[opt->get_name()] = opt->get_default_str();
    else if (results.size() == 1)
      j[opt->get_name()] = results[0];
    else
      j[opt->get_name()] = results;
  }
  return j;
}

std::string timestamp_utc() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

// JSON reports carry the full config and a timestamp; CSV stays free of
// volatile fields so identical configs give byte-identical files.
std::string wrap_json(const json& config, const json& payload) {
  json j{{"config", config}, {"generated_at", timestamp_utc()}};
  for (const auto& [k, v] : payload.items()) j[k] = v;
  return j.dump(2) + "\n";
}

std::string scan_json(const CLI::App* cmd, const fhl::ScanReport& report) {
  json payload = json::parse(fhl::report_to_json(report));
  return wrap_json(config_json(cmd), payload);
}

// ---------------------------------------------------------------------------
// Operator construction shared by opnorm/apply.
// ---------------------------------------------------------------------------

struct OperatorOpts {
  std::string op;
  std::string measure;
  double lambda = 1.0;
  bool lambda_set = false;
  double theta = 1.0;
  double alpha = 0.0;
  double beta = 0.0;
};

void add_operator_opts(CLI::App* cmd, OperatorOpts& o) {
  cmd->add_option("--op", o.op, "Operator: hlambda | hcheck | hmu | hlambdamu")->required();
  cmd->add_option("--measure", o.measure, "Measure JSON (inline or file path)");
  cmd->add_option("--lambda", o.lambda, "Exponent lambda")->each([&](const std::string&) {
    o.lambda_set = true;
  });
  cmd->add_option("--theta", o.theta, "Weight theta")->check(CLI::PositiveNumber);
  cmd->add_option("--alpha", o.alpha, "Source exponent alpha");
  cmd->add_option("--beta", o.beta, "Target exponent beta");
}

fhl::OperatorSpec build_operator(const OperatorOpts& o) {
  const fhl::FockWeight src(o.theta, o.alpha), dst(o.theta, o.beta);
  if (o.op == "hlambda") {
    if (!o.lambda_set) throw fhl::ConfigError("hlambda requires --lambda");
    return fhl::OperatorSpec(fhl::HLambda{o.lambda}, src, dst);
  }
  if (o.op == "hcheck") return fhl::OperatorSpec(fhl::HCheck{}, src, dst);
  if (o.op == "hmu") {
    if (o.measure.empty()) throw fhl::ConfigError("hmu requires --measure");
    return fhl::OperatorSpec(fhl::HMu{load_measure(o.measure)}, src, dst);
  }
  if (o.op == "hlambdamu") {
    if (!o.lambda_set) throw fhl::ConfigError("hlambdamu requires --lambda");
    if (o.measure.empty()) throw fhl::ConfigError("hlambdamu requires --measure");
    return fhl::OperatorSpec(fhl::HLambdaMu{o.lambda, load_measure(o.measure)}, src, dst);
  }
  throw fhl::ConfigError("unknown operator: " + o.op);
}

// ---------------------------------------------------------------------------
// Subcommand runners.
// ---------------------------------------------------------------------------

int run_moments(const CLI::App* cmd, const std::string& measure, long n_max,
                const OutputOpts& out) {
  if (n_max < 0) throw fhl::ConfigError("--n must be nonnegative");
  const auto m = load_measure(measure);
  const auto table = fhl::moment_table(m, std::max<long>(n_max, 1));

  std::ostringstream csv;
  csv << "n,moment\n";
  json values = json::array();
  for (long n = 0; n <= n_max; ++n) {
    csv << n << ',' << format_double(table[n]) << '\n';
    values.push_back(table[n]);
  }
  const std::string summary =
      "moments: " + m.id() + " n=0.." + std::to_string(n_max) + " mu[0]=" + format_double(table[0]);
  emit(out, csv.str(), wrap_json(config_json(cmd), json{{"moments", values}}), summary);
  return kExitOk;
}

int run_carleson(const CLI::App* cmd, const std::string& measure, double s,
                 const OutputOpts& out) {
  const auto m = load_measure(measure);
  const auto grid = fhl::default_carleson_grid();
  const double constant = fhl::carleson_constant(m, s, grid);
  const auto profile = fhl::vanishing_profile(m, s, grid);

  std::ostringstream csv;
  csv << "t,quotient\n";
  json rows = json::array();
  for (const auto& [t, q] : profile) {
    csv << format_double(t) << ',' << format_double(q) << '\n';
    rows.push_back(json::array({t, q}));
  }
  const std::string summary = "carleson: " + m.id() + " s=" + format_double(s) +
                              " constant=" + format_double(constant);
  emit(out, csv.str(),
       wrap_json(config_json(cmd), json{{"constant", constant}, {"profile", rows}}), summary);
  return kExitOk;
}

int run_opnorm(const CLI::App* cmd, const OperatorOpts& op_opts, long N, double tol, int jobs,
               const OutputOpts& out) {
  if (N < 1) throw fhl::ConfigError("--N must be >= 1");
  const auto spec = build_operator(op_opts);
  // dense up to the 128 MiB comfort zone, streamed rows beyond
  const double value =
      N <= 4096
          ? fhl::op_norm(fhl::build_truncated(spec, static_cast<std::size_t>(N), jobs), tol)
          : fhl::op_norm_streaming(spec, static_cast<std::size_t>(N), tol);

  std::ostringstream csv;
  csv << "N,opnorm\n" << N << ',' << format_double(value) << '\n';
  const std::string summary =
      "opnorm: op=" + spec.kernel_name() + " N=" + std::to_string(N) + " value=" + format_double(value);
  emit(out, csv.str(), wrap_json(config_json(cmd), json{{"opnorm", value}}), summary);
  return kExitOk;
}

std::vector<fhl::Complex> read_coeff_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw fhl::ConfigError("cannot open coefficient file: " + path);
  std::vector<fhl::Complex> coeffs;
  std::string line;
  while (std::getline(f, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ss(line);
    double re = 0.0, im = 0.0;
    if (!(ss >> re >> im)) throw fhl::ConfigError("coefficient file: expected 're im' per line");
    coeffs.emplace_back(re, im);
  }
  if (coeffs.empty()) throw fhl::ConfigError("coefficient file is empty");
  return coeffs;
}

int run_apply(const CLI::App* cmd, const OperatorOpts& op_opts, const std::string& coeff_path,
              long out_len, const OutputOpts& out) {
  if (out_len < 1) throw fhl::ConfigError("--N must be >= 1");
  const auto spec = build_operator(op_opts);
  const fhl::CoeffVec f(read_coeff_file(coeff_path));
  const auto image = fhl::apply(spec, f, static_cast<std::size_t>(out_len));

  std::ostringstream body;
  json rows = json::array();
  for (std::size_t n = 0; n < image.trunc(); ++n) {
    body << format_double(image[n].real()) << ' ' << format_double(image[n].imag()) << '\n';
    rows.push_back(json::array({image[n].real(), image[n].imag()}));
  }
  const double nrm = std::sqrt(fhl::norm_sq(image, spec.target()));
  const std::string summary = "apply: op=" + spec.kernel_name() + " out_len=" +
                              std::to_string(out_len) + " image_norm=" + format_double(nrm);
  emit(out, body.str(), wrap_json(config_json(cmd), json{{"image", rows}, {"image_norm", nrm}}),
       summary);
  return kExitOk;
}

int run_scan_threshold(const CLI::App* cmd, double theta, double alpha, double beta,
                       const std::vector<double>& lambda_grid, const std::vector<long>& N_grid,
                       double tol, int jobs, const OutputOpts& out) {
  const auto report = fhl::threshold_scan(theta, alpha, beta, lambda_grid, N_grid, jobs, tol);
  const std::string summary = "scan-threshold: lambda_star=" + *report.find_meta("lambda_star") +
                              " cells=" + std::to_string(report.cells.size());
  emit(out, fhl::report_to_csv(report), scan_json(cmd, report), summary);
  return kExitOk;
}

int run_scan_carleson(const CLI::App* cmd, const std::string& measure, double theta, double alpha,
                      double beta, const std::vector<long>& N_grid,
                      std::optional<double> lambda, double tol, int jobs, const OutputOpts& out) {
  const auto m = load_measure(measure);
  const auto report =
      fhl::carleson_boundedness_experiment(m, theta, alpha, beta, N_grid, jobs, tol, lambda);
  const std::string summary = "scan-carleson: measure=" + m.id() +
                              " constant=" + *report.find_meta("carleson_constant") +
                              " cells=" + std::to_string(report.cells.size());
  emit(out, fhl::report_to_csv(report), scan_json(cmd, report), summary);
  return kExitOk;
}

int run_compactness(const CLI::App* cmd, const std::string& measure, double theta, double alpha,
                    double beta, const std::vector<long>& keep_grid,
                    const std::vector<double>& w_grid, long N_big, long N_witness, double tol,
                    int jobs, const OutputOpts& out) {
  const auto m = load_measure(measure);
  const auto report = fhl::compactness_experiment(m, theta, alpha, beta, keep_grid, w_grid, N_big,
                                                  N_witness, jobs, tol);
  const std::string summary =
      "compactness: measure=" + m.id() + " cells=" + std::to_string(report.cells.size());
  emit(out, fhl::report_to_csv(report), scan_json(cmd, report), summary);
  return kExitOk;
}

int run_verify_lemmas(const CLI::App* cmd, double theta, double alpha, double beta, long max_index,
                      const OutputOpts& out) {
  std::vector<long> idx;
  for (long n = 0; n <= max_index; ++n) idx.push_back(n);
  const auto lemma = fhl::check_lemma_w_bounds(theta, alpha, beta, idx, idx);

  bool violated = lemma.any_violation();
  std::ostringstream csv;
  csv << "check,label,value,bound,ok\n";
  json checks = json::array();
  auto row = [&](const std::string& check, const std::string& label, double value, double bound,
                 bool ok) {
    csv << check << ',' << label << ',' << format_double(value) << ',' << format_double(bound)
        << ',' << (ok ? 1 : 0) << '\n';
    checks.push_back(json{{"check", check}, {"label", label}, {"value", value}, {"bound", bound},
                          {"ok", ok}});
  };

  for (const auto& w : lemma.w1)
    row("w1", "n=" + std::to_string(w.index), w.value, w.bound, !w.violated);
  for (const auto& w : lemma.w2)
    row("w2", "k=" + std::to_string(w.index), w.value, w.bound, !w.violated);

  for (double x : {1.0, 2.0, 5.0, 10.0, 100.0}) {
    const auto s = fhl::stirling_sandwich(x);
    if (!s.holds()) violated = true;
    row("stirling", "x=" + format_double(x), s.lhs, s.rhs, s.holds());
  }

  std::vector<double> ws;
  for (int i = 0; i <= 9; ++i) ws.push_back(0.5 + 0.05 * i);
  ws.push_back(0.995);
  for (double c : {0.5, 1.0, 1.5, 2.0}) {
    const auto est = fhl::check_est(c, ws);
    const bool ok = est.finite_positive();
    if (!ok) violated = true;
    row("est", "c=" + format_double(c) + " min", est.r_min, est.r_max, ok);
  }

  const std::string summary = std::string("verify-lemmas: ") +
                              (violated ? "VIOLATION" : "all bounds hold") +
                              " (max certified error " + format_double(lemma.max_certified_error()) +
                              ")";
  emit(out, csv.str(), wrap_json(config_json(cmd), json{{"checks", checks}, {"ok", !violated}}),
       summary);
  return violated ? kExitViolation : kExitOk;
}

int run_hardy_scan(const CLI::App* cmd, const std::string& model_name, double p,
                   double model_alpha, bool model_alpha_set, double gx, bool gx_set,
                   const std::vector<double>& lambda_grid, const std::vector<long>& N_grid,
                   int jobs, const OutputOpts& out) {
  fhl::XpModel model = [&] {
    if (model_name == "hardy") return fhl::XpModel::hardy(p);
    if (model_name == "dirichlet") {
      if (!model_alpha_set) throw fhl::ConfigError("dirichlet model requires --model-alpha");
      return fhl::XpModel::dirichlet(p, model_alpha);
    }
    if (model_name == "bergman") {
      if (!model_alpha_set) throw fhl::ConfigError("bergman model requires --model-alpha");
      return fhl::XpModel::bergman(p, model_alpha);
    }
    if (model_name == "custom") {
      if (!gx_set) throw fhl::ConfigError("custom model requires --gx");
      return fhl::XpModel::custom(p, gx);
    }
    throw fhl::ConfigError("unknown model: " + model_name);
  }();

  const auto report = fhl::proposition_scan(model, lambda_grid, N_grid, jobs);
  const std::string summary = "hardy-scan: model=" + model.label +
                              " G_X=" + format_double(model.g_x) +
                              " cells=" + std::to_string(report.cells.size());
  emit(out, fhl::report_to_csv(report), scan_json(cmd, report), summary);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert-type operators between weighted Fock spaces"};
  app.require_subcommand(1);

  int jobs = 1;
  app.add_option("--jobs", jobs, "Parallel scan cells")
      ->envname("FHL_DEFAULT_JOBS")
      ->check(CLI::PositiveNumber);

  // moments
  auto* c_moments = app.add_subcommand("moments", "Moment table of a measure");
  std::string m_measure;
  long m_n = 16;
  OutputOpts m_out;
  c_moments->add_option("--measure", m_measure, "Measure JSON (inline or file)")->required();
  c_moments->add_option("--n", m_n, "Largest moment index");
  add_output_opts(c_moments, m_out);

  // carleson
  auto* c_carleson = app.add_subcommand("carleson", "Carleson constant and vanishing profile");
  std::string ca_measure;
  double ca_s = 1.0;
  OutputOpts ca_out;
  c_carleson->add_option("--measure", ca_measure, "Measure JSON (inline or file)")->required();
  c_carleson->add_option("--s", ca_s, "Carleson exponent")->required()->check(CLI::PositiveNumber);
  add_output_opts(c_carleson, ca_out);

  // opnorm
  auto* c_opnorm = app.add_subcommand("opnorm", "Truncated operator norm");
  OperatorOpts on_op;
  long on_N = 64;
  double on_tol = 1e-9;
  OutputOpts on_out;
  add_operator_opts(c_opnorm, on_op);
  c_opnorm->add_option("--N", on_N, "Truncation size");
  c_opnorm->add_option("--tol", on_tol, "Power-iteration relative tolerance");
  add_output_opts(c_opnorm, on_out);

  // apply
  auto* c_apply = app.add_subcommand("apply", "Image of a coefficient file");
  OperatorOpts ap_op;
  std::string ap_coeffs;
  long ap_N = 16;
  OutputOpts ap_out;
  add_operator_opts(c_apply, ap_op);
  c_apply->add_option("--coeffs", ap_coeffs, "Coefficient file, one 're im' per line")->required();
  c_apply->add_option("--N", ap_N, "Output truncation");
  add_output_opts(c_apply, ap_out);

  // scan-threshold
  auto* c_thresh = app.add_subcommand("scan-threshold", "H_lambda boundedness threshold scan");
  double th_theta = 1.0, th_alpha = 0.0, th_beta = 0.0, th_tol = 1e-9;
  std::vector<double> th_lambdas;
  std::vector<long> th_Ns;
  OutputOpts th_out;
  c_thresh->add_option("--theta", th_theta)->check(CLI::PositiveNumber);
  c_thresh->add_option("--alpha", th_alpha);
  c_thresh->add_option("--beta", th_beta);
  c_thresh->add_option("--grid-lambda", th_lambdas, "Lambda grid")->required()->delimiter(',');
  c_thresh->add_option("--grid-N", th_Ns, "Truncation grid")->required()->delimiter(',');
  c_thresh->add_option("--tol", th_tol);
  add_output_opts(c_thresh, th_out);

  // scan-carleson
  auto* c_scanc = app.add_subcommand("scan-carleson", "H_mu Carleson boundedness experiment");
  std::string sc_measure;
  double sc_theta = 1.0, sc_alpha = 0.0, sc_beta = 0.0, sc_tol = 1e-9, sc_lambda = 1.0;
  bool sc_lambda_set = false;
  std::vector<long> sc_Ns;
  OutputOpts sc_out;
  c_scanc->add_option("--measure", sc_measure)->required();
  c_scanc->add_option("--theta", sc_theta)->check(CLI::PositiveNumber);
  c_scanc->add_option("--alpha", sc_alpha);
  c_scanc->add_option("--beta", sc_beta);
  c_scanc->add_option("--grid-N", sc_Ns, "Truncation grid")->required()->delimiter(',');
  c_scanc->add_option("--lambda", sc_lambda, "Use H_lambda^mu with this lambda")
      ->each([&](const std::string&) { sc_lambda_set = true; });
  c_scanc->add_option("--tol", sc_tol);
  add_output_opts(c_scanc, sc_out);

  // compactness
  auto* c_comp = app.add_subcommand("compactness", "H_mu compactness trends");
  std::string co_measure;
  double co_theta = 1.0, co_alpha = 0.0, co_beta = 0.0, co_tol = 1e-9;
  std::vector<long> co_keeps;
  std::vector<double> co_ws;
  long co_Nbig = 1024, co_Nwit = 4096;
  OutputOpts co_out;
  c_comp->add_option("--measure", co_measure)->required();
  c_comp->add_option("--theta", co_theta)->check(CLI::PositiveNumber);
  c_comp->add_option("--alpha", co_alpha);
  c_comp->add_option("--beta", co_beta);
  c_comp->add_option("--grid-nkeep", co_keeps, "Kept-output grid")->required()->delimiter(',');
  c_comp->add_option("--grid-w", co_ws, "Witness w grid")->required()->delimiter(',');
  c_comp->add_option("--N-big", co_Nbig, "Truncation for tail norms");
  c_comp->add_option("--N-witness", co_Nwit, "Truncation for witness norms");
  c_comp->add_option("--tol", co_tol);
  add_output_opts(c_comp, co_out);

  // verify-lemmas
  auto* c_verify = app.add_subcommand("verify-lemmas", "w-bounds, Stirling sandwich, estimate (4.1)");
  double ve_theta = 1.0, ve_alpha = 0.0, ve_beta = 0.0;
  long ve_n = 64;
  OutputOpts ve_out;
  c_verify->add_option("--theta", ve_theta)->check(CLI::PositiveNumber);
  c_verify->add_option("--alpha", ve_alpha);
  c_verify->add_option("--beta", ve_beta);
  c_verify->add_option("--n", ve_n, "Largest index checked");
  add_output_opts(c_verify, ve_out);

  // hardy-scan
  auto* c_hardy = app.add_subcommand("hardy-scan", "Property-(*) necessity scan");
  std::string ha_model = "hardy";
  double ha_p = 2.0, ha_malpha = 0.0, ha_gx = 0.0;
  bool ha_malpha_set = false, ha_gx_set = false;
  std::vector<double> ha_lambdas;
  std::vector<long> ha_Ns;
  OutputOpts ha_out;
  c_hardy->add_option("--model", ha_model, "hardy | dirichlet | bergman | custom");
  c_hardy->add_option("--p", ha_p, "Exponent p")->check(CLI::PositiveNumber);
  c_hardy->add_option("--model-alpha", ha_malpha, "Dirichlet/Bergman alpha")
      ->each([&](const std::string&) { ha_malpha_set = true; });
  c_hardy->add_option("--gx", ha_gx, "Custom G_X")->each([&](const std::string&) {
    ha_gx_set = true;
  });
  c_hardy->add_option("--grid-lambda", ha_lambdas, "Lambda grid")->required()->delimiter(',');
  c_hardy->add_option("--grid-N", ha_Ns, "Truncation grid")->required()->delimiter(',');
  add_output_opts(c_hardy, ha_out);

  // let --jobs appear after the subcommand name as well
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*c_moments) return run_moments(c_moments, m_measure, m_n, m_out);
    if (*c_carleson) return run_carleson(c_carleson, ca_measure, ca_s, ca_out);
    if (*c_opnorm) return run_opnorm(c_opnorm, on_op, on_N, on_tol, jobs, on_out);
    if (*c_apply) return run_apply(c_apply, ap_op, ap_coeffs, ap_N, ap_out);
    if (*c_thresh)
      return run_scan_threshold(c_thresh, th_theta, th_alpha, th_beta, th_lambdas, th_Ns, th_tol,
                                jobs, th_out);
    if (*c_scanc)
      return run_scan_carleson(c_scanc, sc_measure, sc_theta, sc_alpha, sc_beta, sc_Ns,
                               sc_lambda_set ? std::optional<double>(sc_lambda) : std::nullopt,
                               sc_tol, jobs, sc_out);
    if (*c_comp)
      return run_compactness(c_comp, co_measure, co_theta, co_alpha, co_beta, co_keeps, co_ws,
                             co_Nbig, co_Nwit, co_tol, jobs, co_out);
    if (*c_verify) return run_verify_lemmas(c_verify, ve_theta, ve_alpha, ve_beta, ve_n, ve_out);
    if (*c_hardy)
      return run_hardy_scan(c_hardy, ha_model, ha_p, ha_malpha, ha_malpha_set, ha_gx, ha_gx_set,
                            ha_lambdas, ha_Ns, jobs, ha_out);
  } catch (const fhl::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const fhl::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::overflow_error& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::bad_alloc&) {
    std::cerr << "config error: requested truncation exceeds available memory\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitConfig;
}
