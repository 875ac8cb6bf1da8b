#include "fhl/radial_measure.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fhl/errors.hpp"
#include "fhl/quadrature.hpp"
#include "fhl/special_functions.hpp"

namespace fhl {
namespace {

constexpr double kMomentAbsTol = 1e-12;

double eval_density(const MeasureSpec::Density& d, double t, double dist) {
  return d.rho(d.distance_form ? dist : t);
}

// Estimate the decay exponent sigma in rho ~ (1-t)^sigma from dyadic probes
// and pick the grading so that (sigma+1)*kappa >= 2 (the graded integrand is
// then at least C^1 at the endpoint).
int probe_grading(const MeasureSpec::Density& d) {
  double probes[12];
  for (int j = 0; j < 12; ++j) {
    const double dist = std::ldexp(1.0, -(j + 6));
    probes[j] = eval_density(d, 1.0 - dist, dist);
    if (!std::isfinite(probes[j]) || probes[j] < 0.0)
      throw std::invalid_argument("MeasureSpec::density: density must be finite and nonnegative on probes");
  }
  double slope_sum = 0.0;
  int slope_count = 0;
  for (int j = 0; j + 1 < 12; ++j) {
    if (probes[j] > 0.0 && probes[j + 1] > 0.0) {
      slope_sum += std::log2(probes[j] / probes[j + 1]);
      ++slope_count;
    }
  }
  if (slope_count == 0) return 2;  // density vanishes near 1, no grading needed
  const double sigma = slope_sum / slope_count;
  if (sigma <= -0.95) return 32;  // barely integrable or worse; quadrature will flag divergence
  const int kappa = static_cast<int>(std::ceil(2.0 / (sigma + 1.0)));
  return std::clamp(kappa, 2, 32);
}

double atom_moment(const MeasureSpec::Atoms& a, std::size_t n) {
  double acc = 0.0;
  for (const Atom& at : a.atoms) acc += at.mass * std::pow(at.t, static_cast<double>(n));
  return acc;
}

// c * B(n+1, s) through log_gamma; stays finite for n up to ~1e6.
double power_moment(const MeasureSpec::Power& p, std::size_t n) {
  if (p.c == 0.0) return 0.0;
  const double dn = static_cast<double>(n);
  return p.c * std::exp(log_gamma(dn + 1.0) + log_gamma(p.s) - log_gamma(dn + 1.0 + p.s));
}

double density_moment(const MeasureSpec::Density& d, std::size_t n) {
  const double dn = static_cast<double>(n);
  auto f = [&](double t, double dist) { return eval_density(d, t, dist) * std::pow(t, dn); };
  return integrate_graded_tail(f, 0.0, d.kappa, kMomentAbsTol).value;
}

}  // namespace

MeasureSpec MeasureSpec::atoms(std::vector<Atom> atoms) {
  for (const Atom& a : atoms) {
    if (!std::isfinite(a.t) || a.t < 0.0 || a.t >= 1.0)
      throw std::invalid_argument("MeasureSpec::atoms: positions must lie in [0,1)");
    if (!std::isfinite(a.mass) || a.mass < 0.0)
      throw std::invalid_argument("MeasureSpec::atoms: masses must be nonnegative");
  }
  return MeasureSpec(Atoms{std::move(atoms)});
}

MeasureSpec MeasureSpec::power(double c, double s) {
  if (!std::isfinite(c) || c < 0.0)
    throw std::invalid_argument("MeasureSpec::power: c must be nonnegative");
  if (!std::isfinite(s) || s <= 0.0)
    throw std::invalid_argument("MeasureSpec::power: s must be positive");
  return MeasureSpec(Power{c, s});
}

MeasureSpec MeasureSpec::build_density(std::function<double(double)> rho, bool distance_form) {
  if (!rho) throw std::invalid_argument("MeasureSpec::density: empty function handle");
  Density d{std::move(rho), distance_form, 2};
  d.kappa = probe_grading(d);
  // Declared integrable; verify the total mass numerically now so that a
  // divergent handle fails loudly here instead of deep inside a scan.
  MeasureSpec spec{Variant{d}};
  const double mass = moment(spec, 0);
  if (!std::isfinite(mass)) throw NumericError("MeasureSpec::density: total mass is not finite");
  return spec;
}

MeasureSpec MeasureSpec::density(std::function<double(double)> rho_of_t) {
  return build_density(std::move(rho_of_t), false);
}

MeasureSpec MeasureSpec::density_of_distance(std::function<double(double)> rho_of_dist) {
  return build_density(std::move(rho_of_dist), true);
}

MeasureSpec MeasureSpec::mixture(std::vector<MeasureSpec> parts) {
  return MeasureSpec(Mixture{std::move(parts)});
}

std::string MeasureSpec::id() const {
  std::ostringstream os;
  if (const auto* a = std::get_if<Atoms>(&v_)) {
    os << "atoms[" << a->atoms.size() << "]";
  } else if (const auto* p = std::get_if<Power>(&v_)) {
    os << "power(c=" << p->c << ",s=" << p->s << ")";
  } else if (const auto* d = std::get_if<Density>(&v_)) {
    os << "density(kappa=" << d->kappa << ")";
  } else {
    os << "mixture[" << std::get<Mixture>(v_).size() << "]";
  }
  return os.str();
}

double moment(const MeasureSpec& m, std::size_t n) {
  return std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MeasureSpec::Atoms>) {
          return atom_moment(v, n);
        } else if constexpr (std::is_same_v<T, MeasureSpec::Power>) {
          return power_moment(v, n);
        } else if constexpr (std::is_same_v<T, MeasureSpec::Density>) {
          return density_moment(v, n);
        } else {
          double acc = 0.0;
          for (const MeasureSpec& part : v) acc += moment(part, n);
          return acc;
        }
      },
      m.value());
}

MomentTable moment_table(const MeasureSpec& m, std::size_t N) {
  if (N < 1) throw std::invalid_argument("moment_table: N must be >= 1");
  MomentTable table;
  table.values.resize(N + 1);
  for (std::size_t n = 0; n <= N; ++n) table.values[n] = moment(m, n);

  const double mu0 = table.values[0];
  const double slack = 1e-12 * (mu0 + 1.0);
  for (std::size_t n = 0; n <= N; ++n) {
    if (table.values[n] < -slack)
      throw NumericError("moment_table: negative moment (quadrature accuracy)");
    table.values[n] = std::max(table.values[n], 0.0);
    if (n > 0 && table.values[n] > table.values[n - 1] + slack)
      throw NumericError("moment_table: moments not nonincreasing (quadrature accuracy)");
  }
  for (std::size_t n = 0; n + 2 <= N; ++n) {
    const double lhs = table.values[n] * table.values[n + 2];
    const double rhs = table.values[n + 1] * table.values[n + 1];
    if (lhs < rhs - 1e-12 * mu0 * mu0 - slack * slack)
      throw NumericError("moment_table: log-convexity violated (quadrature accuracy)");
  }
  return table;
}

double tail_mass(const MeasureSpec& m, double t) {
  if (!std::isfinite(t) || t < 0.0 || t >= 1.0)
    throw std::invalid_argument("tail_mass: t must lie in [0,1)");
  return std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MeasureSpec::Atoms>) {
          double acc = 0.0;
          for (const Atom& a : v.atoms)
            if (a.t >= t) acc += a.mass;
          return acc;
        } else if constexpr (std::is_same_v<T, MeasureSpec::Power>) {
          return v.c / v.s * std::pow(1.0 - t, v.s);
        } else if constexpr (std::is_same_v<T, MeasureSpec::Density>) {
          auto f = [&](double tt, double dist) { return eval_density(v, tt, dist); };
          return integrate_graded_tail(f, t, v.kappa, kMomentAbsTol).value;
        } else {
          double acc = 0.0;
          for (const MeasureSpec& part : v) acc += tail_mass(part, t);
          return acc;
        }
      },
      m.value());
}

std::vector<double> default_carleson_grid() {
  std::vector<double> grid;
  grid.reserve(41);
  for (int j = 0; j <= 40; ++j) grid.push_back(1.0 - std::ldexp(1.0, -j));
  return grid;
}

double carleson_constant(const MeasureSpec& m, double s, const std::vector<double>& grid) {
  if (!(s > 0.0)) throw std::invalid_argument("carleson_constant: s must be positive");
  if (grid.empty()) throw std::invalid_argument("carleson_constant: grid must be nonempty");
  double best = 0.0;
  for (double t : grid) {
    const double tail = tail_mass(m, t);
    if (tail == 0.0) continue;
    const double denom = std::pow(1.0 - t, s);
    const double q = denom > 0.0 ? tail / denom : std::numeric_limits<double>::infinity();
    best = std::max(best, q);
  }
  return best;
}

double carleson_constant(const MeasureSpec& m, double s) {
  return carleson_constant(m, s, default_carleson_grid());
}

std::vector<std::pair<double, double>> vanishing_profile(const MeasureSpec& m, double s,
                                                         const std::vector<double>& grid) {
  if (!(s > 0.0)) throw std::invalid_argument("vanishing_profile: s must be positive");
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    if (!(grid[i] < grid[i + 1]))
      throw std::invalid_argument("vanishing_profile: grid must increase toward 1");
  std::vector<std::pair<double, double>> out;
  out.reserve(grid.size());
  for (double t : grid) {
    const double tail = tail_mass(m, t);
    const double denom = std::pow(1.0 - t, s);
    double q = 0.0;
    if (tail > 0.0)
      q = denom > 0.0 ? tail / denom : std::numeric_limits<double>::infinity();
    out.emplace_back(t, q);
  }
  return out;
}

MeasureSpec lambda_transform(const MeasureSpec& m, double lambda) {
  if (!std::isfinite(lambda) || lambda <= 0.0)
    throw std::invalid_argument("lambda_transform: lambda must be positive");
  if (lambda == 1.0) return m;
  return std::visit(
      [&](const auto& v) -> MeasureSpec {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MeasureSpec::Atoms>) {
          std::vector<Atom> out = v.atoms;
          for (Atom& a : out) a.mass *= std::pow(1.0 - a.t, lambda - 1.0);
          return MeasureSpec::atoms(std::move(out));
        } else if constexpr (std::is_same_v<T, MeasureSpec::Power>) {
          const double s_new = v.s + lambda - 1.0;
          if (s_new <= 0.0)
            throw NumericError("lambda_transform: transformed power measure has infinite mass");
          return MeasureSpec::power(v.c, s_new);
        } else if constexpr (std::is_same_v<T, MeasureSpec::Density>) {
          auto rho = v.rho;
          if (v.distance_form)
            return MeasureSpec::density_of_distance(
                [rho, lambda](double dist) { return rho(dist) * std::pow(dist, lambda - 1.0); });
          return MeasureSpec::density(
              [rho, lambda](double t) { return rho(t) * std::pow(1.0 - t, lambda - 1.0); });
        } else {
          std::vector<MeasureSpec> parts;
          parts.reserve(v.size());
          for (const MeasureSpec& part : v) parts.push_back(lambda_transform(part, lambda));
          return MeasureSpec::mixture(std::move(parts));
        }
      },
      m.value());
}

namespace {

using nlohmann::json;

void require_keys(const json& j, std::initializer_list<const char*> allowed) {
  for (const auto& item : j.items()) {
    bool ok = false;
    for (const char* k : allowed)
      if (item.key() == k) ok = true;
    if (!ok) throw ConfigError("measure json: unknown key '" + item.key() + "'");
  }
  for (const char* k : allowed)
    if (!j.contains(k)) throw ConfigError(std::string("measure json: missing key '") + k + "'");
}

double number_at(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_number()) throw ConfigError(std::string("measure json: '") + key + "' must be a number");
  return v.get<double>();
}

MeasureSpec measure_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
    throw ConfigError("measure json: expected an object with a string 'type'");
  const std::string type = j.at("type").get<std::string>();
  try {
    if (type == "atoms") {
      require_keys(j, {"type", "atoms"});
      const json& arr = j.at("atoms");
      if (!arr.is_array()) throw ConfigError("measure json: 'atoms' must be an array");
      std::vector<Atom> atoms;
      for (const json& e : arr) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
          throw ConfigError("measure json: each atom must be [t, mass]");
        atoms.push_back(Atom{e[0].get<double>(), e[1].get<double>()});
      }
      return MeasureSpec::atoms(std::move(atoms));
    }
    if (type == "power") {
      require_keys(j, {"type", "c", "s"});
      return MeasureSpec::power(number_at(j, "c"), number_at(j, "s"));
    }
    if (type == "mixture") {
      require_keys(j, {"type", "parts"});
      const json& arr = j.at("parts");
      if (!arr.is_array()) throw ConfigError("measure json: 'parts' must be an array");
      std::vector<MeasureSpec> parts;
      for (const json& e : arr) parts.push_back(measure_from_json(e));
      return MeasureSpec::mixture(std::move(parts));
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("measure json: ") + e.what());
  }
  throw ConfigError("measure json: unknown type '" + type + "'");
}

json measure_as_json(const MeasureSpec& m) {
  return std::visit(
      [&](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MeasureSpec::Atoms>) {
          json arr = json::array();
          for (const Atom& a : v.atoms) arr.push_back(json::array({a.t, a.mass}));
          return json{{"type", "atoms"}, {"atoms", arr}};
        } else if constexpr (std::is_same_v<T, MeasureSpec::Power>) {
          return json{{"type", "power"}, {"c", v.c}, {"s", v.s}};
        } else if constexpr (std::is_same_v<T, MeasureSpec::Density>) {
          throw ConfigError("measure json: general densities are programmatic only");
        } else {
          json arr = json::array();
          for (const MeasureSpec& part : v) arr.push_back(measure_as_json(part));
          return json{{"type", "mixture"}, {"parts", arr}};
        }
      },
      m.value());
}

}  // namespace

MeasureSpec parse_measure_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("measure json: parse failure: ") + e.what());
  }
  return measure_from_json(j);
}

std::string measure_to_json(const MeasureSpec& m) { return measure_as_json(m).dump(); }

}  // namespace fhl
