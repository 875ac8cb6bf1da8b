// Positive radial measures on [0,1): atoms, power densities c(1-t)^{s-1}dt,
// general densities, and mixtures. Provides the moment sequence
// mu[n] = int_0^1 t^n dmu(t), tail masses mu([t,1)), Carleson quotients, and
// the (1-t)^{lambda-1} transform.
//
// "Is Carleson" is never a boolean here: a finite grid cannot certify a
// supremum, so the artifact reports the evidence (constant and profile).
#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fhl {

struct Atom {
  double t;     // position in [0,1)
  double mass;  // >= 0
};

class MeasureSpec {
 public:
  struct Atoms {
    std::vector<Atom> atoms;
  };
  // c (1-t)^{s-1} dt with c >= 0, s > 0. Total mass c/s, tail (c/s)(1-t)^s.
  struct Power {
    double c;
    double s;
  };
  // Evaluable nonnegative density, declared integrable; checked numerically
  // at construction. kappa is the endpoint grading picked by the decay probe.
  // distance_form densities are parameterized by s = 1-t: near t = 1 a plain
  // rho(t) handle cannot resolve 1-t below machine epsilon, so endpoint-
  // singular densities must use the distance form to integrate accurately.
  struct Density {
    std::function<double(double)> rho;
    bool distance_form;
    int kappa;
  };
  using Mixture = std::vector<MeasureSpec>;
  using Variant = std::variant<Atoms, Power, Density, Mixture>;

  static MeasureSpec atoms(std::vector<Atom> atoms);
  static MeasureSpec power(double c, double s);
  static MeasureSpec density(std::function<double(double)> rho_of_t);
  static MeasureSpec density_of_distance(std::function<double(double)> rho_of_dist);
  static MeasureSpec mixture(std::vector<MeasureSpec> parts);

  const Variant& value() const { return v_; }

  // Stable label for report metadata.
  std::string id() const;

 private:
  explicit MeasureSpec(Variant v) : v_(std::move(v)) {}
  static MeasureSpec build_density(std::function<double(double)> rho, bool distance_form);
  Variant v_;
};

// Moment table mu[0..N]; validated nonincreasing and log-convex.
struct MomentTable {
  std::vector<double> values;  // values[n] = mu[n], n = 0..N

  std::size_t max_index() const { return values.size() - 1; }
  double operator[](std::size_t n) const { return values[n]; }
};

// mu[n] = int_0^1 t^n dmu(t). Atoms exactly; Power via the log-Beta closed
// form; Density by adaptive quadrature to absolute tolerance 1e-12.
double moment(const MeasureSpec& m, std::size_t n);

// Moments 0..N with invariant validation.
MomentTable moment_table(const MeasureSpec& m, std::size_t N);

// mu([t,1)).
double tail_mass(const MeasureSpec& m, double t);

// Geometric default grid t_j = 1 - 2^{-j}, j = 0..40.
std::vector<double> default_carleson_grid();

// max over the grid of mu([t,1)) / (1-t)^s.
double carleson_constant(const MeasureSpec& m, double s, const std::vector<double>& grid);
double carleson_constant(const MeasureSpec& m, double s);

// Q_s(t_j) pairs along an increasing grid; classification is the caller's.
std::vector<std::pair<double, double>> vanishing_profile(const MeasureSpec& m, double s,
                                                         const std::vector<double>& grid);

// The measure nu with dnu = (1-t)^{lambda-1} dmu. Throws NumericError when
// nu has infinite mass (lambda < 1 against insufficient density decay).
MeasureSpec lambda_transform(const MeasureSpec& m, double lambda);

// JSON schema:
//   {"type":"atoms","atoms":[[t,mass],...]}
//   {"type":"power","c":...,"s":...}
//   {"type":"mixture","parts":[...]}
// Unknown types or keys are rejected. Density specs are programmatic only.
MeasureSpec parse_measure_json(const std::string& text);
std::string measure_to_json(const MeasureSpec& m);

}  // namespace fhl
