#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "perturb/common.hpp"

namespace perturb {

/// A modulus of continuity: nondecreasing, subadditive, continuous, with
/// omega(0) = 0 and omega > 0 off zero.  Two representations are supported:
/// a power t^alpha with alpha in (0,1), and a concave piecewise-linear table.
/// An optional saturation cutoff s freezes the value at omega(s) for t >= s;
/// it also makes the tail transform converge for table kinds.
class Modulus {
 public:
  enum class Kind { Power, Table };

  static Modulus power(double alpha, std::optional<double> saturation = std::nullopt);
  // points must start at (0,0), be strictly ascending in x, nondecreasing in y,
  // and concave (nonincreasing slopes); non-concave tables are rejected.
  static Modulus table(std::vector<std::pair<double, double>> points,
                       std::optional<double> saturation = std::nullopt);
  // skips the concavity check; for probing invalid candidates with check_modulus
  static Modulus table_unchecked(std::vector<std::pair<double, double>> points,
                                 std::optional<double> saturation = std::nullopt);

  // omega(x); throws std::domain_error for x < 0
  double operator()(double x) const;

  // omega_*(x) = x * integral_x^inf omega(t)/t^2 dt.  Closed form for power
  // kind, adaptive quadrature (split at breakpoints and at the saturation
  // point) for tables.  Throws DivergenceError when the tail has no finite
  // value.  omega_*(0) is defined as the limit 0.
  double star(double x) const;

  // omega_#(x) = omega_*(x) + integral_0^x omega(t)/t dt
  double sharp(double x) const;

  Kind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  const std::vector<std::pair<double, double>>& points() const { return points_; }
  std::optional<double> saturation() const { return saturation_; }

  // saturation point beyond which omega is constant, if any (explicit
  // saturation, or a table whose final slope is zero)
  std::optional<double> effective_saturation() const;

  // "power:0.5", "power:0.5:2.0" (alpha:saturation), "table:x0,y0;x1,y1;..."
  static Modulus parse(const std::string& descriptor);
  std::string describe() const;

 private:
  Modulus() = default;

  Kind kind_ = Kind::Power;
  double alpha_ = 0.5;
  std::vector<std::pair<double, double>> points_;
  std::vector<double> slopes_;
  std::optional<double> saturation_;

  double eval_raw(double x) const;  // before saturation
  double tail_integral(double x) const;
  double head_integral(double x) const;
};

struct SeminormEstimate {
  double value = 0.0;
  int grid_size = 0;
  std::string domain;  // "circle" or "interval(a,b)"
};

// Grid lower estimate of sup_{x != y} |f(x)-f(y)| / omega(|x-y|).
// Circle version: f given on angles, distances are chordal |e^{ia}-e^{ib}|.
SeminormEstimate lambda_seminorm_circle(const std::function<Complex(double)>& f_angle,
                                        const Modulus& omega, int grid_size);
SeminormEstimate lambda_seminorm_interval(const std::function<double(double)>& f,
                                          double a, double b, const Modulus& omega,
                                          int grid_size);

struct ModulusViolation {
  std::string property;  // "monotone" or "subadditive"
  double x = 0.0;
  double y = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
};

// Draws random pairs and checks monotonicity and subadditivity; an empty
// report means no violation was found.
std::vector<ModulusViolation> check_modulus(const Modulus& m, int samples,
                                            std::uint64_t seed);

}  // namespace perturb
