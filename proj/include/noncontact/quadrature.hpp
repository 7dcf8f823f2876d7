#pragma once

#include <functional>
#include <limits>
#include <span>

namespace noncontact {

struct QuadratureSettings {
  double rel_tol = 1e-8;
  double abs_tol = 1e-30;
  int max_subdivisions = 2000;
  /// Thermal integrals are truncated at cutoff_multiplier / beta.
  double cutoff_multiplier = 40.0;

  /// Throws InvariantError on out-of-range fields.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = true;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (7/15) integration of f over [a, b]. The interval
/// is first split at every breakpoint strictly inside (a, b); afterwards the
/// panel with the largest error estimate is bisected until the total error
/// drops below max(rel_tol |value|, abs_tol) or max_subdivisions panels exist.
/// The subdivision order depends only on the inputs, so results are
/// reproducible bit for bit.
///
/// A non-finite integrand value raises IntegrandError carrying the abscissa.
QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureSettings& settings,
                           std::span<const double> breakpoints = {});

/// 1 / sinh^2(x / 2), switching to the series sinh(y) ~ y (1 + y^2 / 6) for
/// x < 1e-4.
double thermal_weight(double x);

/// cutoff_multiplier / beta.
double thermal_cutoff(double beta, const QuadratureSettings& settings);

/// Integral of f(w) / sinh^2(beta w / 2) over [0, infinity), truncated at
/// min(thermal_cutoff, upper_limit). The neglected tail is bounded by
/// 4 |f(w_cut)| exp(-beta w_cut) / beta and folded into error_estimate.
QuadratureResult integrate_thermal(const Integrand& f, double beta,
                                   const QuadratureSettings& settings,
                                   std::span<const double> breakpoints = {},
                                   double upper_limit = std::numeric_limits<double>::infinity());

}  // namespace noncontact
