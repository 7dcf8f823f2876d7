#include "noncontact/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "noncontact/errors.hpp"

namespace noncontact {

namespace {

// Kronrod abscissae on [0, 1]; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

struct ByError {
  bool operator()(const Panel& lhs, const Panel& rhs) const {
    if (lhs.error != rhs.error) return lhs.error < rhs.error;
    return lhs.a > rhs.a;
  }
};

double evaluate(const Integrand& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    std::ostringstream os;
    os.precision(17);
    os << "integrand returned " << y << " at omega = " << x;
    throw IntegrandError(os.str(), x);
  }
  return y;
}

Panel gauss_kronrod_15(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = evaluate(f, center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double pair = evaluate(f, center - dx) + evaluate(f, center + dx);
    kronrod += kKronrodWeights[j] * pair;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

constexpr long kPointsPerPanel = 15;

}  // namespace

void QuadratureSettings::validate() const {
  if (!(rel_tol > 0.0)) throw InvariantError("quadrature rel_tol must be > 0");
  if (!(abs_tol >= 0.0)) throw InvariantError("quadrature abs_tol must be >= 0");
  if (max_subdivisions < 10) throw InvariantError("quadrature max_subdivisions must be >= 10");
  if (!(cutoff_multiplier >= 10.0)) {
    throw InvariantError("quadrature cutoff_multiplier must be >= 10");
  }
}

QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureSettings& settings,
                           std::span<const double> breakpoints) {
  settings.validate();
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integration limits must be finite");
  }
  QuadratureResult result;
  if (a == b) return result;
  const double sign = b > a ? 1.0 : -1.0;
  if (b < a) std::swap(a, b);

  std::vector<double> cuts{a};
  for (double x : breakpoints) {
    if (x > a && x < b) cuts.push_back(x);
  }
  cuts.push_back(b);
  std::ranges::sort(cuts);
  const auto dup = std::ranges::unique(cuts);
  cuts.erase(dup.begin(), dup.end());

  std::priority_queue<Panel, std::vector<Panel>, ByError> queue;
  double total = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Panel p = gauss_kronrod_15(f, cuts[i], cuts[i + 1]);
    result.evaluations += kPointsPerPanel;
    total += p.value;
    error += p.error;
    queue.push(p);
  }

  auto tolerance = [&](double value) {
    return std::max(settings.rel_tol * std::abs(value), settings.abs_tol);
  };

  bool stuck = false;
  int iteration = 0;
  while (error > tolerance(total) &&
         static_cast<int>(queue.size()) < settings.max_subdivisions) {
    Panel worst = queue.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      stuck = true;  // panel at floating-point resolution
      break;
    }
    queue.pop();
    Panel left = gauss_kronrod_15(f, worst.a, mid);
    Panel right = gauss_kronrod_15(f, mid, worst.b);
    result.evaluations += 2 * kPointsPerPanel;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);

    // Re-sum periodically so incremental updates cannot drift.
    if (++iteration % 64 == 0) {
      std::vector<Panel> panels;
      panels.reserve(queue.size());
      while (!queue.empty()) {
        panels.push_back(queue.top());
        queue.pop();
      }
      total = 0.0;
      error = 0.0;
      std::ranges::sort(panels, {}, &Panel::a);
      for (const auto& p : panels) {
        total += p.value;
        error += p.error;
        queue.push(p);
      }
    }
  }

  // Final sum in left-to-right order.
  std::vector<Panel> panels;
  panels.reserve(queue.size());
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  std::ranges::sort(panels, {}, &Panel::a);
  total = 0.0;
  error = 0.0;
  for (const auto& p : panels) {
    total += p.value;
    error += p.error;
  }

  result.value = sign * total;
  result.error_estimate = error;
  result.converged = !stuck && error <= tolerance(total);
  return result;
}

double thermal_weight(double x) {
  const double y = 0.5 * x;
  if (std::abs(x) < 1e-4) {
    const double s = y * (1.0 + y * y / 6.0);
    return 1.0 / (s * s);
  }
  const double s = std::sinh(y);
  return 1.0 / (s * s);
}

double thermal_cutoff(double beta, const QuadratureSettings& settings) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw DomainError("beta must be positive and finite");
  }
  return settings.cutoff_multiplier / beta;
}

QuadratureResult integrate_thermal(const Integrand& f, double beta,
                                   const QuadratureSettings& settings,
                                   std::span<const double> breakpoints, double upper_limit) {
  settings.validate();
  const double cut = std::min(thermal_cutoff(beta, settings), upper_limit);
  if (!(cut > 0.0)) throw DomainError("thermal integration upper limit must be positive");

  const Integrand weighted = [&](double omega) { return f(omega) * thermal_weight(beta * omega); };
  QuadratureResult result = integrate(weighted, 0.0, cut, settings, breakpoints);

  const double tail = 4.0 * std::abs(evaluate(f, cut)) * std::exp(-beta * cut) / beta;
  result.evaluations += 1;
  result.error_estimate += tail;
  result.converged = result.converged &&
                     result.error_estimate <=
                         std::max(settings.rel_tol * std::abs(result.value), settings.abs_tol);
  return result;
}

}  // namespace noncontact
