#include "noncontact/friction.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

#include "noncontact/errors.hpp"
#include "noncontact/units.hpp"

namespace noncontact {

void validate(const FrictionRequest& request) {
  validate(request.atom);
  validate(request.material);
  request.settings.validate();
  const double T = request.temperature_K;
  if (!(T >= kMinSupportedTemperature && T <= kMaxSupportedTemperature)) {
    std::ostringstream os;
    os << "temperature " << T << " K outside the supported range [" << kMinSupportedTemperature
       << ", " << kMaxSupportedTemperature << "] K";
    throw RangeError(os.str());
  }
}

double eta1_prefactor(double beta) { return 3.0 * beta / (8.0 * units::pi); }
double eta2_prefactor(double beta) { return 9.0 * beta / (256.0 * units::pi); }

double eta1_integrand(const AtomModel& atom, const MaterialModel& material, double temperature_K,
                      double omega) {
  const double response = surface_response(material, omega, temperature_K).imag();
  if (response == 0.0) return 0.0;
  return im_alpha_one_loop(atom, omega) * response;
}

double eta2_integrand(const AtomModel& atom, const MaterialModel& material, double temperature_K,
                      double omega) {
  const double response = surface_response(material, omega, temperature_K).imag();
  if (response == 0.0) return 0.0;
  const double a = alpha_undamped(atom, omega);
  return a * a * response * response;
}

double friction_upper_limit(const AtomModel& atom) { return 0.9 * first_resonance(atom); }

std::vector<double> friction_breakpoints(const MaterialModel& material, double temperature_K) {
  std::vector<double> points;
  for (const auto& f : spectral_features(material, temperature_K)) {
    for (double k : {-10.0, -1.0, 0.0, 1.0, 10.0}) {
      const double x = f.center + k * f.width;
      if (x > 0.0) points.push_back(x);
    }
  }
  std::ranges::sort(points);
  return points;
}

namespace {

FrictionIntegral run_thermal(const FrictionRequest& request, double prefactor,
                             const Integrand& integrand) {
  const double beta = units::thermal_beta_au(request.temperature_K);
  const auto breakpoints = friction_breakpoints(request.material, request.temperature_K);
  const QuadratureResult q = integrate_thermal(integrand, beta, request.settings, breakpoints,
                                               friction_upper_limit(request.atom));
  return {prefactor * q.value, prefactor * q.error_estimate, q.evaluations, q.converged};
}

}  // namespace

FrictionIntegral eta1_x0(const FrictionRequest& request) {
  validate(request);
  const double beta = units::thermal_beta_au(request.temperature_K);
  return run_thermal(request, eta1_prefactor(beta), [&](double omega) {
    return eta1_integrand(request.atom, request.material, request.temperature_K, omega);
  });
}

FrictionIntegral eta2_x0(const FrictionRequest& request) {
  validate(request);
  const double beta = units::thermal_beta_au(request.temperature_K);
  return run_thermal(request, eta2_prefactor(beta), [&](double omega) {
    return eta2_integrand(request.atom, request.material, request.temperature_K, omega);
  });
}

FrictionResult compute_friction(const FrictionRequest& request) {
  const FrictionIntegral direct = eta1_x0(request);
  const FrictionIntegral backaction = eta2_x0(request);
  return {
      .atom = request.atom.name,
      .material = material_name(request.material),
      .temperature_K = request.temperature_K,
      .eta1_x0 = direct.value,
      .eta2_x0 = backaction.value,
      .err1 = direct.error,
      .err2 = backaction.error,
      .converged = direct.converged && backaction.converged,
  };
}

std::vector<FrictionResult> compute_friction_grid(std::span<const FrictionRequest> requests,
                                                  unsigned max_threads) {
  std::vector<FrictionResult> results(requests.size());
  std::vector<std::exception_ptr> failures(requests.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < requests.size(); i = next++) {
      try {
        results[i] = compute_friction(requests[i]);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };

  unsigned threads = max_threads ? max_threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, requests.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return results;
}

ZComponents eta_z_components(double eta1_x0, double eta2_x0, ZFactors factors) {
  return {factors.direct * eta1_x0, factors.backaction * eta2_x0};
}

SiFriction eta_si(double eta1_x0, double eta2_x0, double z_bohr) {
  if (!(z_bohr > 0.0) || !std::isfinite(z_bohr)) {
    throw DomainError("distance Z must be positive and finite, got " + std::to_string(z_bohr));
  }
  const double s = 1.0 / z_bohr;
  const double s5 = s * s * s * s * s;
  const double s8 = s5 * s * s * s;
  SiFriction out;
  out.eta1 = units::friction_au_to_si(eta1_x0 * s5);
  out.eta2 = units::friction_au_to_si(eta2_x0 * s8);
  out.total = out.eta1 + out.eta2;
  return out;
}

Attenuation attenuation(double mass_kg, double eta1_x0, double eta2_x0, double z_bohr) {
  if (!(mass_kg > 0.0) || !std::isfinite(mass_kg)) {
    throw DomainError("mass must be positive and finite");
  }
  const SiFriction eta = eta_si(eta1_x0, eta2_x0, z_bohr);
  Attenuation out;
  out.gamma1 = eta.eta1 / mass_kg;
  out.gamma2 = eta.eta2 / mass_kg;
  out.gamma = out.gamma1 + out.gamma2;
  out.tau = out.gamma > 0.0 ? 1.0 / out.gamma : std::numeric_limits<double>::infinity();
  return out;
}

double image_green_prefactor_check(double z_bohr) {
  if (!(z_bohr > 0.0)) throw DomainError("distance Z must be positive");
  constexpr double eps0 = 1.0 / (4.0 * units::pi);
  return 3.0 / (16.0 * units::pi * eps0 * std::pow(z_bohr, 5));
}

}  // namespace noncontact
