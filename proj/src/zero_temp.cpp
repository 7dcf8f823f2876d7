#include "noncontact/zero_temp.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "noncontact/errors.hpp"
#include "noncontact/units.hpp"

namespace noncontact {

namespace {

constexpr double kEps0 = 1.0 / (4.0 * units::pi);
// e^{-2 k Z} < 1e-16 beyond k = ln(1e16) / (2 Z).
constexpr double kMomentumCutoffExponent = 36.841361487904734;  // ln(1e16)

void check_geometry(double velocity, double distance) {
  if (!(velocity >= 0.0) || !std::isfinite(velocity)) {
    throw DomainError("velocity must be finite and non-negative");
  }
  if (!(distance > 0.0) || !std::isfinite(distance)) {
    throw DomainError("distance must be positive and finite");
  }
}

void check_velocity_regime(double velocity, double distance, double e10) {
  if (!(velocity < kMaxVelocityRatio * distance * e10)) {
    std::ostringstream os;
    os << "velocity " << velocity << " outside the small-velocity regime v < "
       << kMaxVelocityRatio << " Z E_10 = " << kMaxVelocityRatio * distance * e10;
    throw UnsupportedRegimeError(os.str());
  }
}

// Integrates kpar * W(kpar) * omega_part(kpar) over kpar, where
// W(kpar) = int_0^{kperp_max} dkperp [k] e^{-2 k Z}. The three levels are
// nested (omega innermost, kperp, kpar outermost); the omega integral only
// depends on kpar, so it is evaluated once per kpar node.
template <class OmegaPart>
QuadratureResult momentum_integral(double distance, bool weight_by_k,
                                   const QuadratureSettings& settings, OmegaPart&& omega_part) {
  const double k_max = kMomentumCutoffExponent / (2.0 * distance);
  bool all_converged = true;

  const Integrand outer = [&](double kpar) {
    const double kperp_max = std::sqrt(std::max(0.0, k_max * k_max - kpar * kpar));
    const Integrand middle = [&](double kperp) {
      const double k = std::hypot(kpar, kperp);
      return (weight_by_k ? k : 1.0) * std::exp(-2.0 * k * distance);
    };
    const QuadratureResult w = integrate(middle, 0.0, kperp_max, settings);
    const QuadratureResult o = omega_part(kpar);
    all_converged = all_converged && w.converged && o.converged;
    return kpar * w.value * o.value;
  };

  QuadratureResult r = integrate(outer, 0.0, k_max, settings);
  r.converged = r.converged && all_converged;
  return r;
}

}  // namespace

void ZeroTempInputs::validate() const {
  const auto positive = [](double x, const char* name) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw DomainError(std::string("zero-temperature input ") + name + " must be positive");
    }
  };
  positive(gamma1, "gamma1");
  positive(e10, "e10");
  positive(alpha0, "alpha0");
  positive(sigma0, "sigma0");
  positive(velocity, "velocity");
  positive(distance, "distance");
  check_velocity_regime(velocity, distance, e10);
}

double zero_temp_force_closed(const ZeroTempInputs& in) {
  in.validate();
  const double z7 = std::pow(in.distance, 7);
  return -(45.0 / (64.0 * units::pi * units::pi)) * (in.gamma1 / (in.e10 * in.e10)) *
         (in.velocity * in.velocity * in.velocity / z7) * (in.alpha0 / in.sigma0);
}

ZeroTempInputs zero_temp_inputs(const AtomModel& atom, const DrudeMaterial& material,
                                double velocity, double distance) {
  validate(material);
  const AtomOscillator* first = nullptr;
  for (const auto& o : atom.oscillators) {
    if (!first || o.energy < first->energy) first = &o;
  }
  if (!first) throw InvariantError("atom '" + atom.name + "' has no oscillators");
  if (!(first->width > 0.0)) {
    throw InvariantError("atom '" + atom.name +
                         "': first resonance needs a positive width for zero-temperature friction");
  }
  const double e2 = first->energy * first->energy;
  return {
      .gamma1 = first->width,
      .e10 = first->energy,
      .alpha0 = e2 / first->width * lowfreq_im_alpha_slope(atom),
      .sigma0 = dc_conductivity(material),
      .velocity = velocity,
      .distance = distance,
  };
}

QuadratureSettings zero_temp_default_settings() {
  QuadratureSettings s;
  s.rel_tol = 1e-6;
  s.abs_tol = 0.0;
  return s;
}

QuadratureResult zero_temp_force_integral(const AtomModel& atom, const DrudeMaterial& material,
                                          double velocity, double distance,
                                          const QuadratureSettings& settings) {
  check_geometry(velocity, distance);
  validate(material);
  check_velocity_regime(velocity, distance, first_resonance(atom));
  if (velocity == 0.0) return {};

  const double slope = lowfreq_im_alpha_slope(atom);
  const MaterialModel surface{material};

  QuadratureResult r =
      momentum_integral(distance, true, settings, [&](double kpar) {
        const double upper = kpar * velocity;
        const Integrand inner = [&](double omega) {
          return slope * omega * surface_response(surface, upper - omega, 0.0).imag();
        };
        return integrate(inner, 0.0, upper, settings);
      });

  const double prefactor = -2.0 / (units::pi * units::pi * units::pi * kEps0);
  r.value *= prefactor;
  r.error_estimate *= std::abs(prefactor);
  return r;
}

QuadratureResult plate_plate_force(const MaterialModel& material1, const MaterialModel& material2,
                                   double velocity, double distance, double area,
                                   double temperature_K, const QuadratureSettings& settings) {
  check_geometry(velocity, distance);
  if (!(area > 0.0) || !std::isfinite(area)) throw DomainError("area must be positive");
  validate(material1);
  validate(material2);
  if (velocity == 0.0) return {};

  QuadratureResult r =
      momentum_integral(distance, false, settings, [&](double kpar) {
        const double upper = kpar * velocity;
        const Integrand inner = [&](double omega) {
          return surface_response(material1, omega, temperature_K).imag() *
                 surface_response(material2, upper - omega, temperature_K).imag();
        };
        return integrate(inner, 0.0, upper, settings);
      });

  const double prefactor = area / (units::pi * units::pi * units::pi);
  r.value *= prefactor;
  r.error_estimate *= prefactor;
  return r;
}

}  // namespace noncontact
