#include "noncontact/units.hpp"

#include <cmath>
#include <string>

#include "noncontact/errors.hpp"

namespace noncontact::units {

double thermal_beta_au(double temperature_K) {
  if (!(temperature_K > 0.0) || !std::isfinite(temperature_K)) {
    throw DomainError("temperature must be positive and finite, got " +
                      std::to_string(temperature_K) + " K");
  }
  return 1.0 / (constants.boltzmann_au * temperature_K);
}

double friction_au_to_si(double eta_au) { return eta_au * constants.atomic_friction_kg_s; }
double friction_si_to_au(double eta_kg_s) { return eta_kg_s / constants.atomic_friction_kg_s; }

double length_au_to_si(double length_bohr) { return length_bohr * constants.bohr_radius_m; }
double length_si_to_au(double length_m) { return length_m / constants.bohr_radius_m; }

double angular_freq_au_to_si(double omega_au) {
  return omega_au * constants.atomic_angular_freq_rad_s;
}
double angular_freq_si_to_au(double omega_rad_s) {
  return omega_rad_s / constants.atomic_angular_freq_rad_s;
}

}  // namespace noncontact::units
