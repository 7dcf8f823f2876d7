#pragma once

#include "noncontact/atomic_polarizability.hpp"
#include "noncontact/material_response.hpp"
#include "noncontact/quadrature.hpp"

namespace noncontact {

// Zero-temperature (quantum) friction of an atom moving parallel to a
// conducting surface, in atomic units (hbar = 1, eps0 = 1/(4 pi)).

struct ZeroTempInputs {
  double gamma1 = 0.0;    // width of the first atomic resonance
  double e10 = 0.0;       // first excitation energy
  double alpha0 = 0.0;    // static polarizability
  double sigma0 = 0.0;    // dc conductivity sigma_T(0)
  double velocity = 0.0;  // v_x
  double distance = 0.0;  // Z

  /// All positive and v_x < 0.01 Z E_10; throws UnsupportedRegimeError /
  /// DomainError otherwise.
  void validate() const;
};

inline constexpr double kMaxVelocityRatio = 0.01;  // v_x / (Z E_10)

/// Closed form -(45 / 64 pi^2) (Gamma_1 / E_10^2) (v^3 / Z^7) (alpha_0 / sigma).
double zero_temp_force_closed(const ZeroTempInputs& inputs);

/// Inputs of the closed form derived from an atom and a Drude metal: first
/// resonance of the atom, alpha_0 = (E_10^2 / Gamma_1) sum f Gamma / E^4, and
/// sigma = eps0 wp^2 / gp.
ZeroTempInputs zero_temp_inputs(const AtomModel& atom, const DrudeMaterial& material,
                                double velocity, double distance);

/// Settings for the nested integrals: rel_tol 1e-6 per level, no absolute floor.
QuadratureSettings zero_temp_default_settings();

/// Direct numerical evaluation of
///   F = -(1 / pi^3 eps0) int_0^inf dk_par k_par int_-inf^inf dk_perp k e^{-2 k Z}
///         int_0^{v k_par} dw Im alpha(w) Im r(k_par v - w)
/// with the low-frequency Im alpha. k_perp is folded onto [0, inf); both
/// momentum integrals stop where e^{-2 k Z} < 1e-16.
QuadratureResult zero_temp_force_integral(const AtomModel& atom, const DrudeMaterial& material,
                                          double velocity, double distance,
                                          const QuadratureSettings& settings =
                                              zero_temp_default_settings());

/// Plate-plate friction force between two half-spaces separated by Z, as
///   F = (S / pi^3) int_0^inf dk_par k_par int_0^inf dk_perp e^{-2 k Z}
///         int_0^{v k_par} dw Im r1(w) Im r2(k_par v - w).
QuadratureResult plate_plate_force(const MaterialModel& material1, const MaterialModel& material2,
                                   double velocity, double distance, double area,
                                   double temperature_K = 300.0,
                                   const QuadratureSettings& settings =
                                       zero_temp_default_settings());

}  // namespace noncontact
