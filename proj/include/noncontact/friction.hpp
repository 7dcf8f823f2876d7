#pragma once

#include <span>
#include <string>
#include <vector>

#include "noncontact/atomic_polarizability.hpp"
#include "noncontact/material_response.hpp"
#include "noncontact/quadrature.hpp"

namespace noncontact {

struct FrictionRequest {
  AtomModel atom;
  MaterialModel material;
  double temperature_K = 300.0;
  QuadratureSettings settings{};
};

/// One normalized friction integral with its quadrature diagnostics.
struct FrictionIntegral {
  double value = 0.0;
  double error = 0.0;
  long evaluations = 0;
  bool converged = true;
};

/// Normalized coefficients (Z = a0) in atomic units of friction.
struct FrictionResult {
  std::string atom;
  std::string material;
  double temperature_K = 0.0;
  double eta1_x0 = 0.0;
  double eta2_x0 = 0.0;
  double err1 = 0.0;
  double err2 = 0.0;
  bool converged = true;
};

/// Validates atom, material, settings and the temperature window.
void validate(const FrictionRequest& request);

/// 3 beta / (8 pi): the direct-term prefactor in atomic units at Z = 1.
double eta1_prefactor(double beta);
/// 9 beta / (256 pi): the backaction-term prefactor in atomic units at Z = 1.
double eta2_prefactor(double beta);

/// Im alpha(w) Im[(eps-1)/(eps+1)], one-loop Im alpha.
double eta1_integrand(const AtomModel& atom, const MaterialModel& material, double temperature_K,
                      double omega);
/// alpha(w)^2 Im[(eps-1)/(eps+1)]^2 with the undamped (real) alpha.
double eta2_integrand(const AtomModel& atom, const MaterialModel& material, double temperature_K,
                      double omega);

/// Upper frequency limit of the friction integrals: 0.9 E_10, safely below
/// the first atomic resonance where the off-resonant Im alpha stops applying.
double friction_upper_limit(const AtomModel& atom);

/// Quadrature breakpoints around every spectral feature of the material.
std::vector<double> friction_breakpoints(const MaterialModel& material, double temperature_K);

/// Direct friction eta^(1)_x at Z = a0:
///   (3 beta / 8 pi) int dw Im alpha Im[(eps-1)/(eps+1)] / sinh^2(beta w / 2).
FrictionIntegral eta1_x0(const FrictionRequest& request);

/// Backaction friction eta^(2)_x at Z = a0:
///   (9 beta / 256 pi) int dw alpha^2 Im[(eps-1)/(eps+1)]^2 / sinh^2(beta w / 2).
FrictionIntegral eta2_x0(const FrictionRequest& request);

FrictionResult compute_friction(const FrictionRequest& request);

/// Evaluates every request, concurrently when threads are available. The
/// output order always matches the input order. The first failure (in input
/// order) is rethrown.
std::vector<FrictionResult> compute_friction_grid(std::span<const FrictionRequest> requests,
                                                  unsigned max_threads = 0);

/// Factors relating friction normal to the surface to the parallel one.
struct ZFactors {
  double direct = 2.0;
  double backaction = 7.0;
};

struct ZComponents {
  double eta1_z = 0.0;
  double eta2_z = 0.0;
};

ZComponents eta_z_components(double eta1_x0, double eta2_x0, ZFactors factors = {});

struct SiFriction {
  double eta1 = 0.0;  // kg/s
  double eta2 = 0.0;  // kg/s
  double total = 0.0; // kg/s
};

/// Rescales the normalized coefficients to distance Z (in Bohr radii) and
/// converts to SI: eta1 (a0/Z)^5 u0, eta2 (a0/Z)^8 u0.
SiFriction eta_si(double eta1_x0, double eta2_x0, double z_bohr);

struct Attenuation {
  double gamma = 0.0;   // 1/s
  double gamma1 = 0.0;  // direct-term share, 1/s
  double gamma2 = 0.0;  // backaction share, 1/s
  double tau = 0.0;     // s, infinite when gamma == 0
};

/// Velocity damping rate gamma = eta_SI(Z) / m and time constant 1 / gamma.
Attenuation attenuation(double mass_kg, double eta1_x0, double eta2_x0, double z_bohr);

/// 3 / (16 pi eps0 Z^5) = 3 / (4 Z^5): the image-field factor
/// sum_l d^2/dx dx' G_ll per unit Im[(eps-1)/(eps+1)].
double image_green_prefactor_check(double z_bohr);

}  // namespace noncontact
