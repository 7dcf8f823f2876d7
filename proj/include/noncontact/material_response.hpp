#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace noncontact {

using complex = std::complex<double>;

/// One damped oscillator of the Clausius-Mossotti fit
///   rho(w) = sum_k strength_k w_k^2 / (w_k^2 - i width_k w - w^2).
/// Frequencies in atomic units.
struct OscillatorTerm {
  double strength = 0.0;
  double resonance = 0.0;
  double width = 0.0;

  friend bool operator==(const OscillatorTerm&, const OscillatorTerm&) = default;
};

/// Linear temperature dependence of one oscillator width:
///   width(T) = width + slope (T - t_ref).
/// term_index is 1-based, matching the k labels of the fit tables.
struct WidthShift {
  std::size_t term_index = 1;
  double slope = 0.0;  // a.u. / K
  double t_ref = 300.0;

  friend bool operator==(const WidthShift&, const WidthShift&) = default;
};

struct LorentzFitMaterial {
  std::string name;
  std::vector<OscillatorTerm> terms;
  std::optional<WidthShift> width_shift;

  friend bool operator==(const LorentzFitMaterial&, const LorentzFitMaterial&) = default;
};

/// Interband remainder on top of the Drude term, itself in Clausius-Mossotti
/// form: drho(w) = 1 - a + a w0^2 / (w0^2 - i g0 w - w^2).
struct DrudeRemainder {
  double a = 0.0;
  double omega0 = 0.0;
  double gamma0 = 0.0;

  friend bool operator==(const DrudeRemainder&, const DrudeRemainder&) = default;
};

/// eps(w) = 1 - wp^2 / (w (w + i gp)) + deps(w). Without a remainder,
/// deps = 0 (bare Drude metal).
struct DrudeMaterial {
  std::string name;
  double plasma = 0.0;
  double damping = 0.0;
  std::optional<DrudeRemainder> remainder;

  friend bool operator==(const DrudeMaterial&, const DrudeMaterial&) = default;
};

using MaterialModel = std::variant<LorentzFitMaterial, DrudeMaterial>;

/// Temperatures over which the material models (in particular the linear
/// width shift) are considered valid.
inline constexpr double kMinSupportedTemperature = 250.0;
inline constexpr double kMaxSupportedTemperature = 350.0;

const std::string& material_name(const MaterialModel& material);

/// Throws InvariantError naming the offending field.
void validate(const LorentzFitMaterial& material);
void validate(const DrudeMaterial& material);
void validate(const MaterialModel& material);

/// Width of term `index` (0-based) at temperature T, including any shift.
double term_width(const LorentzFitMaterial& material, std::size_t index, double temperature_K);

/// Clausius-Mossotti function (eps-1)/(eps+2) from the oscillator fit.
/// Throws RangeError if the material carries a width shift and T is outside
/// the supported window.
complex rho(const LorentzFitMaterial& material, double omega, double temperature_K);

/// Remainder function drho(w) of a Drude material.
complex remainder_rho(const DrudeRemainder& remainder, double omega);

/// Complex relative permittivity. Drude materials have a pole at w = 0
/// (DomainError); a Lorentz fit with rho = 1 raises SingularityError.
complex permittivity(const MaterialModel& material, double omega, double temperature_K);

/// Nonretarded surface response (eps-1)/(eps+1). Lorentz fits are evaluated
/// as 3 rho / (rho + 2), which stays finite at the eps pole.
complex surface_response(const MaterialModel& material, double omega, double temperature_K);

/// A frequency where the surface response varies on the scale `width`.
struct SpectralFeature {
  double center = 0.0;
  double width = 0.0;
};

/// Bulk resonances and surface modes (Re rho = -2 in the undamped fit) of
/// a material, sorted by center. Used to seed quadrature breakpoints so that
/// narrow lines are resolved.
std::vector<SpectralFeature> spectral_features(const MaterialModel& material,
                                               double temperature_K);

/// dc conductivity eps0 wp^2 / gp of a Drude material, atomic units.
double dc_conductivity(const DrudeMaterial& material);

}  // namespace noncontact
