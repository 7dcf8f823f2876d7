#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace noncontact {

/// Dipole transition out of the ground state: oscillator strength, excitation
/// energy and width (energies in Hartree).
struct AtomOscillator {
  double strength = 0.0;
  double energy = 0.0;
  double width = 0.0;

  friend bool operator==(const AtomOscillator&, const AtomOscillator&) = default;
};

struct AtomModel {
  std::string name;
  double mass_kg = 0.0;
  std::vector<AtomOscillator> oscillators;
  /// Literature static polarizability the oscillator set must reproduce.
  double reference_static_alpha = 0.0;
  /// Electron count for the Thomas-Reiche-Kuhn sum rule check.
  std::optional<int> electrons;
  /// Effective few-level datasets that deliberately violate TRK.
  bool skip_trk = false;

  friend bool operator==(const AtomModel&, const AtomModel&) = default;
};

inline constexpr double kMaxWidthRatio = 0.1;         // Gamma_n / E_n0
inline constexpr double kStaticAlphaTolerance = 2e-2; // relative
inline constexpr double kTrkTolerance = 5e-2;         // relative
inline constexpr double kLowFrequencyRatio = 0.1;     // omega / E_10

/// Throws InvariantError naming the offending field.
void validate(const AtomModel& atom);

/// Sum of f_n / E_n^2.
double static_alpha(const AtomModel& atom);

/// Sum of f_n.
double oscillator_strength_sum(const AtomModel& atom);

/// Lowest excitation energy. Throws InvariantError for an empty atom.
double first_resonance(const AtomModel& atom);

/// alpha(w) = sum_n f_n / (E_n^2 - i Gamma_n w - w^2).
/// Throws SingularityError exactly on a zero-width resonance.
std::complex<double> alpha(const AtomModel& atom, double omega);

/// The same sum with every width set to zero. Real; only defined away from
/// the resonances.
double alpha_undamped(const AtomModel& atom, double omega);

/// Off-resonant (one-loop) imaginary part (2 alpha_fs^3 / 3) w^3 alpha(w)^2,
/// with alpha taken from the undamped sum. Valid for 0 <= w < E_10, where the
/// resonant part vanishes; throws UnsupportedRegimeError above that.
double im_alpha_one_loop(const AtomModel& atom, double omega);

/// Sum of f_n Gamma_n / E_n^4: slope of Im alpha at low frequency.
double lowfreq_im_alpha_slope(const AtomModel& atom);

/// Width-induced low-frequency imaginary part w * lowfreq_im_alpha_slope.
/// Requires w / E_10 < 0.1 (UnsupportedRegimeError otherwise).
double im_alpha_lowfreq_resonant(const AtomModel& atom, double omega);

}  // namespace noncontact
