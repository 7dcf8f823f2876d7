#include "noncontact/atomic_polarizability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "noncontact/errors.hpp"
#include "noncontact/units.hpp"

namespace noncontact {

namespace {

std::string atom_error(const AtomModel& atom, const std::string& field, const std::string& what) {
  return "atom '" + atom.name + "': " + field + " " + what;
}

void check_frequency(double omega) {
  if (!(omega >= 0.0) || !std::isfinite(omega)) {
    throw DomainError("frequency must be finite and non-negative, got " + std::to_string(omega));
  }
}

}  // namespace

void validate(const AtomModel& atom) {
  if (!(atom.mass_kg > 0.0)) {
    throw InvariantError(atom_error(atom, "mass_kg", "must be > 0"));
  }
  if (atom.oscillators.empty()) {
    throw InvariantError(atom_error(atom, "oscillators", "must not be empty"));
  }
  for (std::size_t n = 0; n < atom.oscillators.size(); ++n) {
    const auto& o = atom.oscillators[n];
    const std::string prefix = "oscillators[" + std::to_string(n) + "].";
    if (!(o.strength > 0.0)) throw InvariantError(atom_error(atom, prefix + "f", "must be > 0"));
    if (!(o.energy > 0.0)) throw InvariantError(atom_error(atom, prefix + "E", "must be > 0"));
    if (!(o.width >= 0.0)) throw InvariantError(atom_error(atom, prefix + "Gamma", "must be >= 0"));
    if (!(o.width < kMaxWidthRatio * o.energy)) {
      throw InvariantError(atom_error(atom, prefix + "Gamma", "must be < 0.1 E"));
    }
  }
  if (!(atom.reference_static_alpha > 0.0)) {
    throw InvariantError(atom_error(atom, "reference_static_alpha", "must be > 0"));
  }
  const double a0 = static_alpha(atom);
  if (std::abs(a0 / atom.reference_static_alpha - 1.0) > kStaticAlphaTolerance) {
    std::ostringstream os;
    os << "sum f/E^2 = " << a0 << " does not reproduce reference " << atom.reference_static_alpha
       << " within " << kStaticAlphaTolerance;
    throw InvariantError(atom_error(atom, "reference_static_alpha", os.str()));
  }
  if (!atom.skip_trk) {
    if (!atom.electrons || *atom.electrons < 1) {
      throw InvariantError(
          atom_error(atom, "electrons", "is required (>= 1) unless skip_trk is set"));
    }
    const double trk = oscillator_strength_sum(atom);
    if (std::abs(trk / *atom.electrons - 1.0) > kTrkTolerance) {
      std::ostringstream os;
      os << "sum f = " << trk << " violates the TRK sum rule for " << *atom.electrons
         << " electron(s)";
      throw InvariantError(atom_error(atom, "oscillators", os.str()));
    }
  }
}

double static_alpha(const AtomModel& atom) {
  double sum = 0.0;
  for (const auto& o : atom.oscillators) sum += o.strength / (o.energy * o.energy);
  return sum;
}

double oscillator_strength_sum(const AtomModel& atom) {
  double sum = 0.0;
  for (const auto& o : atom.oscillators) sum += o.strength;
  return sum;
}

double first_resonance(const AtomModel& atom) {
  if (atom.oscillators.empty()) {
    throw InvariantError(atom_error(atom, "oscillators", "must not be empty"));
  }
  return std::ranges::min(atom.oscillators, {}, &AtomOscillator::energy).energy;
}

std::complex<double> alpha(const AtomModel& atom, double omega) {
  check_frequency(omega);
  const std::complex<double> i{0.0, 1.0};
  std::complex<double> sum{0.0, 0.0};
  for (const auto& o : atom.oscillators) {
    const std::complex<double> denom = o.energy * o.energy - i * o.width * omega - omega * omega;
    if (denom == 0.0) {
      throw SingularityError("atom '" + atom.name + "': omega = " + std::to_string(omega) +
                             " sits on a zero-width resonance");
    }
    sum += o.strength / denom;
  }
  return sum;
}

double alpha_undamped(const AtomModel& atom, double omega) {
  check_frequency(omega);
  double sum = 0.0;
  for (const auto& o : atom.oscillators) {
    const double denom = o.energy * o.energy - omega * omega;
    if (denom == 0.0) {
      throw SingularityError("atom '" + atom.name + "': omega = " + std::to_string(omega) +
                             " sits on a resonance");
    }
    sum += o.strength / denom;
  }
  return sum;
}

double im_alpha_one_loop(const AtomModel& atom, double omega) {
  check_frequency(omega);
  const double e1 = first_resonance(atom);
  if (!(omega < e1)) {
    std::ostringstream os;
    os << "atom '" << atom.name << "': one-loop Im alpha requested at omega = " << omega
       << " >= first resonance " << e1 << "; use a resonant lineshape model there";
    throw UnsupportedRegimeError(os.str());
  }
  constexpr double fs = units::constants.fine_structure;
  const double a = alpha_undamped(atom, omega);
  return (2.0 * fs * fs * fs / 3.0) * omega * omega * omega * a * a;
}

double lowfreq_im_alpha_slope(const AtomModel& atom) {
  double sum = 0.0;
  for (const auto& o : atom.oscillators) {
    const double e2 = o.energy * o.energy;
    sum += o.strength * o.width / (e2 * e2);
  }
  return sum;
}

double im_alpha_lowfreq_resonant(const AtomModel& atom, double omega) {
  check_frequency(omega);
  const double e1 = first_resonance(atom);
  if (!(omega < kLowFrequencyRatio * e1)) {
    std::ostringstream os;
    os << "atom '" << atom.name << "': low-frequency Im alpha needs omega < " << kLowFrequencyRatio
       << " E_10 = " << kLowFrequencyRatio * e1 << ", got " << omega;
    throw UnsupportedRegimeError(os.str());
  }
  return omega * lowfreq_im_alpha_slope(atom);
}

}  // namespace noncontact
