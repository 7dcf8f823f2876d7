#include "noncontact/material_response.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "noncontact/errors.hpp"
#include "noncontact/units.hpp"

namespace noncontact {

namespace {

constexpr complex kI{0.0, 1.0};
// |1 - rho| or |rho + 2| below this is treated as a pole.
constexpr double kPoleTolerance = 1e-15;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string field_error(const std::string& material, const std::string& field,
                        const std::string& requirement, double value) {
  std::ostringstream os;
  os << "material '" << material << "': " << field << " " << requirement << " (got " << value
     << ")";
  return os.str();
}

void check_temperature(const LorentzFitMaterial& material, double temperature_K) {
  if (!material.width_shift) return;
  if (!(temperature_K >= kMinSupportedTemperature && temperature_K <= kMaxSupportedTemperature)) {
    std::ostringstream os;
    os << "material '" << material.name << "' has a temperature-dependent width validated for ["
       << kMinSupportedTemperature << ", " << kMaxSupportedTemperature << "] K, got "
       << temperature_K << " K";
    throw RangeError(os.str());
  }
}

void check_frequency(double omega) {
  if (!(omega >= 0.0) || !std::isfinite(omega)) {
    throw DomainError("frequency must be finite and non-negative, got " + std::to_string(omega));
  }
}

// Undamped fit, used to locate surface modes.
double rho_undamped(const LorentzFitMaterial& material, double omega) {
  double sum = 0.0;
  for (const auto& t : material.terms) {
    const double w2 = t.resonance * t.resonance;
    sum += t.strength * w2 / (w2 - omega * omega);
  }
  return sum;
}

// Root of rho_undamped(w) = -2 on (lo, hi), where rho_undamped increases
// monotonically from -inf to a value above -2.
double bisect_surface_mode(const LorentzFitMaterial& material, double lo, double hi) {
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (rho_undamped(material, mid) < -2.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

const std::string& material_name(const MaterialModel& material) {
  return std::visit([](const auto& m) -> const std::string& { return m.name; }, material);
}

void validate(const LorentzFitMaterial& m) {
  double strength_sum = 0.0;
  for (std::size_t k = 0; k < m.terms.size(); ++k) {
    const auto& t = m.terms[k];
    const std::string prefix = "terms[" + std::to_string(k) + "].";
    if (!(t.strength > 0.0)) throw InvariantError(field_error(m.name, prefix + "alpha", "must be > 0", t.strength));
    if (!(t.resonance > 0.0)) throw InvariantError(field_error(m.name, prefix + "omega", "must be > 0", t.resonance));
    if (!(t.width > 0.0)) throw InvariantError(field_error(m.name, prefix + "gamma", "must be > 0", t.width));
    strength_sum += t.strength;
  }
  if (!(strength_sum < 1.0)) {
    throw InvariantError(field_error(m.name, "terms[*].alpha", "must sum to < 1", strength_sum));
  }
  if (m.width_shift) {
    const auto& ws = *m.width_shift;
    if (ws.term_index < 1 || ws.term_index > m.terms.size()) {
      throw InvariantError(field_error(m.name, "width_shift.term_index",
                                       "must name an existing term (1-based)",
                                       static_cast<double>(ws.term_index)));
    }
    if (!std::isfinite(ws.slope)) {
      throw InvariantError(field_error(m.name, "width_shift.slope", "must be finite", ws.slope));
    }
    if (!(ws.t_ref > 0.0)) {
      throw InvariantError(field_error(m.name, "width_shift.t_ref", "must be > 0", ws.t_ref));
    }
    const double base = m.terms[ws.term_index - 1].width;
    for (double T : {kMinSupportedTemperature, kMaxSupportedTemperature}) {
      const double w = base + ws.slope * (T - ws.t_ref);
      if (!(w > 0.0)) {
        throw InvariantError(field_error(m.name, "width_shift.slope",
                                         "drives the shifted width non-positive inside the "
                                         "supported temperature range",
                                         ws.slope));
      }
    }
  }
}

void validate(const DrudeMaterial& m) {
  if (!(m.plasma > 0.0)) throw InvariantError(field_error(m.name, "drude.omega_p", "must be > 0", m.plasma));
  if (!(m.damping > 0.0)) throw InvariantError(field_error(m.name, "drude.gamma_p", "must be > 0", m.damping));
  if (m.remainder) {
    const auto& r = *m.remainder;
    if (!std::isfinite(r.a)) throw InvariantError(field_error(m.name, "drude.remainder.a", "must be finite", r.a));
    if (!(r.omega0 > 0.0)) throw InvariantError(field_error(m.name, "drude.remainder.omega0", "must be > 0", r.omega0));
    if (!(r.gamma0 > 0.0)) throw InvariantError(field_error(m.name, "drude.remainder.gamma0", "must be > 0", r.gamma0));
  }
}

void validate(const MaterialModel& material) {
  std::visit([](const auto& m) { validate(m); }, material);
}

double term_width(const LorentzFitMaterial& material, std::size_t index, double temperature_K) {
  double width = material.terms.at(index).width;
  if (material.width_shift && material.width_shift->term_index == index + 1) {
    check_temperature(material, temperature_K);
    width += material.width_shift->slope * (temperature_K - material.width_shift->t_ref);
  }
  return width;
}

complex rho(const LorentzFitMaterial& material, double omega, double temperature_K) {
  check_frequency(omega);
  check_temperature(material, temperature_K);
  complex sum{0.0, 0.0};
  for (std::size_t k = 0; k < material.terms.size(); ++k) {
    const auto& t = material.terms[k];
    const double w2 = t.resonance * t.resonance;
    const double gamma = term_width(material, k, temperature_K);
    sum += t.strength * w2 / (w2 - kI * gamma * omega - omega * omega);
  }
  return sum;
}

complex remainder_rho(const DrudeRemainder& r, double omega) {
  const double w02 = r.omega0 * r.omega0;
  return 1.0 - r.a + r.a * w02 / (w02 - kI * r.gamma0 * omega - omega * omega);
}

namespace {

complex lorentz_permittivity(const LorentzFitMaterial& m, double omega, double temperature_K) {
  const complex p = rho(m, omega, temperature_K);
  if (std::abs(1.0 - p) <= kPoleTolerance) {
    throw SingularityError("material '" + m.name + "': rho = 1 at omega = " +
                           std::to_string(omega) + " (permittivity pole)");
  }
  return (1.0 + 2.0 * p) / (1.0 - p);
}

complex drude_permittivity(const DrudeMaterial& m, double omega) {
  check_frequency(omega);
  if (omega == 0.0) {
    throw DomainError("material '" + m.name + "': Drude permittivity has a pole at omega = 0");
  }
  complex eps = 1.0 - m.plasma * m.plasma / (omega * (omega + kI * m.damping));
  if (m.remainder) {
    const complex dr = remainder_rho(*m.remainder, omega);
    if (std::abs(1.0 - dr) <= kPoleTolerance) {
      throw SingularityError("material '" + m.name + "': remainder rho = 1 at omega = " +
                             std::to_string(omega));
    }
    eps += (1.0 + 2.0 * dr) / (1.0 - dr);
  }
  return eps;
}

}  // namespace

complex permittivity(const MaterialModel& material, double omega, double temperature_K) {
  return std::visit(
      overloaded{
          [&](const LorentzFitMaterial& m) { return lorentz_permittivity(m, omega, temperature_K); },
          [&](const DrudeMaterial& m) { return drude_permittivity(m, omega); },
      },
      material);
}

complex surface_response(const MaterialModel& material, double omega, double temperature_K) {
  return std::visit(
      overloaded{
          [&](const LorentzFitMaterial& m) {
            const complex p = rho(m, omega, temperature_K);
            if (std::abs(p + 2.0) <= kPoleTolerance) {
              throw SingularityError("material '" + m.name + "': rho = -2 at omega = " +
                                     std::to_string(omega) + " (surface response pole)");
            }
            return 3.0 * p / (p + 2.0);
          },
          [&](const DrudeMaterial& m) {
            const complex eps = drude_permittivity(m, omega);
            if (std::abs(eps + 1.0) <= kPoleTolerance) {
              throw SingularityError("material '" + m.name + "': eps = -1 at omega = " +
                                     std::to_string(omega));
            }
            return (eps - 1.0) / (eps + 1.0);
          },
      },
      material);
}

std::vector<SpectralFeature> spectral_features(const MaterialModel& material,
                                               double temperature_K) {
  std::vector<SpectralFeature> features;
  std::visit(
      overloaded{
          [&](const LorentzFitMaterial& m) {
            if (m.terms.empty()) return;
            std::vector<std::size_t> order(m.terms.size());
            for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
            std::ranges::sort(order, {}, [&](std::size_t k) { return m.terms[k].resonance; });

            for (std::size_t pos = 0; pos < order.size(); ++pos) {
              const std::size_t k = order[pos];
              const double w = term_width(m, k, temperature_K);
              const double lo = m.terms[k].resonance;
              features.push_back({lo, w});

              double hi;
              if (pos + 1 < order.size()) {
                hi = m.terms[order[pos + 1]].resonance;
                if (!(hi > lo)) continue;  // degenerate resonances
              } else {
                hi = 2.0 * lo;
                while (rho_undamped(m, hi) < -2.0 && hi < 1e6 * lo) hi *= 2.0;
              }
              const double eps = 1e-12 * lo;
              const double surface = bisect_surface_mode(m, lo + eps, hi - eps);
              if (surface > lo && surface < hi) features.push_back({surface, w});
            }
          },
          [&](const DrudeMaterial& m) {
            features.push_back({m.damping, m.damping});
            features.push_back({m.plasma / std::sqrt(2.0), m.damping});
          },
      },
      material);
  std::ranges::sort(features, {}, &SpectralFeature::center);
  return features;
}

double dc_conductivity(const DrudeMaterial& material) {
  constexpr double eps0 = 1.0 / (4.0 * units::pi);
  return eps0 * material.plasma * material.plasma / material.damping;
}

}  // namespace noncontact
