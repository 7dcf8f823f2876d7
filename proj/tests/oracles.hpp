#pragma once

// Independent reference implementations used by the tests. They share only
// parameter data with the library, never formulas.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <variant>

#include "noncontact/atomic_polarizability.hpp"
#include "noncontact/material_response.hpp"

namespace oracle {

using cplx = std::complex<double>;
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kFineStructure = 7.2973525693e-3;
inline constexpr double kBoltzmannAu = 3.166811563e-6;

inline double beta(double T) { return 1.0 / (kBoltzmannAu * T); }

// (eps - 1)/(eps + 1) evaluated from eps itself, never via 3 rho/(rho + 2).
inline cplx response(const noncontact::MaterialModel& material, double w, double T) {
  cplx eps;
  if (const auto* m = std::get_if<noncontact::LorentzFitMaterial>(&material)) {
    cplx cm = 0.0;
    for (std::size_t k = 0; k < m->terms.size(); ++k) {
      const auto& t = m->terms[k];
      double g = t.width;
      if (m->width_shift && m->width_shift->term_index == k + 1) {
        g += m->width_shift->slope * (T - m->width_shift->t_ref);
      }
      const double w0sq = t.resonance * t.resonance;
      cm += t.strength * w0sq / cplx(w0sq - w * w, -g * w);
    }
    eps = (1.0 + 2.0 * cm) / (1.0 - cm);
  } else {
    const auto& d = std::get<noncontact::DrudeMaterial>(material);
    eps = 1.0 - d.plasma * d.plasma / (w * cplx(w, d.damping));
    if (d.remainder) {
      const auto& r = *d.remainder;
      const double w0sq = r.omega0 * r.omega0;
      const cplx dr = 1.0 - r.a + r.a * w0sq / cplx(w0sq - w * w, -r.gamma0 * w);
      eps += (1.0 + 2.0 * dr) / (1.0 - dr);
    }
  }
  return (eps - 1.0) / (eps + 1.0);
}

inline double alpha_real(const noncontact::AtomModel& atom, double w) {
  double a = 0.0;
  for (const auto& o : atom.oscillators) a += o.strength / (o.energy * o.energy - w * w);
  return a;
}

inline double im_alpha_loop(const noncontact::AtomModel& atom, double w) {
  const double a = alpha_real(atom, w);
  return 2.0 / 3.0 * kFineStructure * kFineStructure * kFineStructure * w * w * w * a * a;
}

inline double first_energy(const noncontact::AtomModel& atom) {
  double e = atom.oscillators.front().energy;
  for (const auto& o : atom.oscillators) e = std::min(e, o.energy);
  return e;
}

struct EtaPair {
  double eta1 = 0.0;
  double eta2 = 0.0;
};

// Composite trapezoid with `panels` uniform panels on [0, min(40/beta, 0.9 E_10)].
// The omega -> 0 endpoint uses the analytic limits (eta1 integrand -> 0,
// eta2 integrand -> alpha(0)^2 (d Im r/d omega)^2 4/beta^2).
inline EtaPair trapezoid_eta(const noncontact::AtomModel& atom,
                             const noncontact::MaterialModel& material, double T,
                             long panels = 1'000'000) {
  const double b = beta(T);
  const double upper = std::min(40.0 / b, 0.9 * first_energy(atom));
  const double h = upper / static_cast<double>(panels);
  const double pre1 = 3.0 * b / (8.0 * kPi);
  const double pre2 = 9.0 * b / (256.0 * kPi);

  const double tiny = 1e-9 * h;
  const double slope = response(material, tiny, T).imag() / tiny;
  const double a0 = alpha_real(atom, 0.0);
  const double f2_zero = a0 * a0 * slope * slope * 4.0 / (b * b);

  double s1 = 0.0;
  double s2 = 0.5 * f2_zero;
  for (long i = 1; i <= panels; ++i) {
    const double w = h * static_cast<double>(i);
    const double sh = std::sinh(0.5 * b * w);
    const double weight = 1.0 / (sh * sh);
    const double imr = response(material, w, T).imag();
    const double a = alpha_real(atom, w);
    const double f1 = im_alpha_loop(atom, w) * imr * weight;
    const double f2 = a * a * imr * imr * weight;
    const double end = (i == panels) ? 0.5 : 1.0;
    s1 += end * f1;
    s2 += end * f2;
  }
  return {pre1 * h * s1, pre2 * h * s2};
}

// Trace of the image dipole tensor, sum_l d_l d'_l of 1/|r - R r'| with
// R = diag(1, 1, -1), in closed form. Source at r', field point r.
inline long double image_trace(long double x, long double z, long double xp, long double zp) {
  const long double ux = x - xp;
  const long double uz = z + zp;
  const long double u2 = ux * ux + uz * uz;
  const long double u5 = u2 * u2 * std::sqrt(u2);
  // -R_ll (3 u_l^2 - u^2) / u^5, summed over l = x, y, z (u_y = 0).
  const long double xx = -(3 * ux * ux - u2);
  const long double yy = -(-u2);
  const long double zz = (3 * uz * uz - u2);
  return (xx + yy + zz) / u5;
}

// d^2/dx dx' of image_trace at x = x' = 0, z = z' = Z, by central mixed
// differences with two Richardson steps.
inline double image_green_numeric(double Z) {
  const auto mixed = [&](long double h) {
    const long double z = Z;
    return (image_trace(h, z, h, z) - image_trace(h, z, -h, z) - image_trace(-h, z, h, z) +
            image_trace(-h, z, -h, z)) /
           (4 * h * h);
  };
  const long double h = 0.02L * Z;
  const long double d1 = mixed(h), d2 = mixed(h / 2), d3 = mixed(h / 4);
  const long double r1 = (4 * d2 - d1) / 3, r2 = (4 * d3 - d2) / 3;
  return static_cast<double>((16 * r2 - r1) / 15);
}

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace oracle
