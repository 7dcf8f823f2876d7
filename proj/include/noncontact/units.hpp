#pragma once

// Physical constants and the atomic-unit <-> SI conversions used throughout
// the library. Everything inside the library runs in atomic units
// (hbar = e = m_e = 1, eps0 = 1/(4 pi), c = 1/alpha); SI only appears at the
// API boundary.

namespace noncontact::units {

inline constexpr double pi = 3.14159265358979323846;

struct PhysicalConstants {
  double fine_structure;             // dimensionless
  double elementary_charge_C;        // C
  double bohr_radius_m;              // m
  double hartree_J;                  // J
  double atomic_force_N;             // N, e^2 / (4 pi eps0 a0^2)
  double atomic_friction_kg_s;       // kg/s, F_au / (alpha c)
  double atomic_angular_freq_rad_s;  // rad/s, E_h / hbar
  double atomic_freq_Hz;             // Hz, E_h / h
  double boltzmann_au;               // E_h / K
};

/// Conversion values used for all SI output,
/// plus k_B/E_h from CODATA.
inline constexpr PhysicalConstants constants{
    .fine_structure = 7.2973525693e-3,
    .elementary_charge_C = 1.60218e-19,
    .bohr_radius_m = 5.29177e-11,
    .hartree_J = 4.35974e-18,
    .atomic_force_N = 8.23872e-8,
    .atomic_friction_kg_s = 3.76594e-14,
    .atomic_angular_freq_rad_s = 4.13414e16,
    .atomic_freq_Hz = 6.57968e15,
    .boltzmann_au = 3.166811563e-6,
};

/// Exact / CODATA 2018 SI constants, used only to cross-check the table above.
namespace codata {
inline constexpr double speed_of_light_m_s = 299792458.0;
inline constexpr double vacuum_permittivity_F_m = 8.8541878128e-12;
inline constexpr double hbar_J_s = 1.054571817e-34;
inline constexpr double planck_J_s = 6.62607015e-34;
}  // namespace codata

/// Inverse thermal energy 1/(k_B T) in inverse Hartree. Throws DomainError
/// for T <= 0 or non-finite T.
double thermal_beta_au(double temperature_K);

double friction_au_to_si(double eta_au);
double friction_si_to_au(double eta_kg_s);

double length_au_to_si(double length_bohr);
double length_si_to_au(double length_m);

double angular_freq_au_to_si(double omega_au);
double angular_freq_si_to_au(double omega_rad_s);

}  // namespace noncontact::units
