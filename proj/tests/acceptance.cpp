// Acceptance checks: one PASS/FAIL line per criterion, with detail lines for
// every compared quantity. Exit status is non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "noncontact/data_io.hpp"
#include "noncontact/friction.hpp"
#include "noncontact/zero_temp.hpp"
#include "oracles.hpp"

using namespace noncontact;

namespace {

// Tolerances.
constexpr double kAttenuationTol = 1e-2;
constexpr double kAttenuationDirectTol = 2e-2;
constexpr double kGroundStateTableTol = 0.30;
constexpr double kMetastableTableTol = 0.50;
constexpr double kGoldTableTol = 0.50;
constexpr double kTableRuntimeS = 10.0;
constexpr double kImageGreenTol = 1e-9;
constexpr double kPrefactorTol = 1e-14;
constexpr double kTrapezoidTol = 1e-4;
constexpr long kTrapezoidPanels = 1'000'000;
constexpr double kZeroTempAgreementTol = 5e-2;
constexpr double kZeroTempLawTol = 2e-2;
constexpr double kZeroTempRuntimeS = 60.0;
constexpr double kPowerLawTol = 1e-12;
constexpr double kStrengthScalingTol = 1e-3;
constexpr double kStaticEpsTol = 5e-3;
constexpr double kConductorAsymptoteTol = 1e-2;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Check {
  bool ok = true;
  void expect(bool condition, const std::string& detail) {
    std::printf("    %s %s\n", condition ? "ok  " : "FAIL", detail.c_str());
    ok = ok && condition;
  }
  void within(double got, double want, double tol, const std::string& label) {
    const double rel = oracle::rel_diff(got, want);
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s: got %.4e, want %.4e, rel %+.3f (tol %.3g)", label.c_str(), got,
                  want, (got - want) / std::abs(want), tol);
    expect(rel <= tol, buf);
  }
};

struct TableCell {
  const char* material;
  double T;
  const char* atom;
  double eta1;
  double eta2;
};

// Reference normalized friction coefficients at Z = a0.
const std::vector<TableCell> kSilicaTable = {
    {"sio2_ordinary", 273, "h_1s", 2.05e-15, 1.76e-1},
    {"sio2_ordinary", 273, "he_1s", 1.94e-16, 1.67e-2},
    {"sio2_ordinary", 273, "he_2s3", 1.03e-11, 8.75e2},
    {"sio2_ordinary", 298, "h_1s", 2.78e-15, 2.14e-1},
    {"sio2_ordinary", 298, "he_1s", 2.63e-16, 2.02e-2},
    {"sio2_ordinary", 298, "he_2s3", 1.40e-11, 1.06e3},
    {"sio2_ordinary", 300, "h_1s", 2.85e-15, 2.17e-1},
    {"sio2_ordinary", 300, "he_1s", 2.69e-16, 2.05e-2},
    {"sio2_ordinary", 300, "he_2s3", 1.43e-11, 1.08e3},
    {"sio2_extraordinary", 273, "h_1s", 2.00e-15, 9.19e-2},
    {"sio2_extraordinary", 273, "he_1s", 1.89e-16, 1.67e-2},
    {"sio2_extraordinary", 273, "he_2s3", 1.01e-11, 4.57e2},
    {"sio2_extraordinary", 298, "h_1s", 2.70e-15, 1.14e-1},
    {"sio2_extraordinary", 298, "he_1s", 2.55e-16, 2.02e-2},
    {"sio2_extraordinary", 298, "he_2s3", 1.36e-11, 5.69e2},
    {"sio2_extraordinary", 300, "h_1s", 2.76e-15, 1.16e-1},
    {"sio2_extraordinary", 300, "he_1s", 2.61e-16, 2.05e-2},
    {"sio2_extraordinary", 300, "he_2s3", 1.39e-11, 5.78e2},
};

const std::vector<TableCell> kFluoriteTable = {
    {"caf2", 273, "h_1s", 3.12e-15, 4.79e-1},
    {"caf2", 273, "he_1s", 8.34e-16, 4.53e-2},
    {"caf2", 273, "he_2s3", 1.54e-11, 2.37e3},
    {"caf2", 298, "h_1s", 3.61e-15, 5.09e-1},
    {"caf2", 298, "he_1s", 8.85e-16, 4.81e-2},
    {"caf2", 298, "he_2s3", 1.78e-11, 2.52e3},
    {"caf2", 300, "h_1s", 3.65e-15, 5.11e-1},
    {"caf2", 300, "he_1s", 8.88e-16, 4.83e-2},
    {"caf2", 300, "he_2s3", 1.80e-11, 2.53e3},
};

const std::vector<TableCell> kGoldTable = {
    {"au", 273, "h_1s", 8.67e-19, 1.05e-9},
    {"au", 273, "he_1s", 8.19e-20, 9.91e-11},
};

std::vector<FrictionResult> compute_cells(const std::vector<TableCell>& cells) {
  std::vector<FrictionRequest> reqs;
  for (const auto& c : cells) {
    reqs.push_back({io::load_atom(c.atom), io::load_material(c.material), c.T, {}});
  }
  return compute_friction_grid(reqs);
}

void compare_cells(Check& check, const std::vector<TableCell>& cells,
                   const std::vector<FrictionResult>& results, double ground_tol, double metastable_tol) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& c = cells[i];
    const double tol = std::string(c.atom) == "he_2s3" ? metastable_tol : ground_tol;
    const std::string label = std::string(c.material) + " " + std::to_string(int(c.T)) + " K " + c.atom;
    check.expect(results[i].converged, label + " converged");
    check.within(results[i].eta1_x0, c.eta1, tol, label + " eta1");
    check.within(results[i].eta2_x0, c.eta2, tol, label + " eta2");
  }
}

bool criterion_attenuation() {
  Check check;
  const auto start = Clock::now();
  const auto a = attenuation(6.695e-27, 8.81e-16, 4.80e-2, 20.0);
  const double elapsed = seconds_since(start);
  check.within(a.gamma, 10.55, kAttenuationTol, "gamma [1/s]");
  check.within(a.gamma1, 1.55e-9, kAttenuationDirectTol, "direct-term share [1/s]");
  check.within(a.tau, 0.0948, kAttenuationTol, "tau [s]");
  check.expect(elapsed < 1e-3, "runtime " + std::to_string(elapsed * 1e3) + " ms < 1 ms");
  return check.ok;
}

bool criterion_silica() {
  Check check;
  const auto start = Clock::now();
  const auto results = compute_cells(kSilicaTable);
  const double elapsed = seconds_since(start);
  compare_cells(check, kSilicaTable, results, kGroundStateTableTol, kMetastableTableTol);
  check.expect(elapsed < kTableRuntimeS, "runtime " + std::to_string(elapsed) + " s");
  return check.ok;
}

bool criterion_fluorite() {
  Check check;
  const auto start = Clock::now();
  const auto results = compute_cells(kFluoriteTable);
  const double elapsed = seconds_since(start);
  compare_cells(check, kFluoriteTable, results, kGroundStateTableTol, kMetastableTableTol);
  // Rows are ordered 273, 298, 300 K with three atoms each.
  for (std::size_t atom = 0; atom < 3; ++atom) {
    const auto& a = results[atom];
    const auto& b = results[atom + 3];
    const auto& c = results[atom + 6];
    check.expect(a.eta1_x0 < b.eta1_x0 && b.eta1_x0 < c.eta1_x0, a.atom + " eta1 increases with T");
    check.expect(a.eta2_x0 < b.eta2_x0 && b.eta2_x0 < c.eta2_x0, a.atom + " eta2 increases with T");
  }
  check.expect(elapsed < kTableRuntimeS, "runtime " + std::to_string(elapsed) + " s");
  return check.ok;
}

bool criterion_gold() {
  Check check;
  compare_cells(check, kGoldTable, compute_cells(kGoldTable), kGoldTableTol, kGoldTableTol);
  return check.ok;
}

bool criterion_prefactors() {
  Check check;
  for (double z : {0.5, 1.0, 2.0, 10.0, 20.0}) {
    check.within(image_green_prefactor_check(z), oracle::image_green_numeric(z), kImageGreenTol,
                 "image Green trace at Z = " + std::to_string(z));
  }
  const double pi = oracle::kPi;
  const double eps0 = 1.0 / (4.0 * pi);
  for (double T : {273.0, 300.0}) {
    const double beta = oracle::beta(T);
    check.within(eta1_prefactor(beta), 3.0 * beta / (32.0 * pi * pi * eps0), kPrefactorTol,
                 "direct prefactor, SI form at " + std::to_string(int(T)) + " K");
    check.within(eta1_prefactor(beta), 3.0 * beta / (8.0 * pi), kPrefactorTol, "direct prefactor, 3 beta/(8 pi)");
    check.within(eta2_prefactor(beta), 9.0 * beta / (4096.0 * pi * pi * pi * eps0 * eps0), kPrefactorTol,
                 "backaction prefactor, SI form at " + std::to_string(int(T)) + " K");
    check.within(eta2_prefactor(beta), 9.0 * beta / (256.0 * pi), kPrefactorTol,
                 "backaction prefactor, 9 beta/(256 pi)");
  }
  return check.ok;
}

bool criterion_trapezoid() {
  Check check;
  for (auto atom_name : io::builtin_atom_names()) {
    for (auto material_name : io::builtin_material_names()) {
      const FrictionRequest req{io::load_atom(atom_name), io::load_material(material_name), 298.0, {}};
      const auto r = compute_friction(req);
      const auto ref = oracle::trapezoid_eta(req.atom, req.material, 298.0, kTrapezoidPanels);
      const std::string label = std::string(atom_name) + " / " + std::string(material_name);
      check.within(r.eta1_x0, ref.eta1, kTrapezoidTol, label + " eta1");
      check.within(r.eta2_x0, ref.eta2, kTrapezoidTol, label + " eta2");
    }
  }
  return check.ok;
}

bool criterion_zero_temperature() {
  Check check;
  const double damping = 1e-2;
  const double sigma = 1e-2;
  const DrudeMaterial metal{.name = "drude_test",
                            .plasma = std::sqrt(4.0 * oracle::kPi * sigma * damping),
                            .damping = damping,
                            .remainder = std::nullopt};
  const AtomModel atom = io::load_atom("h_1s");
  const std::vector<double> velocities = {2.5e-5, 5e-5, 1e-4};
  const std::vector<double> distances = {25.0, 50.0, 100.0};

  const auto start = Clock::now();
  std::vector<std::vector<double>> force(3, std::vector<double>(3));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const double v = velocities[i];
      const double z = distances[j];
      const double closed = zero_temp_force_closed(zero_temp_inputs(atom, metal, v, z));
      const auto integral = zero_temp_force_integral(atom, metal, v, z);
      force[i][j] = integral.value;
      char label[96];
      std::snprintf(label, sizeof label, "v = %.1e, Z = %.0f", v, z);
      check.expect(integral.converged, std::string(label) + " converged");
      check.within(integral.value, closed, kZeroTempAgreementTol, label);
    }
  }
  const double elapsed = seconds_since(start);
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t i = 1; i < 3; ++i) {
      check.within(force[i][j] / force[i - 1][j], 8.0, kZeroTempLawTol,
                   "velocity doubling at Z = " + std::to_string(int(distances[j])));
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 1; j < 3; ++j) {
      check.within(force[i][j] / force[i][j - 1], 1.0 / 128.0, kZeroTempLawTol,
                   "distance doubling at v index " + std::to_string(i));
    }
  }
  check.expect(elapsed < kZeroTempRuntimeS, "runtime " + std::to_string(elapsed) + " s");
  return check.ok;
}

bool criterion_scaling() {
  Check check;
  for (double z : {1.0, 5.0, 20.0}) {
    const auto a = eta_si(2.6e-15, 0.18, z);
    const auto b = eta_si(2.6e-15, 0.18, 2.0 * z);
    check.within(b.eta1 / a.eta1, std::pow(2.0, -5), kPowerLawTol, "Z^-5 at Z = " + std::to_string(z));
    check.within(b.eta2 / a.eta2, std::pow(2.0, -8), kPowerLawTol, "Z^-8 at Z = " + std::to_string(z));
  }

  for (auto material_name : io::builtin_material_names()) {
    FrictionRequest base{io::load_atom("h_1s"), io::load_material(material_name), 300.0, {}};
    FrictionRequest scaled = base;
    for (auto& o : scaled.atom.oscillators) o.strength *= 2.0;
    scaled.atom.reference_static_alpha *= 2.0;
    scaled.atom.electrons = 2;
    check.within(eta2_x0(scaled).value / eta2_x0(base).value, 4.0, kStrengthScalingTol,
                 "eta2 under f -> 2f, " + std::string(material_name));
  }

  const LorentzFitMaterial vacuum{.name = "vacuum", .terms = {}, .width_shift = std::nullopt};
  for (auto atom_name : io::builtin_atom_names()) {
    const auto r = compute_friction({io::load_atom(atom_name), vacuum, 300.0, {}});
    check.expect(r.eta1_x0 == 0.0 && r.eta2_x0 == 0.0, std::string("vacuum zeros for ") + std::string(atom_name));
  }

  for (auto material_name : io::builtin_material_names()) {
    const auto m = io::load_material(material_name);
    int violations = 0;
    for (int i = 0; i < 1000; ++i) {
      const double w = 1e-7 * std::pow(1e8, i / 999.0);
      const complex eps = permittivity(m, w, 300.0);
      const complex r = surface_response(m, w, 300.0);
      if (!(eps.imag() > 0.0) || !(r.imag() > 0.0)) ++violations;
    }
    check.expect(violations == 0, "passivity of " + std::string(material_name) + " on 1000 points in [1e-7, 10]");
  }
  return check.ok;
}

bool criterion_material_checkpoints() {
  Check check;
  const auto sio2 = io::load_material("sio2_ordinary");
  check.within(permittivity(sio2, 0.0, 300.0).real(), 4.437, kStaticEpsTol, "SiO2 ordinary eps(0)");

  const auto au = io::load_material("au");
  const auto& drude = std::get<DrudeMaterial>(au);
  const double w = 1e-5;
  check.within(surface_response(au, w, 300.0).imag(), 2.0 * w * drude.damping / (drude.plasma * drude.plasma),
               kConductorAsymptoteTol, "gold Im response at 1e-5 vs conductor asymptote");

  const auto caf2 = std::get<LorentzFitMaterial>(io::load_material("caf2"));
  LorentzFitMaterial plain = caf2;
  plain.width_shift.reset();
  bool identical = true;
  for (int i = 0; i < 1000; ++i) {
    const double x = 1e-6 * std::pow(1e6, i / 999.0);
    identical = identical && surface_response(caf2, x, 300.0) == surface_response(plain, x, 300.0);
  }
  check.expect(identical, "CaF2 response at 300 K identical with and without width shift");
  return check.ok;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool()>>> criteria = {
      {"1 unit-conversion chain (attenuation example)", criterion_attenuation},
      {"2 silica table, both axes", criterion_silica},
      {"3 fluorite table and temperature trend", criterion_fluorite},
      {"4 gold table, 273 K row", criterion_gold},
      {"5 image Green function and prefactors", criterion_prefactors},
      {"6 adaptive quadrature vs 1e6-panel trapezoid", criterion_trapezoid},
      {"7 zero-temperature closed form vs triple integral", criterion_zero_temperature},
      {"8 scaling and property suite", criterion_scaling},
      {"9 material checkpoints", criterion_material_checkpoints},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    std::printf("criterion %s\n", name.c_str());
    bool ok = false;
    try {
      ok = run();
    } catch (const std::exception& e) {
      std::printf("    FAIL exception: %s\n", e.what());
    }
    std::printf("%s criterion %s\n", ok ? "PASS" : "FAIL", name.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
