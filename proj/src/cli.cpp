#include "noncontact/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <vector>

#include "noncontact/data_io.hpp"
#include "noncontact/errors.hpp"
#include "noncontact/friction.hpp"
#include "noncontact/units.hpp"
#include "noncontact/zero_temp.hpp"

namespace noncontact::cli {

ComputationFailure::~ComputationFailure() = default;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string atom;
  std::string material;
  std::vector<double> temps;
  std::vector<double> zs;
  std::string output = "-";
  std::string format = "csv";
  double rel_tol = QuadratureSettings{}.rel_tol;
};

void check_temperature(double T) {
  if (!(T >= kMinSupportedTemperature && T <= kMaxSupportedTemperature)) {
    std::ostringstream os;
    os << "--temp " << T << " K is outside the supported range [" << kMinSupportedTemperature
       << ", " << kMaxSupportedTemperature << "] K (material models are validated only there)";
    throw UsageError(os.str());
  }
}

QuadratureSettings settings_from(const Common& c) {
  QuadratureSettings s;
  s.rel_tol = c.rel_tol;
  return s;
}

void emit(const io::CsvTable& table, const Common& c, std::ostream& out) {
  auto render = [&](std::ostream& os) {
    if (c.format == "text") {
      io::write_text(table, os);
    } else {
      io::write_csv(table, os);
    }
  };
  if (c.output.empty() || c.output == "-") {
    render(out);
    return;
  }
  std::ofstream file(c.output);
  if (!file) throw std::runtime_error("cannot open '" + c.output + "' for writing");
  render(file);
  file.close();
  if (!file) throw std::runtime_error("failed writing '" + c.output + "'");
}

std::string number_or_inf(double x) {
  if (std::isinf(x)) return "inf";
  return io::format_number(x);
}

// ---- subcommands -------------------------------------------------------

io::CsvTable cmd_eta(const Common& c) {
  check_temperature(c.temps.at(0));
  const FrictionRequest req{io::load_atom(c.atom), io::load_material(c.material), c.temps.at(0),
                            settings_from(c)};
  const FrictionResult r = compute_friction(req);
  if (!r.converged) {
    throw ComputationFailure("quadrature did not converge for " + c.atom + " / " + c.material);
  }
  return io::friction_table(std::span(&r, 1));
}

io::CsvTable cmd_scan(const Common& c) {
  for (double T : c.temps) check_temperature(T);
  for (double z : c.zs) {
    if (!(z > 0.0)) throw UsageError("--z values must be positive");
  }
  return scan_rows(io::load_atom(c.atom), io::load_material(c.material), c.temps, c.zs,
                   settings_from(c));
}

io::CsvTable cmd_material(const Common& c, const std::vector<double>& omegas) {
  const double T = c.temps.empty() ? 300.0 : c.temps.at(0);
  check_temperature(T);
  const MaterialModel material = io::load_material(c.material);
  io::CsvTable table;
  table.header = {"material", "T_K", "omega_au", "re_eps", "im_eps", "re_response", "im_response"};
  for (double w : omegas) {
    const complex eps = permittivity(material, w, T);
    const complex r = surface_response(material, w, T);
    table.rows.push_back({material_name(material), T, w, eps.real(), eps.imag(), r.real(), r.imag()});
  }
  return table;
}

io::CsvTable cmd_alpha(const Common& c, const std::vector<double>& omegas) {
  const AtomModel atom = io::load_atom(c.atom);
  io::CsvTable table;
  table.header = {"atom", "omega_au", "re_alpha", "im_alpha", "im_alpha_one_loop"};
  for (double w : omegas) {
    const auto a = alpha(atom, w);
    io::CsvField loop = std::string("n/a");
    if (w < first_resonance(atom)) loop = im_alpha_one_loop(atom, w);
    table.rows.push_back({atom.name, w, a.real(), a.imag(), loop});
  }
  return table;
}

io::CsvTable cmd_attenuation(const Common& c, double eta1, double eta2,
                             std::optional<double> mass) {
  if (c.zs.size() != 1) throw UsageError("attenuation takes exactly one --z value");
  std::string label = "custom";
  double m = 0.0;
  if (mass) {
    m = *mass;
    if (!c.atom.empty()) label = c.atom;
  } else {
    if (c.atom.empty()) throw UsageError("attenuation needs --atom or --mass");
    const AtomModel atom = io::load_atom(c.atom);
    m = atom.mass_kg;
    label = atom.name;
  }
  const Attenuation a = attenuation(m, eta1, eta2, c.zs.front());
  io::CsvTable table;
  table.header = {"atom", "mass_kg", "Z_a0", "gamma_per_s", "gamma1_per_s", "gamma2_per_s", "tau_s"};
  table.rows.push_back({label, m, c.zs.front(), a.gamma, a.gamma1, a.gamma2, number_or_inf(a.tau)});
  return table;
}

io::CsvTable cmd_zerotemp(const Common& c, const std::vector<double>& velocities, bool closed_only) {
  const AtomModel atom = io::load_atom(c.atom);
  const MaterialModel material = io::load_material(c.material);
  const auto* drude = std::get_if<DrudeMaterial>(&material);
  if (!drude) throw UsageError("zerotemp needs a Drude material (e.g. --material au)");

  io::CsvTable table;
  table.header = {"atom", "material", "v_au", "Z_a0", "force_closed_au", "force_integral_au",
                  "rel_diff"};
  for (double z : c.zs) {
    for (double v : velocities) {
      const double closed = zero_temp_force_closed(zero_temp_inputs(atom, *drude, v, z));
      std::vector<io::CsvField> row{atom.name, drude->name, v, z, closed};
      if (closed_only) {
        row.emplace_back(std::string("n/a"));
        row.emplace_back(std::string("n/a"));
      } else {
        const QuadratureResult integral = zero_temp_force_integral(atom, *drude, v, z);
        if (!integral.converged) throw ComputationFailure("zero-temperature integral did not converge");
        row.emplace_back(integral.value);
        row.emplace_back(std::abs(integral.value / closed - 1.0));
      }
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

void cmd_reproduce_tables(const Common& c, std::ostream& out) {
  const std::filesystem::path dir = (c.output.empty() || c.output == "-") ? "." : c.output;
  std::filesystem::create_directories(dir);
  const std::vector<double> temps = {273.0, 298.0, 300.0};
  const std::vector<std::string> atoms = {"h_1s", "he_1s", "he_2s3"};
  const std::vector<std::pair<std::string, std::vector<std::string>>> tables = {
      {"friction_sio2.csv", {"sio2_ordinary", "sio2_extraordinary"}},
      {"friction_au.csv", {"au"}},
      {"friction_caf2.csv", {"caf2"}},
  };

  std::vector<AtomModel> atom_models;
  for (const auto& a : atoms) atom_models.push_back(io::load_atom(a));

  std::vector<FrictionRequest> requests;
  for (const auto& [file, materials] : tables) {
    for (const auto& mname : materials) {
      const MaterialModel m = io::load_material(mname);
      for (double T : temps) {
        for (const auto& atom : atom_models) requests.push_back({atom, m, T, settings_from(c)});
      }
    }
  }
  const auto results = compute_friction_grid(requests);
  for (const auto& r : results) {
    if (!r.converged) {
      throw ComputationFailure("quadrature did not converge for " + r.atom + " / " + r.material);
    }
  }

  std::size_t next = 0;
  for (const auto& [file, materials] : tables) {
    io::CsvTable table;
    table.header = {"material", "T_K"};
    for (const auto& a : atoms) {
      table.header.push_back(a + "_eta1_x0_au");
      table.header.push_back(a + "_eta2_x0_au");
    }
    for (const auto& mname : materials) {
      for (double T : temps) {
        std::vector<io::CsvField> row{mname, T};
        for (std::size_t i = 0; i < atoms.size(); ++i, ++next) {
          row.emplace_back(results[next].eta1_x0);
          row.emplace_back(results[next].eta2_x0);
        }
        table.rows.push_back(std::move(row));
      }
    }
    io::write_csv(table, dir / file);
    out << (dir / file).string() << '\n';
  }
}

void cmd_dump_datasets(const Common& c, std::ostream& out) {
  const std::filesystem::path dir = (c.output.empty() || c.output == "-") ? "." : c.output;
  std::filesystem::create_directories(dir / "materials");
  std::filesystem::create_directories(dir / "atoms");
  const io::Dataset d = io::builtin_dataset();
  for (const auto& [name, m] : d.materials) {
    const auto path = dir / "materials" / (name + ".json");
    io::save_material(m, path);
    out << path.string() << '\n';
  }
  for (const auto& [name, a] : d.atoms) {
    const auto path = dir / "atoms" / (name + ".json");
    io::save_atom(a, path, d.provenance.at(name));
    out << path.string() << '\n';
  }
}

}  // namespace

io::CsvTable scan_rows(const AtomModel& atom, const MaterialModel& material,
                       std::span<const double> temperatures_K, std::span<const double> z_bohr,
                       const QuadratureSettings& settings) {
  std::vector<FrictionRequest> requests;
  for (double T : temperatures_K) requests.push_back({atom, material, T, settings});
  const auto results = compute_friction_grid(requests);

  io::CsvTable table;
  table.header = {"atom",       "material",     "T_K",          "Z_a0",
                  "eta1_x0_au", "eta2_x0_au",   "eta1_si_kg_s", "eta2_si_kg_s",
                  "eta_total_si_kg_s"};
  for (const auto& r : results) {
    if (!r.converged) {
      throw ComputationFailure("quadrature did not converge at T = " +
                               io::format_number(r.temperature_K));
    }
    for (double z : z_bohr) {
      const SiFriction si = eta_si(r.eta1_x0, r.eta2_x0, z);
      table.rows.push_back({r.atom, r.material, r.temperature_K, z, r.eta1_x0, r.eta2_x0, si.eta1,
                            si.eta2, si.total});
    }
  }
  return table;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Noncontact (van der Waals) friction of H and He atoms near surfaces"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  Common c;
  std::vector<double> omegas;
  std::vector<double> velocities;
  double eta1 = 0.0;
  double eta2 = 0.0;
  std::optional<double> mass;
  bool closed_only = false;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output,-o", c.output, "Output file ('-' for stdout)");
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "text"}));
  };
  auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--rel-tol", c.rel_tol, "Quadrature relative tolerance")
        ->check(CLI::PositiveNumber);
  };

  auto* eta = app.add_subcommand("eta", "Normalized friction coefficients at Z = a0");
  eta->add_option("--atom", c.atom, "Atom name or parameter file")->required();
  eta->add_option("--material", c.material, "Material name or parameter file")->required();
  eta->add_option("--temp", c.temps, "Temperature in K")->required()->expected(1);
  add_tol(eta);
  add_output(eta);

  auto* scan = app.add_subcommand("scan", "SI friction over a temperature and distance grid");
  scan->add_option("--atom", c.atom, "Atom name or parameter file")->required();
  scan->add_option("--material", c.material, "Material name or parameter file")->required();
  scan->add_option("--temp", c.temps, "Temperatures in K (comma separated)")
      ->required()->delimiter(',');
  scan->add_option("--z", c.zs, "Distances in Bohr radii (comma separated)")
      ->required()->delimiter(',');
  add_tol(scan);
  add_output(scan);

  auto* mat = app.add_subcommand("material", "Permittivity and surface response of a material");
  mat->add_option("--material", c.material, "Material name or parameter file")->required();
  mat->add_option("--temp", c.temps, "Temperature in K (default 300)")->expected(1);
  mat->add_option("--omega", omegas, "Angular frequencies in a.u. (comma separated)")
      ->required()->delimiter(',');
  add_output(mat);

  auto* alp = app.add_subcommand("alpha", "Dynamic polarizability of an atom");
  alp->add_option("--atom", c.atom, "Atom name or parameter file")->required();
  alp->add_option("--omega", omegas, "Angular frequencies in a.u. (comma separated)")
      ->required()->delimiter(',');
  add_output(alp);

  auto* att = app.add_subcommand("attenuation", "Velocity damping rate and time constant");
  att->add_option("--atom", c.atom, "Atom supplying the mass");
  att->add_option("--mass", mass, "Mass in kg (overrides --atom)");
  att->add_option("--eta1", eta1, "Normalized direct coefficient (a.u.)")->required();
  att->add_option("--eta2", eta2, "Normalized backaction coefficient (a.u.)")->required();
  att->add_option("--z", c.zs, "Distance in Bohr radii")->required()->expected(1);
  add_output(att);

  auto* zt = app.add_subcommand("zerotemp", "Zero-temperature friction force near a conductor");
  zt->add_option("--atom", c.atom, "Atom name or parameter file")->required();
  zt->add_option("--material", c.material, "Drude material name or parameter file")->required();
  zt->add_option("--velocity", velocities, "Velocities in a.u. (comma separated)")
      ->required()->delimiter(',');
  zt->add_option("--z", c.zs, "Distances in Bohr radii (comma separated)")
      ->required()->delimiter(',');
  zt->add_flag("--closed-only", closed_only, "Skip the numerical triple integral");
  add_output(zt);

  auto* rep = app.add_subcommand("reproduce-tables", "Write the friction tables as CSV files");
  rep->add_option("--output,-o", c.output, "Output directory (default: current directory)");
  add_tol(rep);

  auto* dump = app.add_subcommand("dump-datasets", "Export built-in datasets as parameter files");
  dump->add_option("--output,-o", c.output, "Output directory (default: current directory)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("noncontact");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eta->parsed()) {
      emit(cmd_eta(c), c, out);
    } else if (scan->parsed()) {
      emit(cmd_scan(c), c, out);
    } else if (mat->parsed()) {
      emit(cmd_material(c, omegas), c, out);
    } else if (alp->parsed()) {
      emit(cmd_alpha(c, omegas), c, out);
    } else if (att->parsed()) {
      emit(cmd_attenuation(c, eta1, eta2, mass), c, out);
    } else if (zt->parsed()) {
      emit(cmd_zerotemp(c, velocities, closed_only), c, out);
    } else if (rep->parsed()) {
      cmd_reproduce_tables(c, out);
    } else if (dump->parsed()) {
      cmd_dump_datasets(c, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {  // unknown names, RangeError
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputationFailed;
  }
  return kExitOk;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace noncontact::cli
