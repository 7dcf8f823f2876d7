#include "noncontact/data_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "noncontact/errors.hpp"

#ifndef NONCONTACT_DEFAULT_DATA_DIR
#define NONCONTACT_DEFAULT_DATA_DIR "data"
#endif

namespace noncontact::io {

using nlohmann::json;

namespace {

constexpr std::array<std::string_view, 4> kMaterialNames = {
    "sio2_ordinary", "sio2_extraordinary", "au", "caf2"};
constexpr std::array<std::string_view, 3> kAtomNames = {"h_1s", "he_1s", "he_2s3"};

// Oscillator fits; decimal commas read as decimal points.
LorentzFitMaterial sio2_ordinary() {
  return {
      .name = "sio2_ordinary",
      .terms =
          {
              // vibrational
              {1.04e-2, 1.83e-3, 1.29e-5},
              {8.53e-2, 2.22e-3, 1.83e-5},
              {0.16e-2, 3.18e-3, 3.16e-5},
              {1.06e-2, 3.67e-3, 3.20e-5},
              {5.52e-2, 5.23e-3, 3.61e-5},
              {4.55e-2, 5.34e-3, 3.89e-5},
              // interband
              {1.05e-2, 3.89e-1, 1.12e-2},
              {4.71e-2, 4.45e-1, 5.28e-2},
              {4.98e-2, 5.37e-1, 7.32e-2},
              {1.06e-1, 6.58e-1, 1.30e-1},
              {1.12e-1, 8.26e-1, 2.40e-1},
          },
      .width_shift = std::nullopt,
  };
}

LorentzFitMaterial sio2_extraordinary() {
  return {
      .name = "sio2_extraordinary",
      .terms =
          {
              // vibrational
              {3.63e-2, 1.74e-3, 2.32e-5},
              {8.45e-4, 2.31e-3, 1.52e-5},
              {7.54e-2, 2.42e-3, 3.00e-5},
              {1.08e-2, 3.58e-3, 3.49e-5},
              {1.03e-1, 5.31e-3, 4.46e-5},
              // interband (k = 9, 10 widths as tabulated)
              {1.05e-2, 3.89e-1, 1.12e-2},
              {4.71e-2, 4.45e-1, 5.28e-2},
              {4.98e-2, 5.37e-1, 7.32e-2},
              {1.06e-1, 6.58e-1, 1.30e-2},
              {1.12e-1, 8.26e-1, 2.40e-2},
          },
      .width_shift = std::nullopt,
  };
}

LorentzFitMaterial caf2() {
  return {
      .name = "caf2",
      .terms =
          {
              {4.25e-1, 1.74e-3, 1.49e-4},
              {9.85e-3, 4.12e-1, 1.98e-2},
              {1.62e-1, 5.74e-1, 1.72e-1},
              {1.57e-1, 1.13e0, 5.58e-1},
          },
      .width_shift = WidthShift{.term_index = 1, .slope = 4.97e-7, .t_ref = 300.0},
  };
}

DrudeMaterial gold() {
  return {
      .name = "au",
      .plasma = 0.3330,
      .damping = 1.164e-3,
      .remainder = DrudeRemainder{.a = 1.5373, .omega0 = 1.462, .gamma0 = 4.550},
  };
}

[[noreturn]] void unknown_name(std::string_view kind, std::string_view name,
                               std::span<const std::string_view> available) {
  std::string msg = "unknown " + std::string(kind) + " '" + std::string(name) + "'; available:";
  for (auto n : available) msg += " " + std::string(n);
  throw std::out_of_range(msg);
}

std::string where(const std::string& context, const std::string& field) {
  return (context.empty() ? std::string() : context + ": ") + "field '" + field + "'";
}

const json& require(const json& obj, const char* key, const std::string& context,
                    const std::string& path) {
  if (!obj.is_object()) throw ParseError(where(context, path) + " must be an object");
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(where(context, path.empty() ? key : path + "." + key) + " is missing");
  }
  return *it;
}

double number(const json& obj, const char* key, const std::string& context,
              const std::string& path) {
  const json& v = require(obj, key, context, path);
  const std::string field = path.empty() ? key : path + "." + key;
  if (!v.is_number()) throw ParseError(where(context, field) + " must be a number");
  return v.get<double>();
}

std::string text(const json& obj, const char* key, const std::string& context,
                 const std::string& path = "") {
  const json& v = require(obj, key, context, path);
  if (!v.is_string()) {
    throw ParseError(where(context, path.empty() ? key : path + "." + key) + " must be a string");
  }
  return v.get<std::string>();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  out.close();
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
}

template <class T>
bool contains(std::span<const std::string_view> names, const T& name) {
  return std::ranges::find(names, std::string_view(name)) != names.end();
}

}  // namespace

std::span<const std::string_view> builtin_material_names() { return kMaterialNames; }
std::span<const std::string_view> builtin_atom_names() { return kAtomNames; }

MaterialModel builtin_material(std::string_view name) {
  if (name == "sio2_ordinary") return sio2_ordinary();
  if (name == "sio2_extraordinary") return sio2_extraordinary();
  if (name == "au") return gold();
  if (name == "caf2") return caf2();
  unknown_name("material", name, kMaterialNames);
}

std::string material_provenance(std::string_view name) {
  if (name == "sio2_ordinary") return "alpha-quartz ordinary axis: oscillator fit table, k = 1..11";
  if (name == "sio2_extraordinary") {
    return "alpha-quartz extraordinary axis: oscillator fit table, k = 1..10 (interband widths "
           "of k = 9, 10 as tabulated)";
  }
  if (name == "au") {
    return "gold: Drude term wp = 0.3330, gp = 1.164e-3 plus interband remainder a = 1.5373, "
           "w0 = 1.462, g0 = 4.550";
  }
  if (name == "caf2") {
    return "CaF2: oscillator fit table, k = 1..4; width of k = 1 shifted by 4.97e-7 a.u./K "
           "relative to 300 K";
  }
  unknown_name("material", name, kMaterialNames);
}

std::filesystem::path data_directory() {
  if (const char* env = std::getenv("NONCONTACT_DATA_DIR"); env && *env) {
    return std::filesystem::path(env);
  }
  return std::filesystem::path(NONCONTACT_DEFAULT_DATA_DIR);
}

Dataset builtin_dataset() {
  Dataset d;
  for (auto name : kMaterialNames) {
    MaterialModel m = builtin_material(name);
    validate(m);
    d.materials.emplace(std::string(name), std::move(m));
    d.provenance.emplace(std::string(name), material_provenance(name));
  }
  for (auto name : kAtomNames) {
    const auto path = data_directory() / "atoms" / (std::string(name) + ".json");
    const json doc = parse_json(read_file(path), path.string());
    AtomModel atom = atom_from_json(doc, path.string());
    validate(atom);
    d.provenance.emplace(std::string(name),
                         doc.contains("source") && doc["source"].is_string()
                             ? doc["source"].get<std::string>()
                             : path.string());
    d.atoms.emplace(std::string(name), std::move(atom));
  }
  return d;
}

json parse_json(std::string_view content, const std::string& context) {
  try {
    return json::parse(content.begin(), content.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte, content.size());
    for (std::size_t i = 0; i + 1 < end; ++i) {
      if (content[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::ostringstream os;
    os << (context.empty() ? "<input>" : context) << ":" << line << ":" << column
       << ": JSON syntax error: " << e.what();
    throw ParseError(os.str());
  }
}

MaterialModel material_from_json(const json& doc, const std::string& context) {
  if (!doc.is_object()) throw ParseError(where(context, "<root>") + " must be an object");
  const std::string name = text(doc, "name", context);
  const std::string model = text(doc, "model", context);

  if (model == "lorentz") {
    LorentzFitMaterial m;
    m.name = name;
    const json& terms = require(doc, "terms", context, "");
    if (!terms.is_array()) throw ParseError(where(context, "terms") + " must be an array");
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const std::string path = "terms[" + std::to_string(k) + "]";
      m.terms.push_back({number(terms[k], "alpha", context, path),
                         number(terms[k], "omega", context, path),
                         number(terms[k], "gamma", context, path)});
    }
    if (auto it = doc.find("width_shift"); it != doc.end() && !it->is_null()) {
      const json& ws = *it;
      const double index = number(ws, "term_index", context, "width_shift");
      if (index < 1 || index != std::floor(index)) {
        throw ParseError(where(context, "width_shift.term_index") +
                         " must be a positive integer (1-based)");
      }
      m.width_shift = WidthShift{
          .term_index = static_cast<std::size_t>(index),
          .slope = number(ws, "slope", context, "width_shift"),
          .t_ref = ws.contains("t_ref") ? number(ws, "t_ref", context, "width_shift") : 300.0,
      };
    }
    return m;
  }
  if (model == "drude") {
    const json& d = require(doc, "drude", context, "");
    DrudeMaterial m;
    m.name = name;
    m.plasma = number(d, "omega_p", context, "drude");
    m.damping = number(d, "gamma_p", context, "drude");
    if (auto it = d.find("remainder"); it != d.end() && !it->is_null()) {
      m.remainder = DrudeRemainder{
          .a = number(*it, "a", context, "drude.remainder"),
          .omega0 = number(*it, "omega0", context, "drude.remainder"),
          .gamma0 = number(*it, "gamma0", context, "drude.remainder"),
      };
    }
    return m;
  }
  throw ParseError(where(context, "model") + " must be \"lorentz\" or \"drude\", got \"" + model +
                   "\"");
}

json material_to_json(const MaterialModel& material) {
  json doc;
  if (const auto* m = std::get_if<LorentzFitMaterial>(&material)) {
    doc["name"] = m->name;
    doc["model"] = "lorentz";
    doc["terms"] = json::array();
    for (const auto& t : m->terms) {
      doc["terms"].push_back({{"alpha", t.strength}, {"omega", t.resonance}, {"gamma", t.width}});
    }
    if (m->width_shift) {
      doc["width_shift"] = {{"term_index", m->width_shift->term_index},
                            {"slope", m->width_shift->slope},
                            {"t_ref", m->width_shift->t_ref}};
    }
  } else {
    const auto& d = std::get<DrudeMaterial>(material);
    doc["name"] = d.name;
    doc["model"] = "drude";
    doc["drude"] = {{"omega_p", d.plasma}, {"gamma_p", d.damping}};
    if (d.remainder) {
      doc["drude"]["remainder"] = {
          {"a", d.remainder->a}, {"omega0", d.remainder->omega0}, {"gamma0", d.remainder->gamma0}};
    }
  }
  return doc;
}

AtomModel atom_from_json(const json& doc, const std::string& context) {
  if (!doc.is_object()) throw ParseError(where(context, "<root>") + " must be an object");
  AtomModel atom;
  atom.name = text(doc, "name", context);
  atom.mass_kg = number(doc, "mass_kg", context, "");
  atom.reference_static_alpha = number(doc, "reference_static_alpha", context, "");
  if (auto it = doc.find("skip_trk"); it != doc.end()) {
    if (!it->is_boolean()) throw ParseError(where(context, "skip_trk") + " must be a boolean");
    atom.skip_trk = it->get<bool>();
  }
  if (auto it = doc.find("electrons"); it != doc.end() && !it->is_null()) {
    if (!it->is_number_integer()) {
      throw ParseError(where(context, "electrons") + " must be an integer");
    }
    atom.electrons = it->get<int>();
  }
  const json& osc = require(doc, "oscillators", context, "");
  if (!osc.is_array()) throw ParseError(where(context, "oscillators") + " must be an array");
  for (std::size_t n = 0; n < osc.size(); ++n) {
    const std::string path = "oscillators[" + std::to_string(n) + "]";
    atom.oscillators.push_back({number(osc[n], "f", context, path),
                                number(osc[n], "E", context, path),
                                number(osc[n], "Gamma", context, path)});
  }
  return atom;
}

json atom_to_json(const AtomModel& atom, const std::string& source) {
  json doc;
  doc["name"] = atom.name;
  if (!source.empty()) doc["source"] = source;
  doc["mass_kg"] = atom.mass_kg;
  doc["reference_static_alpha"] = atom.reference_static_alpha;
  if (atom.electrons) doc["electrons"] = *atom.electrons;
  doc["skip_trk"] = atom.skip_trk;
  doc["oscillators"] = json::array();
  for (const auto& o : atom.oscillators) {
    doc["oscillators"].push_back({{"f", o.strength}, {"E", o.energy}, {"Gamma", o.width}});
  }
  return doc;
}

MaterialModel load_material(std::string_view name_or_path) {
  if (contains(builtin_material_names(), name_or_path)) {
    MaterialModel m = builtin_material(name_or_path);
    validate(m);
    return m;
  }
  const std::filesystem::path path{std::string(name_or_path)};
  if (!std::filesystem::is_regular_file(path)) unknown_name("material", name_or_path, kMaterialNames);
  MaterialModel m = material_from_json(parse_json(read_file(path), path.string()), path.string());
  validate(m);
  return m;
}

AtomModel load_atom(std::string_view name_or_path) {
  std::filesystem::path path;
  if (contains(builtin_atom_names(), name_or_path)) {
    path = data_directory() / "atoms" / (std::string(name_or_path) + ".json");
  } else {
    path = std::filesystem::path(std::string(name_or_path));
    if (!std::filesystem::is_regular_file(path)) unknown_name("atom", name_or_path, kAtomNames);
  }
  AtomModel atom = atom_from_json(parse_json(read_file(path), path.string()), path.string());
  validate(atom);
  return atom;
}

void save_material(const MaterialModel& material, const std::filesystem::path& path) {
  write_file(path, material_to_json(material).dump(2) + "\n");
}

void save_atom(const AtomModel& atom, const std::filesystem::path& path,
               const std::string& source) {
  write_file(path, atom_to_json(atom, source).dump(2) + "\n");
}

// ---- CSV -------------------------------------------------------------------

std::string format_number(double value) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.5e", value);
  return buf.data();
}

namespace {

std::string render(const CsvField& field) {
  if (const auto* d = std::get_if<double>(&field)) return format_number(*d);
  return std::get<std::string>(field);
}

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void check_shape(const CsvTable& table) {
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (table.rows[r].size() != table.header.size()) {
      throw std::invalid_argument("CSV row " + std::to_string(r) + " has " +
                                  std::to_string(table.rows[r].size()) + " fields, header has " +
                                  std::to_string(table.header.size()));
    }
  }
}

std::vector<std::string> split_record(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

}  // namespace

void write_csv(const CsvTable& table, std::ostream& out) {
  check_shape(table);
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    out << (c ? "," : "") << quote(table.header[c]);
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << quote(render(row[c]));
    out << '\n';
  }
}

void write_csv(const CsvTable& table, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  write_csv(table, out);
  out.close();
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

void write_text(const CsvTable& table, std::ostream& out) {
  check_shape(table);
  std::vector<std::size_t> width(table.header.size());
  for (std::size_t c = 0; c < width.size(); ++c) width[c] = table.header[c].size();
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], render(row[c]).size());
  }
  auto line = [&](auto&& cell) {
    for (std::size_t c = 0; c < width.size(); ++c) {
      out << (c ? "  " : "") << std::left << std::setw(static_cast<int>(width[c])) << cell(c);
    }
    out << '\n';
  };
  line([&](std::size_t c) { return table.header[c]; });
  for (const auto& row : table.rows) line([&](std::size_t c) { return render(row[c]); });
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_record(line);
    if (first) {
      table.header = std::move(fields);
      first = false;
      continue;
    }
    std::vector<CsvField> row;
    for (auto& f : fields) {
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
      if (ec == std::errc() && ptr == f.data() + f.size() && !f.empty()) {
        row.emplace_back(value);
      } else {
        row.emplace_back(std::move(f));
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

CsvTable friction_table(std::span<const FrictionResult> results) {
  CsvTable table;
  table.header = {"atom", "material", "T_K", "eta1_x0_au", "eta2_x0_au", "err1", "err2"};
  for (const auto& r : results) {
    table.rows.push_back({r.atom, r.material, r.temperature_K, r.eta1_x0, r.eta2_x0, r.err1,
                          r.err2});
  }
  return table;
}

}  // namespace noncontact::io
