#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "noncontact/atomic_polarizability.hpp"
#include "noncontact/friction.hpp"
#include "noncontact/material_response.hpp"

#include <json.hpp>

namespace noncontact::io {

// ---- built-in data -------------------------------------------------------

/// Names of the embedded material fits, in table order.
std::span<const std::string_view> builtin_material_names();
/// Names of the shipped atom datasets.
std::span<const std::string_view> builtin_atom_names();

/// Embedded material fit by name; InvariantError-free by construction.
/// Throws std::out_of_range listing the available names.
MaterialModel builtin_material(std::string_view name);

/// Source note for a built-in material.
std::string material_provenance(std::string_view name);

/// Directory holding atoms/*.json: $NONCONTACT_DATA_DIR if set, otherwise
/// the data directory the library was built against.
std::filesystem::path data_directory();

struct Dataset {
  std::map<std::string, MaterialModel> materials;
  std::map<std::string, AtomModel> atoms;
  std::map<std::string, std::string> provenance;  // entry name -> source note
};

/// Every built-in material and atom, validated.
Dataset builtin_dataset();

// ---- parameter files -----------------------------------------------------

MaterialModel material_from_json(const nlohmann::json& doc, const std::string& context = "");
nlohmann::json material_to_json(const MaterialModel& material);

AtomModel atom_from_json(const nlohmann::json& doc, const std::string& context = "");
nlohmann::json atom_to_json(const AtomModel& atom, const std::string& source = "");

/// Parses a JSON document; ParseError carries `context` plus line/column.
nlohmann::json parse_json(std::string_view text, const std::string& context);

/// Built-in name, or a path to a material parameter file. The result is
/// validated.
MaterialModel load_material(std::string_view name_or_path);

/// Built-in atom name (looked up under data_directory()/atoms), or a path to
/// an atom parameter file. The result is validated.
AtomModel load_atom(std::string_view name_or_path);

void save_material(const MaterialModel& material, const std::filesystem::path& path);
void save_atom(const AtomModel& atom, const std::filesystem::path& path,
               const std::string& source = "");

// ---- CSV -----------------------------------------------------------------

using CsvField = std::variant<std::string, double>;

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<CsvField>> rows;
};

/// Scientific notation with 6 significant digits ("2.78000e-15").
std::string format_number(double value);

/// RFC 4180 style: comma separated, CRLF-free ("\n" line ends), fields
/// quoted when they contain a comma, quote or newline. Every row must have
/// as many fields as the header (std::invalid_argument otherwise).
void write_csv(const CsvTable& table, std::ostream& out);

/// Writes to a file; std::runtime_error names the path on failure.
void write_csv(const CsvTable& table, const std::filesystem::path& path);

/// Fixed-width text rendering of the same table.
void write_text(const CsvTable& table, std::ostream& out);

/// Parses CSV produced by write_csv; numeric-looking fields become doubles.
CsvTable read_csv(std::istream& in);

/// atom,material,T_K,eta1_x0_au,eta2_x0_au,err1,err2
CsvTable friction_table(std::span<const FrictionResult> results);

}  // namespace noncontact::io
