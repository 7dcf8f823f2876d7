#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>

#include "noncontact/data_io.hpp"

namespace noncontact::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputationFailed = 1;
inline constexpr int kExitUsage = 2;

/// A quadrature that did not converge; maps to kExitComputationFailed.
struct ComputationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
  ~ComputationFailure() override;
};

/// Rows of the `scan` subcommand before formatting: eta_x0 is integrated
/// once per temperature and rescaled to each distance.
io::CsvTable scan_rows(const AtomModel& atom, const MaterialModel& material,
                       std::span<const double> temperatures_K, std::span<const double> z_bohr,
                       const QuadratureSettings& settings = {});

/// Runs one CLI invocation. args[0] is the program name. Results go to
/// `out` (or the file named by --output), diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace noncontact::cli
