#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "mlaf/diagnostics.hpp"

namespace mlaf {

/// "t,H0..H{N},Hbar0..Hbar{N},Phi0..Phi{N},sup_ubar,sup_grad_ubar,inj,visc,dEdt"
std::string diagnostics_header(int max_order);
/// "t,dHbar0_dt..dHbar{N}_dt,nl_transfer"
std::string rates_header(int max_order);

/// "shell,k,E_u,E_ubar"
std::string spectrum_header();
/// One row per shell; the shell index is written as an integer.
void write_spectrum(std::ostream& out, const EnergySpectrum& spectrum);

/// Values in %.16e (17 significant digits).
std::string diagnostics_row(const DiagnosticsRecord& rec);
std::string rates_row(const DiagnosticsRecord& rec);

/// "# key = value" lines, one per entry.
void write_comment_block(std::ostream& out,
                         const std::vector<std::pair<std::string, std::string>>& entries);

struct CsvTable {
    std::vector<std::pair<std::string, std::string>> comments;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// Reads '#' comment lines, the header and numeric rows. Throws FormatError
/// on ragged rows or unparsable numbers.
CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::string& path);

/// Rebuilds records from a diagnostics table and the matching rates table.
/// Throws FormatError naming the first missing column or a time mismatch.
std::vector<DiagnosticsRecord> records_from_tables(const CsvTable& diagnostics,
                                                   const CsvTable& rates);

/// Largest N for which the diagnostics header carries H{N}.
int max_order_of(const CsvTable& diagnostics);

} // namespace mlaf
