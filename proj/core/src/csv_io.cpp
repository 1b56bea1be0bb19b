#include "mlaf/csv_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "mlaf/error.hpp"

namespace mlaf {

namespace {

void append(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    if (!out.empty()) {
        out += ',';
    }
    out += buf;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        out.push_back(trim(cell));
    }
    return out;
}

std::size_t column(const CsvTable& table, const std::string& name) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (table.columns[i] == name) {
            return i;
        }
    }
    throw FormatError("csv: missing column '" + name + "'");
}

} // namespace

std::string diagnostics_header(int n) {
    std::string out = "t";
    for (const char* prefix : {"H", "Hbar", "Phi"}) {
        for (int i = 0; i <= n; ++i) {
            out += "," + std::string(prefix) + std::to_string(i);
        }
    }
    out += ",sup_ubar,sup_grad_ubar,inj,visc,dEdt";
    return out;
}

std::string rates_header(int n) {
    std::string out = "t";
    for (int i = 0; i <= n; ++i) {
        out += ",dHbar" + std::to_string(i) + "_dt";
    }
    out += ",nl_transfer";
    return out;
}

std::string spectrum_header() { return "shell,k,E_u,E_ubar"; }

void write_spectrum(std::ostream& out, const EnergySpectrum& spectrum) {
    out << spectrum_header() << "\n";
    for (std::size_t s = 0; s < spectrum.u.size(); ++s) {
        std::string row;
        append(row, spectrum.k0 * static_cast<double>(s));
        append(row, spectrum.u[s]);
        append(row, spectrum.ubar[s]);
        out << s << "," << row << "\n";
    }
}

std::string diagnostics_row(const DiagnosticsRecord& r) {
    std::string out;
    append(out, r.t);
    for (const auto* v : {&r.H, &r.Hbar, &r.Phi}) {
        for (double x : *v) {
            append(out, x);
        }
    }
    append(out, r.sup_ubar);
    append(out, r.sup_grad_ubar);
    append(out, r.inj);
    append(out, r.visc);
    append(out, r.dE_dt);
    return out;
}

std::string rates_row(const DiagnosticsRecord& r) {
    std::string out;
    append(out, r.t);
    for (double x : r.dHbar_dt) {
        append(out, x);
    }
    append(out, r.nl_transfer);
    return out;
}

void write_comment_block(std::ostream& out,
                         const std::vector<std::pair<std::string, std::string>>& entries) {
    for (const auto& [k, v] : entries) {
        out << "# " << k << " = " << v << "\n";
    }
}

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            const std::string body = line.substr(1);
            const auto eq = body.find('=');
            if (eq != std::string::npos) {
                table.comments.emplace_back(trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
            }
            continue;
        }
        if (table.columns.empty()) {
            table.columns = split(line);
            continue;
        }
        const auto cells = split(line);
        if (cells.size() != table.columns.size()) {
            throw FormatError("csv: line " + std::to_string(lineno) + " has " +
                              std::to_string(cells.size()) + " fields, expected " +
                              std::to_string(table.columns.size()));
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& c : cells) {
            try {
                std::size_t used = 0;
                row.push_back(std::stod(c, &used));
                if (used != c.size()) {
                    throw std::invalid_argument(c);
                }
            } catch (const std::exception&) {
                throw FormatError("csv: line " + std::to_string(lineno) +
                                  ": not a number: '" + c + "'");
            }
        }
        table.rows.push_back(std::move(row));
    }
    if (table.columns.empty()) {
        throw FormatError("csv: no header row");
    }
    return table;
}

CsvTable read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("csv: cannot open '" + path + "'");
    }
    return read_csv(in);
}

int max_order_of(const CsvTable& d) {
    int n = -1;
    while (true) {
        const std::string name = "H" + std::to_string(n + 1);
        bool found = false;
        for (const auto& c : d.columns) {
            found = found || c == name;
        }
        if (!found) {
            break;
        }
        ++n;
    }
    if (n < 0) {
        throw FormatError("csv: missing column 'H0'");
    }
    return n;
}

std::vector<DiagnosticsRecord> records_from_tables(const CsvTable& d, const CsvTable& rates) {
    const int n = max_order_of(d);
    const auto expected = split(diagnostics_header(n));
    for (const auto& name : expected) {
        column(d, name);
    }
    for (const auto& name : split(rates_header(n))) {
        column(rates, name);
    }
    if (d.rows.size() != rates.rows.size()) {
        throw FormatError("csv: diagnostics and rates tables differ in length");
    }
    const std::size_t ct = column(d, "t");
    const std::size_t crt = column(rates, "t");
    std::vector<DiagnosticsRecord> out;
    out.reserve(d.rows.size());
    for (std::size_t i = 0; i < d.rows.size(); ++i) {
        const auto& row = d.rows[i];
        const auto& rr = rates.rows[i];
        if (row[ct] != rr[crt]) {
            throw FormatError("csv: time mismatch between diagnostics and rates at row " +
                              std::to_string(i));
        }
        DiagnosticsRecord rec;
        rec.t = row[ct];
        for (int k = 0; k <= n; ++k) {
            const std::string s = std::to_string(k);
            rec.H.push_back(row[column(d, "H" + s)]);
            rec.Hbar.push_back(row[column(d, "Hbar" + s)]);
            rec.Phi.push_back(row[column(d, "Phi" + s)]);
            rec.dHbar_dt.push_back(rr[column(rates, "dHbar" + s + "_dt")]);
        }
        rec.sup_ubar = row[column(d, "sup_ubar")];
        rec.sup_grad_ubar = row[column(d, "sup_grad_ubar")];
        rec.inj = row[column(d, "inj")];
        rec.visc = row[column(d, "visc")];
        rec.dE_dt = row[column(d, "dEdt")];
        rec.nl_transfer = rr[column(rates, "nl_transfer")];
        out.push_back(std::move(rec));
    }
    return out;
}

} // namespace mlaf
