#include "lagmult/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace lagmult {

namespace {

std::string num(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_num(double v) {
    if (std::isfinite(v)) return num(v);
    return "\"" + num(v) + "\"";
}

std::string json_str(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out + "\"";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void write_pairs(std::ostream& out, const std::vector<std::pair<std::string, double>>& kv) {
    out << "{";
    for (std::size_t i = 0; i < kv.size(); ++i)
        out << (i ? ", " : "") << json_str(kv[i].first) << ": " << json_num(kv[i].second);
    out << "}";
}

}  // namespace

void write_csv(const Table& table, std::ostream& out) {
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        out << (i ? "," : "") << csv_field(table.columns[i]);
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << num(row[i]);
        out << "\n";
    }
}

void write_json(const VerificationReport& r, std::ostream& out) {
    out << "{\n";
    out << "  \"theorem\": " << json_str(r.theorem) << ",\n";
    out << "  \"parameters\": ";
    write_pairs(out, r.parameters);
    out << ",\n";
    out << "  \"admissible\": " << (r.admissible ? "true" : "false") << ",\n";
    out << "  \"branch\": " << json_str(r.branch) << ",\n";
    out << "  \"columns\": [";
    for (std::size_t i = 0; i < r.table.columns.size(); ++i)
        out << (i ? ", " : "") << json_str(r.table.columns[i]);
    out << "],\n";
    out << "  \"rows\": [";
    for (std::size_t j = 0; j < r.table.rows.size(); ++j) {
        out << (j ? ",\n    [" : "\n    [");
        const auto& row = r.table.rows[j];
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? ", " : "") << json_num(row[i]);
        out << "]";
    }
    out << (r.table.rows.empty() ? "],\n" : "\n  ],\n");
    out << "  \"ratio_sup\": " << json_num(r.ratio_sup) << ",\n";
    out << "  \"fits\": {";
    for (std::size_t i = 0; i < r.fits.size(); ++i) {
        const auto& [name, f] = r.fits[i];
        out << (i ? ",\n    " : "\n    ") << json_str(name) << ": {\"slope\": " << json_num(f.slope)
            << ", \"intercept\": " << json_num(f.intercept)
            << ", \"max_residual\": " << json_num(f.max_residual) << ", \"n_lo\": " << json_num(f.n_lo)
            << ", \"n_hi\": " << json_num(f.n_hi) << ", \"points\": " << f.points << "}";
    }
    out << (r.fits.empty() ? "},\n" : "\n  },\n");
    out << "  \"notes\": ";
    write_pairs(out, r.notes);
    out << ",\n";
    out << "  \"verdict\": " << json_str(to_string(r.verdict)) << ",\n";
    out << "  \"message\": " << json_str(r.message) << "\n";
    out << "}\n";
}

void emit_report(const VerificationReport& report, ReportFormat format, const std::string& path) {
    auto write = [&](std::ostream& os) {
        if (format == ReportFormat::csv) write_csv(report.table, os);
        else write_json(report, os);
    };
    if (path == "-") {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open " + path + " for writing");
    write(file);
    file.close();
    if (!file) throw std::runtime_error("error while writing " + path);
}

}  // namespace lagmult
