#include "lagmult/lagmult.h"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitUsage = 64;

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(field);
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    out.push_back(field);
    return out;
}

double parse_number(const std::string& s, const std::string& where) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw std::runtime_error(where + ": not a number: '" + s + "'");
    return v;
}

// Reads (first column, named column) pairs from a CSV with a header row.
void read_points(const std::string& path, const std::string& column, std::vector<double>& xs,
                 std::vector<double>& ys) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
    const auto header = split_csv_line(line);
    std::size_t col = 1;
    if (!column.empty()) {
        col = header.size();
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == column) col = i;
        if (col == header.size()) throw std::runtime_error(path + ": no column named '" + column + "'");
    }
    if (col >= header.size()) throw std::runtime_error(path + ": needs at least two columns");
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        const auto fields = split_csv_line(line);
        if (fields.size() <= col) throw std::runtime_error(path + ":" + std::to_string(lineno) + ": short row");
        const std::string where = path + ":" + std::to_string(lineno);
        xs.push_back(parse_number(fields[0], where));
        ys.push_back(parse_number(fields[col], where));
    }
}

std::vector<double> read_coefficients(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<double> out;
    std::string token;
    std::stringstream all;
    all << in.rdbuf();
    std::string text = all.str();
    for (char& c : text)
        if (c == ',' || c == ';') c = ' ';
    std::istringstream tokens(text);
    while (tokens >> token) out.push_back(parse_number(token, path));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laguerre multiplier workbench"};
    app.set_version_flag("--version", lgm_version());
    app.set_config("--config", "", "key=value file supplying defaults; flags override it");
    app.require_subcommand(1, 1);

    lgm_params params;
    lgm_params_default(&params);
    std::string out_path = "-";
    std::string format = "csv";
    std::string family;
    std::string variant = "a";
    std::string in_path;
    std::string column;
    std::vector<double> coeff_list;
    double rule_alpha = std::numeric_limits<double>::quiet_NaN();
    bool constant_sign = false;

    app.add_option("--alpha", params.alpha, "expansion index alpha > -1");
    app.add_option("--gamma", params.gamma, "weight exponent gamma > -1");
    app.add_option("--p", params.p, "Lebesgue exponent");
    app.add_option("--a", params.a, "difference order a");
    app.add_option("--delta", params.delta, "Cesaro order delta");
    app.add_option("--epsilon", params.epsilon, "decay exponent epsilon");
    app.add_option("--n-max", params.n_max, "largest degree / block index");
    app.add_option("--order", params.order, "quadrature order");
    app.add_option("--trials", params.trials, "random test functions per degree");
    app.add_option("--random-degree", params.random_degree, "place random test functions only at this degree");
    app.add_option("--seed", params.seed, "random seed");
    app.add_option("--tol", params.tol, "absolute integration tolerance");
    app.add_option("--threads", params.threads, "worker cap");
    app.add_option("--out", out_path, "output path, - for stdout");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--family", family, "multiplier family (cesaro, spike, ones) or thm31 sequence (e0, power)");
    app.add_option("--variant", variant, "corollary variant")->check(CLI::IsMember({"a", "b"}));
    app.add_option("--in", in_path, "input file (fit: CSV, coeffs: numbers)");
    app.add_option("--column", column, "fit: column to fit against the first");
    app.add_option("--coeffs", coeff_list, "coeffs: raw coefficients")->delimiter(',');
    app.add_option("--rule-alpha", rule_alpha, "coeffs: analysis index (default alpha)");
    app.add_flag("--constant-sign", constant_sign, "remark3: use (k+1)^-eps without alternation");

    const char* commands[][2] = {
        {"quadrule", "Gauss-Laguerre nodes and weights"},
        {"coeffs", "Fourier-Laguerre coefficients of an expansion"},
        {"thm11", "weighted l^q bound for the coefficient differences"},
        {"thm12", "block condition for a multiplier family"},
        {"cor13", "block condition at gamma = alpha (a) or alpha p/2 (b)"},
        {"cor14", "single-coefficient Cohen bound for a multiplier family"},
        {"remark3", "alternating counterexample block profiles"},
        {"thm31", "sufficient l^1 condition and Cesaro kernel norms"},
        {"thm32", "weighted l^1 necessary condition"},
        {"kernel-norms", "Cesaro kernel L^1 norms"},
        {"mult-lower", "empirical multiplier norm lower bounds"},
        {"fit", "least-squares exponent of a CSV column"},
    };
    for (const auto& c : commands) app.add_subcommand(c[0], c[1])->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    params.rule_alpha = rule_alpha;
    params.alternating = constant_sign ? 0 : 1;
    params.family = family.empty() ? nullptr : family.c_str();
    params.variant = variant.c_str();

    std::vector<double> xs, ys, coeffs;
    try {
        if (command == "fit") {
            if (in_path.empty()) {
                std::cerr << "fit: --in is required\n";
                return kExitUsage;
            }
            read_points(in_path, column, xs, ys);
            params.xs = xs.data();
            params.ys = ys.data();
            params.n_points = xs.size();
        } else if (command == "coeffs") {
            coeffs = in_path.empty() ? coeff_list : read_coefficients(in_path);
            if (coeffs.empty()) {
                std::cerr << "coeffs: give --coeffs or --in\n";
                return kExitUsage;
            }
            params.coeffs = coeffs.data();
            params.n_coeffs = coeffs.size();
        }
    } catch (const std::exception& e) {
        std::cerr << command << ": " << e.what() << "\n";
        return kExitUsage;
    }

    lgm_report* report = nullptr;
    const lgm_status st = lgm_run(command.c_str(), &params, &report);
    if (st == LGM_ECONVERGENCE) {
        std::cerr << command << ": no convergence: " << lgm_last_error() << "\n";
        return kExitInconclusive;
    }
    if (st != LGM_OK) {
        std::cerr << command << ": " << lgm_last_error() << "\n";
        return kExitUsage;
    }

    int code = kExitOk;
    if (lgm_report_write(report, format.c_str(), out_path.c_str()) != LGM_OK) {
        std::cerr << command << ": " << lgm_last_error() << "\n";
        code = kExitUsage;
    } else if (format == "csv" && out_path != "-" && lgm_report_fit_count(report) > 0) {
        const std::string sidecar = out_path + ".json";
        if (lgm_report_write(report, "json", sidecar.c_str()) != LGM_OK) {
            std::cerr << command << ": " << lgm_last_error() << "\n";
            code = kExitUsage;
        }
    }
    if (code == kExitOk) {
        const lgm_verdict v = lgm_report_verdict(report);
        std::cerr << command << ": "
                  << (v == LGM_CONSISTENT ? "consistent" : v == LGM_VIOLATED ? "violated" : "inconclusive");
        if (*lgm_report_message(report)) std::cerr << " (" << lgm_report_message(report) << ")";
        std::cerr << "\n";
        if (v == LGM_VIOLATED) code = kExitViolated;
        else if (v == LGM_INCONCLUSIVE) code = kExitInconclusive;
    }
    lgm_report_destroy(report);
    return code;
}
