#include "lagmult/lagmult.h"

#include "lagmult/cesaro.hpp"
#include "lagmult/harness.hpp"
#include "lagmult/quadrature.hpp"
#include "lagmult/report.hpp"
#include "lagmult/special.hpp"

#include <cmath>
#include <cstring>
#include <limits>
#include <string>

using namespace lagmult;

struct lgm_report {
    VerificationReport r;
};

struct lgm_quadrule {
    QuadRule rule;
};

namespace {

thread_local std::string g_last_error;

lgm_status fail(lgm_status s, const std::string& msg) {
    g_last_error = msg;
    return s;
}

template <class Fn>
lgm_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const ConvergenceError& e) {
        return fail(LGM_ECONVERGENCE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(LGM_EINVAL, e.what());
    } catch (const std::out_of_range& e) {
        return fail(LGM_EINVAL, e.what());
    } catch (const std::domain_error& e) {
        return fail(LGM_EDOMAIN, e.what());
    } catch (const std::exception& e) {
        return fail(LGM_EINTERNAL, e.what());
    } catch (...) {
        return fail(LGM_EINTERNAL, "unknown error");
    }
}

void require(bool ok, const std::string& predicate) {
    if (!ok) throw std::invalid_argument("parameter check failed: " + predicate);
}

std::string str(const char* s, const char* fallback) { return s && *s ? s : fallback; }

RunOptions run_options(const lgm_params& p) {
    require(p.threads >= 1, "threads >= 1");
    require(p.tol > 0.0, "tol > 0");
    RunOptions run;
    run.seed = p.seed;
    run.threads = p.threads;
    run.tol = p.tol;
    return run;
}

std::function<RealSequence(int)> multiplier_family(const std::string& family, const lgm_params& p) {
    if (family == "cesaro") {
        require(p.delta >= 0.0, "delta >= 0");
        const double delta = p.delta, alpha = p.alpha;
        return [delta, alpha](int n) {
            return RealSequence::finite(cesaro_multiplier(CesaroSpec{n, delta, alpha}));
        };
    }
    if (family == "spike") {
        return [](int n) {
            std::vector<double> v(static_cast<std::size_t>(n) + 1, 0.0);
            v[n] = 1.0;
            return RealSequence::finite(std::move(v));
        };
    }
    if (family == "ones") {
        return [](int n) { return RealSequence::finite(std::vector<double>(static_cast<std::size_t>(n) + 1, 1.0)); };
    }
    throw std::invalid_argument("unknown multiplier family '" + family + "' (cesaro, spike, ones)");
}

FamilySpec function_family(const lgm_params& p) {
    require(p.trials >= 0, "trials >= 0");
    require(p.random_degree >= 0, "random_degree >= 0");
    FamilySpec fam;
    fam.random_trials = p.trials;
    fam.random_degree = p.random_degree;
    return fam;
}

VerificationReport run_quadrule(const lgm_params& p) {
    const auto rule = gauss_laguerre(p.order, p.alpha);
    VerificationReport r;
    r.theorem = "quadrule";
    r.parameters = {{"order", static_cast<double>(p.order)}, {"alpha", p.alpha}};
    r.table.columns = {"i", "node", "weight", "log_weight"};
    for (int i = 0; i < rule.order; ++i)
        r.table.rows.push_back({static_cast<double>(i), rule.nodes[i], rule.weights[i], rule.log_weights[i]});
    r.verdict = Verdict::consistent;
    return r;
}

VerificationReport run_coeffs(const lgm_params& p) {
    require(p.coeffs != nullptr && p.n_coeffs > 0, "coefficient list is non-empty");
    require(p.n_max >= 0, "n_max >= 0");
    const double rule_alpha = std::isnan(p.rule_alpha) ? p.alpha : p.rule_alpha;
    LaguerreExpansion f{p.alpha, std::vector<double>(p.coeffs, p.coeffs + p.n_coeffs)};
    const auto fhat = analyze(f, rule_alpha, p.n_max);
    VerificationReport r;
    r.theorem = "coeffs";
    r.parameters = {{"alpha", p.alpha}, {"rule_alpha", rule_alpha}, {"n_max", static_cast<double>(p.n_max)}};
    r.table.columns = {"n", "fhat"};
    for (std::size_t k = 0; k < fhat.size(); ++k) r.table.rows.push_back({static_cast<double>(k), fhat[k]});
    r.verdict = Verdict::consistent;
    return r;
}

VerificationReport run_fit(const lgm_params& p) {
    require(p.xs != nullptr && p.ys != nullptr, "fit points are given");
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < p.n_points; ++i) pts.emplace_back(p.xs[i], p.ys[i]);
    const auto fit = fit_exponent(pts);
    VerificationReport r;
    r.theorem = "fit";
    r.table.columns = {"slope", "intercept", "max_residual", "n_lo", "n_hi", "points"};
    r.table.rows.push_back({fit.slope, fit.intercept, fit.max_residual, fit.n_lo, fit.n_hi,
                            static_cast<double>(fit.points)});
    r.fits.emplace_back("fit", fit);
    r.verdict = Verdict::consistent;
    return r;
}

VerificationReport dispatch(const std::string& cmd, const lgm_params& p) {
    if (cmd == "quadrule") return run_quadrule(p);
    if (cmd == "coeffs") return run_coeffs(p);
    if (cmd == "fit") return run_fit(p);

    const auto run = run_options(p);
    require(p.n_max >= 1, "n_max >= 1");
    const auto grid = dyadic_grid(p.n_max);
    const std::string variant = str(p.variant, "a");
    require(variant == "a" || variant == "b", "variant in {a, b}");

    if (cmd == "thm11")
        return verify_thm11(function_family(p), SpaceSpec(p.p, p.gamma, p.alpha), p.a, grid, run);
    if (cmd == "thm32") return verify_thm32(function_family(p), p.alpha, p.gamma, grid, run);
    if (cmd == "kernel-norms") {
        require(p.delta >= 0.0, "delta >= 0");
        return kernel_norms(p.delta, p.alpha, p.gamma, grid, run);
    }
    if (cmd == "remark3") {
        const auto res = counterexample_remark3(p.epsilon, p.alpha, p.p, p.n_max, p.alternating != 0, p.threads);
        return remark3_report(res, p.epsilon, p.alpha, p.p, p.n_max, p.alternating != 0);
    }
    if (cmd == "thm31") {
        const std::string family = str(p.family, "e0");
        RealSequence fseq = RealSequence::finite({1.0});
        if (family == "power") {
            require(p.epsilon > 0.0, "epsilon > 0 for the power family");
            const double s = p.epsilon;
            fseq = RealSequence::parametric([s](std::size_t k) { return std::pow(k + 1.0, -s); },
                                            TailDescriptor{1.0, s, false});
        } else {
            require(family == "e0", "thm31 family in {e0, power}");
        }
        return verify_thm31(fseq, p.delta, p.alpha, p.gamma, p.n_max, grid, run);
    }

    require(p.trials >= 1, "trials >= 1");
    const std::string family = str(p.family, "cesaro");
    const auto make_m = multiplier_family(family, p);
    if (cmd == "thm12") return verify_thm12(make_m, SpaceSpec(p.p, p.gamma, p.alpha), p.a, grid, p.trials, run);
    if (cmd == "cor13")
        return verify_cor13(make_m, p.p, p.alpha, variant == "a" ? Cor13Variant::a : Cor13Variant::b, grid,
                            p.trials, run);
    if (cmd == "cor14")
        return sweep_cor14(make_m, p.p, p.alpha, variant == "a" ? Cor14Variant::a : Cor14Variant::b, grid,
                           p.trials, run, family);
    if (cmd == "mult-lower") {
        const SpaceSpec space(p.p, p.gamma, p.alpha);
        const double ref = family == "cesaro"
                               ? (2.0 * p.alpha + 2.0) * (1.0 / p.p - 0.5) - 0.5 - p.delta
                               : 0.0;
        return multiplier_lower_sweep(make_m, space, grid, p.trials, ref, run, family);
    }
    throw std::invalid_argument("unknown command '" + cmd + "'");
}

}  // namespace

extern "C" {

const char* lgm_version(void) { return "0.1.0"; }

const char* lgm_last_error(void) { return g_last_error.c_str(); }

void lgm_params_default(lgm_params* p) {
    if (!p) return;
    std::memset(p, 0, sizeof *p);
    p->p = 1.0;
    p->tol = 1e-7;
    p->rule_alpha = std::numeric_limits<double>::quiet_NaN();
    p->n_max = 256;
    p->trials = 16;
    p->order = 16;
    p->threads = 1;
    p->alternating = 1;
    p->seed = 1;
}

lgm_status lgm_run(const char* command, const lgm_params* params, lgm_report** out) {
    if (!command || !params || !out) return fail(LGM_EINVAL, "null argument");
    *out = nullptr;
    return guarded([&] {
        auto* rep = new lgm_report{dispatch(command, *params)};
        *out = rep;
        return LGM_OK;
    });
}

void lgm_report_destroy(lgm_report* report) { delete report; }

lgm_verdict lgm_report_verdict(const lgm_report* report) {
    if (!report) return LGM_INCONCLUSIVE;
    switch (report->r.verdict) {
        case Verdict::consistent: return LGM_CONSISTENT;
        case Verdict::violated: return LGM_VIOLATED;
        default: return LGM_INCONCLUSIVE;
    }
}

const char* lgm_report_theorem(const lgm_report* report) { return report ? report->r.theorem.c_str() : ""; }
const char* lgm_report_message(const lgm_report* report) { return report ? report->r.message.c_str() : ""; }
int lgm_report_admissible(const lgm_report* report) { return report && report->r.admissible ? 1 : 0; }
double lgm_report_ratio_sup(const lgm_report* report) { return report ? report->r.ratio_sup : 0.0; }
size_t lgm_report_rows(const lgm_report* report) { return report ? report->r.table.rows.size() : 0; }
size_t lgm_report_columns(const lgm_report* report) { return report ? report->r.table.columns.size() : 0; }

const char* lgm_report_column_name(const lgm_report* report, size_t col) {
    if (!report || col >= report->r.table.columns.size()) return nullptr;
    return report->r.table.columns[col].c_str();
}

lgm_status lgm_report_value(const lgm_report* report, size_t row, size_t col, double* out) {
    if (!report || !out) return fail(LGM_EINVAL, "null argument");
    const auto& rows = report->r.table.rows;
    if (row >= rows.size() || col >= rows[row].size()) return fail(LGM_EINVAL, "cell index out of range");
    *out = rows[row][col];
    return LGM_OK;
}

size_t lgm_report_fit_count(const lgm_report* report) { return report ? report->r.fits.size() : 0; }

lgm_status lgm_report_fit(const lgm_report* report, size_t i, const char** name, double* slope,
                          double* intercept, double* max_residual) {
    if (!report) return fail(LGM_EINVAL, "null argument");
    if (i >= report->r.fits.size()) return fail(LGM_EINVAL, "fit index out of range");
    const auto& [n, f] = report->r.fits[i];
    if (name) *name = n.c_str();
    if (slope) *slope = f.slope;
    if (intercept) *intercept = f.intercept;
    if (max_residual) *max_residual = f.max_residual;
    return LGM_OK;
}

lgm_status lgm_report_note(const lgm_report* report, const char* name, double* out) {
    if (!report || !name || !out) return fail(LGM_EINVAL, "null argument");
    const auto v = report->r.note(name);
    if (!v) return fail(LGM_EINVAL, std::string("no note named ") + name);
    *out = *v;
    return LGM_OK;
}

lgm_status lgm_report_write(const lgm_report* report, const char* format, const char* path) {
    if (!report || !format || !path) return fail(LGM_EINVAL, "null argument");
    const std::string f = format;
    if (f != "csv" && f != "json") return fail(LGM_EINVAL, "format must be csv or json, got " + f);
    try {
        emit_report(report->r, f == "csv" ? ReportFormat::csv : ReportFormat::json, path);
        g_last_error.clear();
        return LGM_OK;
    } catch (const std::exception& e) {
        return fail(LGM_EIO, e.what());
    }
}

lgm_status lgm_quadrule_create(int order, double alpha, lgm_quadrule** out) {
    if (!out) return fail(LGM_EINVAL, "null argument");
    *out = nullptr;
    return guarded([&] {
        *out = new lgm_quadrule{gauss_laguerre(order, alpha)};
        return LGM_OK;
    });
}

void lgm_quadrule_destroy(lgm_quadrule* rule) { delete rule; }
size_t lgm_quadrule_size(const lgm_quadrule* rule) { return rule ? rule->rule.nodes.size() : 0; }
const double* lgm_quadrule_nodes(const lgm_quadrule* rule) { return rule ? rule->rule.nodes.data() : nullptr; }
const double* lgm_quadrule_weights(const lgm_quadrule* rule) { return rule ? rule->rule.weights.data() : nullptr; }
const double* lgm_quadrule_log_weights(const lgm_quadrule* rule) {
    return rule ? rule->rule.log_weights.data() : nullptr;
}

lgm_status lgm_log_gamma(double x, double* out) {
    if (!out) return fail(LGM_EINVAL, "null argument");
    return guarded([&] {
        *out = log_gamma(x);
        return LGM_OK;
    });
}

double lgm_binom_A(int n, double a) { return binom_A(n, a); }

lgm_status lgm_laguerre(double alpha, int n_max, double x, double* out) {
    if (!out) return fail(LGM_EINVAL, "null argument");
    return guarded([&] {
        const auto ev = laguerre_batch(alpha, n_max, x);
        std::copy(ev.values.begin(), ev.values.end(), out);
        return LGM_OK;
    });
}

lgm_status lgm_script_L(int k, double alpha, double t, double* out) {
    if (!out) return fail(LGM_EINVAL, "null argument");
    return guarded([&] {
        *out = script_L(k, alpha, t);
        return LGM_OK;
    });
}

}  // extern "C"
