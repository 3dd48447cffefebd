#include "lagmult/harness.hpp"

#include "lagmult/cesaro.hpp"
#include "lagmult/special.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace lagmult {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

double safe_ratio(double lhs, double rhs) {
    if (rhs == 0.0) return 0.0;
    return lhs / rhs;
}

std::vector<std::pair<double, double>> positive_points(std::span<const double> n,
                                                       std::span<const double> v) {
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < n.size() && i < v.size(); ++i)
        if (n[i] > 0.0 && v[i] > 0.0 && std::isfinite(v[i])) pts.emplace_back(n[i], v[i]);
    return pts;
}

void try_fit(VerificationReport& r, const std::string& name, std::span<const double> n,
             std::span<const double> v) {
    const auto pts = positive_points(n, v);
    try {
        r.fits.emplace_back(name, fit_exponent(pts));
    } catch (const std::invalid_argument&) {
        // too few usable points; the table still carries the data
    }
}

ExponentFit fit_profile(const BlockNormProfile& prof) {
    std::vector<double> n(prof.n_values.begin(), prof.n_values.end());
    const auto pts = positive_points(n, prof.block_norms);
    return fit_exponent(pts);
}

double max_finite(std::span<const double> v) {
    double best = 0.0;
    for (double x : v)
        if (std::isfinite(x)) best = std::max(best, x);
    return best;
}

}  // namespace

ExponentFit fit_exponent(std::span<const std::pair<double, double>> points) {
    double n_hi = 0.0;
    for (const auto& [n, v] : points) {
        if (!(n > 0.0)) throw std::invalid_argument("fit_exponent: n must be positive");
        if (!(v > 0.0)) throw std::invalid_argument("fit_exponent: values must be positive");
        n_hi = std::max(n_hi, n);
    }
    std::vector<std::pair<double, double>> used;
    for (const auto& p : points)
        if (p.first >= n_hi / 8.0) used.push_back(p);
    if (used.size() < 4)
        throw std::invalid_argument("fit_exponent needs at least 4 points with n >= n_hi/8, got " +
                                    std::to_string(used.size()));

    double sx = 0, sy = 0;
    for (const auto& [n, v] : used) {
        sx += std::log(n);
        sy += std::log(v);
    }
    const double m = static_cast<double>(used.size());
    const double mx = sx / m, my = sy / m;
    double sxx = 0, sxy = 0;
    for (const auto& [n, v] : used) {
        const double dx = std::log(n) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(v) - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_exponent: all n coincide");

    ExponentFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.points = static_cast<int>(used.size());
    fit.n_lo = n_hi;
    fit.n_hi = n_hi;
    for (const auto& [n, v] : used) {
        fit.n_lo = std::min(fit.n_lo, n);
        const double res = std::log(v) - (fit.intercept + fit.slope * std::log(n));
        fit.max_residual = std::max(fit.max_residual, std::abs(res));
    }
    return fit;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::consistent: return "consistent";
        case Verdict::violated: return "violated";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

const ExponentFit* VerificationReport::fit(const std::string& name) const {
    for (const auto& [k, f] : fits)
        if (k == name) return &f;
    return nullptr;
}

std::optional<double> VerificationReport::note(const std::string& name) const {
    for (const auto& [k, v] : notes)
        if (k == name) return v;
    return std::nullopt;
}

std::vector<double> VerificationReport::column(const std::string& name) const {
    const auto it = std::find(table.columns.begin(), table.columns.end(), name);
    if (it == table.columns.end()) throw std::out_of_range("no column named " + name);
    const auto idx = static_cast<std::size_t>(it - table.columns.begin());
    std::vector<double> out;
    out.reserve(table.rows.size());
    for (const auto& row : table.rows) out.push_back(row.at(idx));
    return out;
}

Verdict bounded_ratio_verdict(std::span<const double> n, std::span<const double> ratio) {
    if (n.empty() || n.size() != ratio.size()) return Verdict::consistent;
    const double n_hi = *std::max_element(n.begin(), n.end());
    auto at = [&](double target) -> std::optional<double> {
        for (std::size_t i = 0; i < n.size(); ++i)
            if (n[i] == target) return ratio[i];
        return std::nullopt;
    };
    const auto r0 = at(std::floor(n_hi / 4.0));
    const auto r1 = at(std::floor(n_hi / 2.0));
    const auto r2 = at(n_hi);
    if (!r0 || !r1 || !r2) return Verdict::consistent;
    if (!std::isfinite(*r2)) return Verdict::violated;
    if (*r0 > 0.0 && *r0 < *r1 && *r1 < *r2 && *r2 >= 2.0 * *r0) return Verdict::violated;
    return Verdict::consistent;
}

Admissibility thm11_admissible(double p, double gamma, double alpha, double a) {
    Admissibility out;
    if (!(p >= 1.0 && p < 2.0)) {
        out.reason = "p must lie in [1, 2)";
        return out;
    }
    if (!(alpha > -1.0 && a > -1.0 && alpha + a > -1.0)) {
        out.reason = "needs alpha > -1, a > -1, alpha + a > -1";
        return out;
    }
    const double lhs = (gamma + 1.0) / p;
    if (alpha + a <= 0.5) {
        out.branch = "alpha+a<=1/2";
        const double bound = (alpha + a) / p + 1.0;
        out.admissible = lhs <= bound;
        if (!out.admissible) out.reason = "(gamma+1)/p = " + fmt(lhs) + " exceeds " + fmt(bound);
    } else {
        out.branch = "alpha+a>1/2";
        const double bound = (alpha + a) / 2.0 + 1.0 + 0.5 * (1.0 / p - 0.5);
        out.admissible = lhs <= bound;
        if (!out.admissible) out.reason = "(gamma+1)/p = " + fmt(lhs) + " exceeds " + fmt(bound);
    }
    return out;
}

Admissibility thm12_admissible(double p, double gamma, double alpha, double a) {
    Admissibility out = thm11_admissible(p, gamma, alpha, a);
    if (!out.admissible) return out;
    const double lhs = (gamma + 1.0) / p;
    double lower;
    if (p < 4.0 / 3.0) {
        lower = (alpha + 1.0) / 2.0 + 1.0 / (3.0 * p);
        out.branch += ",p<4/3";
    } else {
        lower = (alpha + 1.0) / 2.0 + 0.25;
        out.branch += ",p>=4/3";
    }
    if (!(lhs > lower)) {
        out.admissible = false;
        out.reason = "(gamma+1)/p = " + fmt(lhs) + " must exceed " + fmt(lower);
    }
    return out;
}

std::vector<FamilyMember> family_members(const FamilySpec& spec, double alpha, int degree,
                                         std::uint64_t seed) {
    if (degree < 0) throw std::invalid_argument("family degree must be non-negative");
    const auto len = static_cast<std::size_t>(degree) + 1;
    std::vector<FamilyMember> out;
    if (spec.single_modes) {
        LaguerreExpansion f{alpha, std::vector<double>(len, 0.0)};
        f.coeffs[degree] = 1.0;
        out.push_back({"single", std::move(f)});
    }
    if (spec.random_degree <= 0 || spec.random_degree == degree) {
        for (int i = 0; i < spec.random_trials; ++i) {
            std::mt19937_64 eng(seed ^ (kGolden * static_cast<std::uint64_t>(i + 1)) ^
                                (static_cast<std::uint64_t>(degree) << 40));
            LaguerreExpansion f{alpha, std::vector<double>(len)};
            for (double& c : f.coeffs) c = (eng() >> 63) ? 1.0 : -1.0;
            out.push_back({"random" + std::to_string(i), std::move(f)});
        }
    }
    for (double s : spec.power_exponents) {
        LaguerreExpansion f{alpha, std::vector<double>(len)};
        for (std::size_t k = 0; k < len; ++k) f.coeffs[k] = std::pow(k + 1.0, -s);
        out.push_back({"power" + fmt(s), std::move(f)});
    }
    if (spec.dirichlet) out.push_back({"dirichlet", LaguerreExpansion{alpha, std::vector<double>(len, 1.0)}});
    for (double kappa : spec.kernel_orders) {
        BinomCoeffStream a(kappa);
        const auto& v = a.prefix(len - 1);
        LaguerreExpansion f{alpha, std::vector<double>(len)};
        for (std::size_t k = 0; k < len; ++k) f.coeffs[k] = v[len - 1 - k] / v[len - 1];
        out.push_back({"kernel" + fmt(kappa), std::move(f)});
    }
    return out;
}

std::vector<int> dyadic_grid(int n_max, int n_min) {
    if (n_max < 1) throw std::invalid_argument("grid needs n_max >= 1");
    std::vector<int> out;
    for (int n = 1; n <= n_max; n *= 2)
        if (n >= n_min) out.push_back(n);
    if (out.empty() || out.back() != n_max) out.push_back(n_max);
    return out;
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
    const auto workers = static_cast<std::size_t>(std::max(1, threads));
    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::mutex error_mutex;
    auto work = [&] {
        while (!failed.load()) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                failed = true;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < std::min(workers, count); ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

namespace {

struct MemberResult {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};

// Evaluate every (degree, member) pair in parallel, keep the per-degree maximum
// in member order.
template <class Eval>
std::vector<std::vector<double>> per_degree_max(const FamilySpec& family, double alpha,
                                                std::span<const int> n_grid, const RunOptions& run,
                                                Eval eval) {
    std::vector<std::vector<FamilyMember>> members;
    std::vector<std::pair<std::size_t, std::size_t>> jobs;
    for (std::size_t g = 0; g < n_grid.size(); ++g) {
        members.push_back(family_members(family, alpha, n_grid[g], run.seed));
        for (std::size_t i = 0; i < members.back().size(); ++i) jobs.emplace_back(g, i);
    }
    std::vector<MemberResult> results(jobs.size());
    parallel_for(jobs.size(), run.threads, [&](std::size_t j) {
        results[j] = eval(members[jobs[j].first][jobs[j].second].f);
    });
    std::vector<std::vector<double>> rows;
    std::size_t j = 0;
    for (std::size_t g = 0; g < n_grid.size(); ++g) {
        MemberResult best;
        bool any = false;
        for (std::size_t i = 0; i < members[g].size(); ++i, ++j) {
            const auto& r = results[j];
            if (r.rhs == 0.0 && r.lhs == 0.0) continue;
            if (!any || r.ratio > best.ratio) best = r;
            any = true;
        }
        rows.push_back({static_cast<double>(n_grid[g]), best.lhs, best.rhs, best.ratio});
    }
    return rows;
}

void finish_ratio_report(VerificationReport& r) {
    const auto n = r.column("n");
    const auto ratio = r.column("ratio");
    r.ratio_sup = max_finite(ratio);
    try_fit(r, "ratio", n, ratio);
    r.verdict = r.admissible ? bounded_ratio_verdict(n, ratio) : Verdict::inconclusive;
}

void add_space_parameters(VerificationReport& r, const SpaceSpec& space) {
    r.parameters.emplace_back("p", space.p());
    r.parameters.emplace_back("q", space.q());
    r.parameters.emplace_back("gamma", space.gamma());
    r.parameters.emplace_back("alpha", space.alpha());
}

}  // namespace

VerificationReport verify_thm11(const FamilySpec& family, const SpaceSpec& space, double a,
                                std::span<const int> n_grid, const RunOptions& run) {
    VerificationReport r;
    r.theorem = "thm11";
    add_space_parameters(r, space);
    r.parameters.emplace_back("a", a);
    r.parameters.emplace_back("seed", static_cast<double>(run.seed));
    r.table.columns = {"n", "lhs", "rhs", "ratio"};
    const auto adm = thm11_admissible(space.p(), space.gamma(), space.alpha(), a);
    r.admissible = adm.admissible;
    r.branch = adm.branch;
    if (!adm.admissible) {
        r.verdict = Verdict::inconclusive;
        r.message = "inadmissible: " + adm.reason;
        return r;
    }
    r.table.rows = per_degree_max(family, space.alpha(), n_grid, run, [&](const LaguerreExpansion& f) {
        MemberResult m;
        m.lhs = thm11_lhs(coefficients_of(f), space, a);
        m.rhs = lp_norm(f, space, run.tol);
        m.ratio = safe_ratio(m.lhs, m.rhs);
        return m;
    });
    finish_ratio_report(r);
    return r;
}

MultiplierBound multiplier_lower_bound(const RealSequence& m, const SpaceSpec& space, int trials,
                                       int degree, const RunOptions& run) {
    if (trials < 1) throw std::invalid_argument("multiplier_lower_bound needs trials >= 1");
    if (degree < 0) throw std::invalid_argument("multiplier_lower_bound needs degree >= 0");
    FamilySpec fam;
    fam.random_trials = trials;
    auto members = family_members(fam, space.alpha(), degree, run.seed);
    // order-2 Cesaro kernels of degree n, 2n, 4n: near-identity on [0, n]
    FamilySpec kernels;
    kernels.single_modes = false;
    kernels.random_trials = 0;
    kernels.power_exponents.clear();
    kernels.dirichlet = false;
    kernels.kernel_orders = {2.0};
    int previous = -1;
    for (int mult : {1, 2, 4}) {
        const int d = std::min(kMaxLaguerreDegree, mult * degree);
        if (d == previous) continue;
        previous = d;
        for (auto& k : family_members(kernels, space.alpha(), d, run.seed)) {
            k.label += "@" + std::to_string(d);
            members.push_back(std::move(k));
        }
    }
    for (int k = 1; k < degree; k *= 2) {
        LaguerreExpansion f{space.alpha(), std::vector<double>(static_cast<std::size_t>(k) + 1, 0.0)};
        f.coeffs[k] = 1.0;
        members.push_back({"single" + std::to_string(k), std::move(f)});
    }
    if (degree > 0) {
        members.push_back({"single0", LaguerreExpansion{space.alpha(), {1.0}}});
    }
    std::vector<double> ratios(members.size(), 0.0);
    parallel_for(members.size(), run.threads, [&](std::size_t i) {
        const auto& f = members[i].f;
        const double den = lp_norm(f, space, run.tol);
        if (den == 0.0) return;
        ratios[i] = lp_norm(apply_multiplier(m, f), space, run.tol) / den;
    });
    MultiplierBound out;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (ratios[i] > out.value) {
            out.value = ratios[i];
            out.argmax = members[i].label;
        }
    }
    return out;
}

namespace {

struct Cor14Setup {
    double gamma;
    double exponent;
    Admissibility adm;
};

Cor14Setup cor14_setup(double p, double alpha, Cor14Variant variant) {
    Cor14Setup s{};
    const double h = 1.0 / p - 0.5;
    if (variant == Cor14Variant::a) {
        s.gamma = alpha;
        s.exponent = (2.0 * alpha + 2.0) * h - 0.5;
        s.adm.branch = "a";
        const double p_max = (4.0 * alpha + 4.0) / (2.0 * alpha + 3.0);
        if (!(p >= 1.0 && p < p_max)) {
            s.adm.reason = "variant a needs 1 <= p < (4 alpha + 4)/(2 alpha + 3) = " + fmt(p_max);
        } else if (!(std::max(1.0 / (3.0 * p), 0.25) < (alpha + 1.0) * h)) {
            s.adm.reason = "variant a needs max{1/3p, 1/4} < (alpha+1)(1/p-1/2)";
        } else {
            s.adm.admissible = true;
        }
    } else {
        s.gamma = alpha * p / 2.0;
        s.exponent = 2.0 / p - 1.5;
        s.adm.branch = "b";
        if (!(p >= 1.0 && p < 4.0 / 3.0)) {
            s.adm.reason = "variant b needs 1 <= p < 4/3";
        } else if (!((alpha - 1.0) * h >= -0.5)) {
            s.adm.reason = "variant b needs (alpha-1)(1/p-1/2) >= -1/2";
        } else {
            s.adm.admissible = true;
        }
    }
    return s;
}

std::vector<double> cor14_row(const RealSequence& m, double p, double alpha, const Cor14Setup& s,
                              int trials, const RunOptions& run) {
    if (!m.is_finite()) throw std::invalid_argument("cor14 needs a finite multiplier sequence");
    const int n = std::max(static_cast<int>(m.support()) - 1, 0);
    const double lhs = std::pow(n + 1.0, s.exponent) * std::abs(m(n));
    const SpaceSpec space(p, s.gamma, alpha);
    const double rhs = lhs == 0.0 ? 0.0 : multiplier_lower_bound(m, space, trials, n, run).value;
    return {static_cast<double>(n), lhs, rhs, safe_ratio(lhs, rhs)};
}

}  // namespace

VerificationReport verify_cor14(const RealSequence& m, double p, double alpha, Cor14Variant variant,
                                int trials, const RunOptions& run) {
    const auto s = cor14_setup(p, alpha, variant);
    VerificationReport r;
    r.theorem = "cor14";
    r.parameters = {{"p", p}, {"gamma", s.gamma}, {"alpha", alpha}, {"exponent", s.exponent}};
    r.table.columns = {"n", "lhs", "rhs", "ratio"};
    r.admissible = s.adm.admissible;
    r.branch = s.adm.branch;
    if (!s.adm.admissible) {
        r.message = "inadmissible: " + s.adm.reason;
        r.verdict = Verdict::inconclusive;
        return r;
    }
    r.table.rows.push_back(cor14_row(m, p, alpha, s, trials, run));
    r.ratio_sup = r.table.rows.back()[3];
    r.verdict = Verdict::consistent;
    return r;
}

VerificationReport sweep_cor14(const std::function<RealSequence(int)>& make_m, double p, double alpha,
                               Cor14Variant variant, std::span<const int> n_grid, int trials,
                               const RunOptions& run, const std::string& family_label) {
    const auto s = cor14_setup(p, alpha, variant);
    VerificationReport r;
    r.theorem = "cor14";
    r.parameters = {{"p", p}, {"gamma", s.gamma}, {"alpha", alpha}, {"exponent", s.exponent},
                    {"trials", static_cast<double>(trials)}};
    r.table.columns = {"n", "lhs", "rhs", "ratio"};
    r.admissible = s.adm.admissible;
    r.branch = s.adm.branch;
    r.message = "family " + family_label;
    if (!s.adm.admissible) {
        r.message = "inadmissible: " + s.adm.reason;
        r.verdict = Verdict::inconclusive;
        return r;
    }
    for (int n : n_grid) r.table.rows.push_back(cor14_row(make_m(n), p, alpha, s, trials, run));
    finish_ratio_report(r);
    try_fit(r, "rhs", r.column("n"), r.column("rhs"));
    return r;
}

double block_weight_exponent(double p, double gamma, double alpha) {
    return (2.0 * gamma + 1.0) / p - (2.0 * alpha + 1.0) / 2.0;
}

double cor13_lambda(double p, double alpha) { return (2.0 * alpha + 1.0) * (1.0 / p - 0.5); }

VerificationReport verify_block_condition(const std::string& theorem,
                                          const std::function<RealSequence(int)>& make_m,
                                          const SpaceSpec& space, double a, double weight_exponent,
                                          bool admissible, const std::string& branch,
                                          std::span<const int> n_grid, int trials,
                                          const RunOptions& run) {
    VerificationReport r;
    r.theorem = theorem;
    add_space_parameters(r, space);
    r.parameters.emplace_back("a", a);
    r.parameters.emplace_back("weight", weight_exponent);
    r.parameters.emplace_back("trials", static_cast<double>(trials));
    r.table.columns = {"n", "lhs", "rhs", "ratio"};
    r.admissible = admissible;
    r.branch = branch;
    for (int n : n_grid) {
        const auto m = make_m(n);
        if (!m.is_finite()) throw std::invalid_argument("block condition needs finite multipliers");
        auto s = delta2_frac_values(m.values(), a);
        const int blocks = std::max(static_cast<int>(s.size()), 1);
        s.resize(2 * static_cast<std::size_t>(blocks) + 1, 0.0);
        for (double& v : s) v = std::abs(v);
        const double lhs =
            block_sup_norm(s, weight_exponent, space.q(), blocks, BlockGrid::every_n).sup;
        const int degree = std::max(static_cast<int>(m.support()) - 1, 0);
        const double rhs = multiplier_lower_bound(m, space, trials, degree, run).value;
        r.table.rows.push_back({static_cast<double>(n), lhs, rhs, safe_ratio(lhs, rhs)});
    }
    finish_ratio_report(r);
    if (!admissible) r.message = "parameters outside the theorem's range";
    return r;
}

VerificationReport verify_thm12(const std::function<RealSequence(int)>& make_m, const SpaceSpec& space,
                                double a, std::span<const int> n_grid, int trials, const RunOptions& run) {
    const auto adm = thm12_admissible(space.p(), space.gamma(), space.alpha(), a);
    if (!adm.admissible) {
        VerificationReport r;
        r.theorem = "thm12";
        add_space_parameters(r, space);
        r.parameters.emplace_back("a", a);
        r.table.columns = {"n", "lhs", "rhs", "ratio"};
        r.admissible = false;
        r.branch = adm.branch;
        r.verdict = Verdict::inconclusive;
        r.message = "inadmissible: " + adm.reason;
        return r;
    }
    return verify_block_condition("thm12", make_m, space, a,
                                  block_weight_exponent(space.p(), space.gamma(), space.alpha()), true,
                                  adm.branch, n_grid, trials, run);
}

VerificationReport verify_cor13(const std::function<RealSequence(int)>& make_m, double p, double alpha,
                                Cor13Variant variant, std::span<const int> n_grid, int trials,
                                const RunOptions& run) {
    const double h = 1.0 / p - 0.5;
    std::string reason;
    double gamma, a, weight;
    if (variant == Cor13Variant::a) {
        gamma = alpha;
        const double lambda = cor13_lambda(p, alpha);
        a = lambda - 1.0;
        weight = lambda;
        if (!(p >= 1.0 && p < 2.0)) reason = "variant a needs 1 <= p < 2";
        else if (!(std::max(1.0 / (3.0 * p), 0.25) < (alpha + 1.0) * h))
            reason = "variant a needs max{1/(3p), 1/4} < (alpha+1)(1/p-1/2)";
        else if (!(a > -1.0 && alpha + a > -1.0))
            reason = "lambda - 1 must exceed -1 and -1 - alpha";
    } else {
        gamma = alpha * p / 2.0;
        a = 0.0;
        weight = h;
        if (!(p >= 1.0 && p < 4.0 / 3.0)) reason = "variant b needs 1 <= p < 4/3";
        else if (!((alpha - 1.0) * h >= -0.5)) reason = "variant b needs (alpha-1)(1/p-1/2) >= -1/2";
    }
    const SpaceSpec space(p, gamma, alpha);
    const std::string branch = variant == Cor13Variant::a ? "a" : "b";
    if (!reason.empty()) {
        VerificationReport r;
        r.theorem = "cor13";
        add_space_parameters(r, space);
        r.parameters.emplace_back("a", a);
        r.table.columns = {"n", "lhs", "rhs", "ratio"};
        r.admissible = false;
        r.branch = branch;
        r.verdict = Verdict::inconclusive;
        r.message = "inadmissible: " + reason;
        return r;
    }
    auto r = verify_block_condition("cor13", make_m, space, a, weight, true, branch, n_grid, trials, run);
    return r;
}

Remark3Result counterexample_remark3(double epsilon, double alpha, double p, int n_max,
                                     bool alternating, int threads) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("remark3 needs 0 < epsilon < 1");
    if (!(alpha > -1.0)) throw std::invalid_argument("remark3 needs alpha > -1");
    if (!(p >= 1.0 && p < 2.0)) throw std::invalid_argument("remark3 needs 1 <= p < 2");
    if (n_max < 1) throw std::invalid_argument("remark3 needs n_max >= 1");

    Remark3Result r;
    r.lambda = cor13_lambda(p, alpha);
    r.q = p == 1.0 ? std::numeric_limits<double>::infinity() : p / (p - 1.0);
    r.illustrative = !(r.lambda > 1.0);

    const double sign = alternating ? -1.0 : 1.0;
    const auto seq = RealSequence::parametric(
        [epsilon, sign](std::size_t k) {
            const double mag = std::pow(k + 1.0, -epsilon);
            return (k % 2 == 1) ? sign * mag : mag;
        },
        TailDescriptor{1.0, epsilon, alternating});

    const std::size_t len = 2 * static_cast<std::size_t>(n_max) + 1;
    const auto m = seq.materialize(len + 1);
    std::vector<double> plain(len);
    for (std::size_t k = 0; k < len; ++k) plain[k] = std::abs(m[k] - m[k + 1]);

    // Delta_2 Delta^{lambda-1} m_k = Delta^lambda m_k + Delta^lambda m_{k+1}
    std::vector<double> dl(len + 1);
    parallel_for(dl.size(), threads, [&](std::size_t k) { dl[k] = frac_diff(seq, r.lambda, k, 1e-13); });
    std::vector<double> d2(len);
    for (std::size_t k = 0; k < len; ++k) d2[k] = std::abs(dl[k] + dl[k + 1]);

    const double inf = std::numeric_limits<double>::infinity();
    r.plain = block_sup_norm(plain, 1.0, r.q, n_max);
    r.delta2 = block_sup_norm(d2, r.lambda, r.q, n_max);
    r.plain_qinf = block_sup_norm(plain, 1.0, inf, n_max);
    r.delta2_qinf = block_sup_norm(d2, r.lambda, inf, n_max);
    auto fit_or_empty = [](const BlockNormProfile& prof) {
        try {
            return fit_profile(prof);
        } catch (const std::invalid_argument&) {
            return ExponentFit{};
        }
    };
    r.plain_fit = fit_or_empty(r.plain);
    r.delta2_fit = fit_or_empty(r.delta2);
    r.plain_qinf_fit = fit_or_empty(r.plain_qinf);
    r.delta2_qinf_fit = fit_or_empty(r.delta2_qinf);
    return r;
}

VerificationReport remark3_report(const Remark3Result& res, double epsilon, double alpha, double p,
                                  int n_max, bool alternating) {
    VerificationReport r;
    r.theorem = "remark3";
    r.parameters = {{"epsilon", epsilon}, {"alpha", alpha}, {"gamma", alpha}, {"p", p}, {"q", res.q},
                    {"lambda", res.lambda}, {"n_max", static_cast<double>(n_max)},
                    {"alternating", alternating ? 1.0 : 0.0}};
    r.admissible = !res.illustrative;
    r.branch = res.illustrative ? "illustrative (lambda <= 1)" : "lambda>1";
    r.table.columns = {"n", "block_norm_plain", "block_norm_delta2", "block_norm_plain_qinf",
                       "block_norm_delta2_qinf"};
    for (std::size_t i = 0; i < res.plain.n_values.size(); ++i)
        r.table.rows.push_back({static_cast<double>(res.plain.n_values[i]), res.plain.block_norms[i],
                                res.delta2.block_norms[i], res.plain_qinf.block_norms[i],
                                res.delta2_qinf.block_norms[i]});
    r.fits = {{"plain", res.plain_fit}, {"delta2", res.delta2_fit},
              {"plain_qinf", res.plain_qinf_fit}, {"delta2_qinf", res.delta2_qinf_fit}};
    r.notes = {{"plain_sup", res.plain.sup}, {"delta2_sup", res.delta2.sup}};
    // The counterexample holds when the plain profile diverges while the
    // Delta_2 Delta^{lambda-1} profile stays bounded.
    const bool plain_diverges = res.plain_fit.points >= 4 && res.plain_fit.slope > 0.0;
    const bool delta2_bounded = res.delta2_fit.points >= 4 && res.delta2_fit.slope <= 0.0;
    if (res.illustrative) {
        r.verdict = Verdict::inconclusive;
        r.message = "lambda <= 1: illustrative run only";
    } else if (plain_diverges && delta2_bounded) {
        r.verdict = Verdict::consistent;
    } else {
        r.verdict = Verdict::violated;
        r.message = delta2_bounded ? "plain-difference profile does not diverge"
                                   : "Delta_2 Delta^{lambda-1} profile grows: slope " +
                                         fmt(res.delta2_fit.slope);
    }
    return r;
}

VerificationReport kernel_norms(double delta, double alpha, double gamma, std::span<const int> n_grid,
                                const RunOptions& run) {
    VerificationReport r;
    r.theorem = "kernel-norms";
    r.parameters = {{"delta", delta}, {"alpha", alpha}, {"gamma", gamma}};
    r.table.columns = {"n", "lhs", "rhs", "ratio"};
    const double threshold = 2.0 * gamma - alpha + 0.5;
    r.admissible = delta > threshold && threshold >= 0.0;
    r.branch = r.admissible ? "delta>2gamma-alpha+1/2>=0" : "outside delta>2gamma-alpha+1/2>=0";
    std::vector<double> norms(n_grid.size());
    parallel_for(n_grid.size(), run.threads, [&](std::size_t i) {
        norms[i] = kernel_l1_norm(CesaroSpec{n_grid[i], delta, alpha}, gamma, 1e-9);
    });
    for (std::size_t i = 0; i < n_grid.size(); ++i) {
        const double ref = std::pow(n_grid[i] + 1.0, alpha - gamma);
        r.table.rows.push_back({static_cast<double>(n_grid[i]), norms[i], ref, norms[i] / ref});
    }
    const auto n = r.column("n");
    r.ratio_sup = max_finite(r.column("ratio"));
    try_fit(r, "kernel_norm", n, norms);
    try_fit(r, "ratio", n, r.column("ratio"));
    r.notes.emplace_back("expected_slope", alpha - gamma);
    r.verdict = r.admissible ? bounded_ratio_verdict(n, r.column("ratio")) : Verdict::inconclusive;
    if (!r.admissible) r.message = "outside the sufficient condition; rates reported only";
    return r;
}

VerificationReport verify_thm31(const RealSequence& fseq, double delta, double alpha, double gamma,
                                int n_synth, std::span<const int> kernel_grid, const RunOptions& run) {
    if (n_synth < 0) throw std::invalid_argument("thm31 needs n_synth >= 0");
    auto r = kernel_norms(delta, alpha, gamma, kernel_grid, run);
    r.theorem = "thm31";
    const auto K = thm31_K(fseq, delta, alpha, gamma, 1e-8);
    const auto f = synthesize(fseq.materialize(static_cast<std::size_t>(n_synth) + 1), alpha);
    LpNormOptions opt;
    opt.tol = run.tol;
    const double fnorm = lp_norm(f, 1.0, gamma, opt);
    r.notes.emplace_back("f_norm", fnorm);
    r.notes.emplace_back("K", K.value);
    r.notes.emplace_back("K_certified", K.certified ? 1.0 : 0.0);
    r.notes.emplace_back("K_tail_estimate", K.tail_estimate);
    r.notes.emplace_back("norm_over_K", safe_ratio(fnorm, K.value));
    r.parameters.emplace_back("n_synth", n_synth);
    if (!K.certified) r.message += (r.message.empty() ? "" : "; ") + std::string("K is a partial sum");
    return r;
}

VerificationReport verify_thm32(const FamilySpec& family, double alpha, double gamma,
                                std::span<const int> n_grid, const RunOptions& run,
                                std::optional<double> paired_delta) {
    VerificationReport r;
    r.theorem = "thm32";
    r.parameters = {{"p", 1.0}, {"alpha", alpha}, {"gamma", gamma},
                    {"seed", static_cast<double>(run.seed)}};
    r.table.columns = {"n", "lhs", "rhs", "ratio"};
    const double lower = std::max(-1.0 / 3.0, alpha / 2.0 - 1.0 / 6.0);
    r.admissible = gamma > lower;
    r.branch = "gamma>max{-1/3,alpha/2-1/6}";
    const double delta = paired_delta.value_or(2.0 * gamma - alpha + 0.5);
    r.notes.emplace_back("paired_delta", delta);
    r.notes.emplace_back("smoothness_gap", (delta + 1.0) - (2.0 * gamma - alpha + 1.0 / 3.0));
    if (!r.admissible) {
        r.verdict = Verdict::inconclusive;
        r.message = "inadmissible: gamma = " + fmt(gamma) + " must exceed " + fmt(lower);
        return r;
    }
    r.table.rows = per_degree_max(family, alpha, n_grid, run, [&](const LaguerreExpansion& f) {
        MemberResult m;
        m.lhs = thm32_lhs(RealSequence::finite(coefficients_of(f)), alpha, gamma).value;
        LpNormOptions opt;
        opt.tol = run.tol;
        m.rhs = lp_norm(f, 1.0, gamma, opt);
        m.ratio = safe_ratio(m.lhs, m.rhs);
        return m;
    });
    finish_ratio_report(r);
    return r;
}

VerificationReport multiplier_lower_sweep(const std::function<RealSequence(int)>& make_m,
                                          const SpaceSpec& space, std::span<const int> n_grid,
                                          int trials, double reference_exponent,
                                          const RunOptions& run, const std::string& family_label) {
    VerificationReport r;
    r.theorem = "mult-lower";
    add_space_parameters(r, space);
    r.parameters.emplace_back("trials", static_cast<double>(trials));
    r.parameters.emplace_back("reference_exponent", reference_exponent);
    r.table.columns = {"n", "lhs", "rhs", "ratio"};
    r.message = "family " + family_label + "; lhs = empirical lower bound, rhs = (n+1)^e";
    for (int n : n_grid) {
        const auto m = make_m(n);
        const int degree = m.is_finite() ? std::max(static_cast<int>(m.support()) - 1, 0) : n;
        const double bound = multiplier_lower_bound(m, space, trials, degree, run).value;
        const double ref = std::pow(n + 1.0, reference_exponent);
        r.table.rows.push_back({static_cast<double>(n), bound, ref, bound / ref});
    }
    const auto n = r.column("n");
    r.ratio_sup = max_finite(r.column("ratio"));
    try_fit(r, "bound", n, r.column("lhs"));
    r.verdict = Verdict::consistent;
    return r;
}

}  // namespace lagmult
