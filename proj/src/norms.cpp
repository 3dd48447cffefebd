#include "lagmult/norms.hpp"

#include "lagmult/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lagmult {

SpaceSpec::SpaceSpec(double p, double gamma, double alpha) : p_(p), gamma_(gamma), alpha_(alpha) {
    if (!(p >= 1.0 && p <= 2.0))
        throw std::invalid_argument("space exponent p must lie in [1, 2], got " + std::to_string(p));
    if (!(gamma > -1.0))
        throw std::invalid_argument("space weight gamma must exceed -1, got " + std::to_string(gamma));
    if (!(alpha > -1.0))
        throw std::invalid_argument("expansion index alpha must exceed -1, got " + std::to_string(alpha));
    q_ = p == 1.0 ? std::numeric_limits<double>::infinity() : p / (p - 1.0);
}

std::vector<double> sign_changes(const LaguerreExpansion& f, double x_hi, int samples) {
    std::vector<double> roots;
    if (f.degree() < 1 || !(x_hi > 0.0) || samples < 2) return roots;
    auto value = [&](double x) { return evaluate_damped(f, x, 0.5); };
    auto bisect = [&](double lo, double hi, double f_lo) {
        for (int it = 0; it < 60 && hi - lo > 1e-14 * hi; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double f_mid = value(mid);
            if (f_mid == 0.0) return mid;
            if ((f_mid < 0.0) == (f_lo < 0.0)) {
                lo = mid;
                f_lo = f_mid;
            } else {
                hi = mid;
            }
        }
        return 0.5 * (lo + hi);
    };

    // exact zeros (mostly underflow in the far tail) are dropped; a genuine
    // root on the grid is still bracketed by its nonzero neighbours
    std::vector<double> xs, vs;
    xs.reserve(static_cast<std::size_t>(samples) + 1);
    vs.reserve(static_cast<std::size_t>(samples) + 1);
    for (int i = 0; i <= samples; ++i) {
        const double t = static_cast<double>(i) / samples;
        const double x = x_hi * t * t;
        const double v = value(x);
        if (v == 0.0) continue;
        xs.push_back(x);
        vs.push_back(v);
    }

    for (std::size_t i = 1; i < xs.size(); ++i) {
        if ((vs[i] < 0.0) != (vs[i - 1] < 0.0)) {
            roots.push_back(bisect(xs[i - 1], xs[i], vs[i - 1]));
            continue;
        }
        // A dip of |f| between same-signed samples may hide two close roots:
        // minimize sign * f over the neighbouring interval and split if it crosses.
        if (i + 1 >= xs.size() || (vs[i + 1] < 0.0) != (vs[i] < 0.0)) continue;
        if (!(std::abs(vs[i]) < std::abs(vs[i - 1]) && std::abs(vs[i]) < std::abs(vs[i + 1]))) continue;
        const double sgn = vs[i] < 0.0 ? -1.0 : 1.0;
        constexpr double g = 0.6180339887498949;
        double a = xs[i - 1], b = xs[i + 1];
        double c = b - g * (b - a), d = a + g * (b - a);
        double fc = sgn * value(c), fd = sgn * value(d);
        for (int it = 0; it < 80 && b - a > 1e-13 * b; ++it) {
            if (fc < 0.0 || fd < 0.0) break;
            if (fc < fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - g * (b - a);
                fc = sgn * value(c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + g * (b - a);
                fd = sgn * value(d);
            }
        }
        const double xm = fc < fd ? c : d;
        const double fm = std::min(fc, fd);
        if (fm < 0.0) {
            roots.push_back(bisect(xs[i - 1], xm, vs[i - 1]));
            roots.push_back(bisect(xm, xs[i + 1], sgn * fm));
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

double lp_norm(const LaguerreExpansion& f, double p, double gamma, const LpNormOptions& options) {
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm needs p >= 1");
    if (!(gamma > -1.0)) throw std::invalid_argument("lp_norm needs gamma > -1");
    const int deg = f.degree();
    if (deg < 0) return 0.0;

    IntegrationOptions opt;
    opt.decay_rate = 0.5 * p;
    opt.envelope_log_m = p * std::log(monomial_envelope(f));
    opt.envelope_power = p * deg + std::max(gamma, 0.0);
    opt.endpoint_power = gamma;
    opt.tol = options.tol;
    if (options.breakpoints) {
        opt.breakpoints = *options.breakpoints;
    } else {
        const double x_hi = tail_cutoff(opt.decay_rate, opt.envelope_log_m, opt.envelope_power,
                                        0.5 * opt.tol);
        opt.breakpoints = sign_changes(f, x_hi, 16 * deg + 256);
    }
    auto integrand = [&](double x) {
        const double v = std::abs(evaluate_damped(f, x, 0.5));
        const double vp = p == 1.0 ? v : (p == 2.0 ? v * v : std::pow(v, p));
        return gamma == 0.0 ? vp : vp * std::pow(x, gamma);
    };
    const double integral = integrate_weighted(integrand, opt).value;
    return p == 1.0 ? integral : std::pow(integral, 1.0 / p);
}

double lp_norm(const LaguerreExpansion& f, const SpaceSpec& space, double tol) {
    LpNormOptions opt;
    opt.tol = tol;
    return lp_norm(f, space.p(), space.gamma(), opt);
}

double lp_norm(const DecayingFunction& f, const SpaceSpec& space, double tol) {
    if (!f.eval) throw std::invalid_argument("lp_norm: function callback is empty");
    if (!(f.decay_rate > 0.0))
        throw std::invalid_argument("lp_norm: declared decay rate must be positive");
    const double p = space.p();
    const double gamma = space.gamma();
    IntegrationOptions opt;
    opt.decay_rate = p * f.decay_rate;
    opt.envelope_log_m = p * f.envelope_log_m;
    opt.envelope_power = p * f.envelope_power + std::max(gamma, 0.0);
    opt.endpoint_power = p * f.endpoint_power + gamma;
    opt.tol = tol;
    auto integrand = [&](double x) {
        const double v = std::abs(f.eval(x) * std::exp(-0.5 * x));
        return std::pow(v, p) * std::pow(x, gamma);
    };
    const double integral = integrate_weighted(integrand, opt).value;
    return std::pow(integral, 1.0 / p);
}

namespace {

double thm11_weight_exponent(const SpaceSpec& space) {
    return (space.gamma() + 1.0) / space.p() - 0.5;
}

double lq_norm(std::span<const double> v, double q) {
    double peak = 0.0;
    for (double x : v) peak = std::max(peak, std::abs(x));
    if (q == std::numeric_limits<double>::infinity() || peak == 0.0) return peak;
    double sum = 0.0;
    for (double x : v) sum += std::pow(std::abs(x) / peak, q);
    return peak * std::pow(sum, 1.0 / q);
}

}  // namespace

double thm11_lhs(std::span<const double> fhat, const SpaceSpec& space, double a) {
    auto d = delta2_frac_values(fhat, a);
    const double w = thm11_weight_exponent(space);
    for (std::size_t k = 0; k < d.size(); ++k) d[k] *= std::pow(k + 1.0, w);
    return lq_norm(d, space.q());
}

double thm11_term(std::span<const double> fhat, const SpaceSpec& space, double a, std::size_t k) {
    const auto d = delta2_frac_values(fhat, a);
    if (k >= d.size()) return 0.0;
    return std::pow(k + 1.0, thm11_weight_exponent(space)) * std::abs(d[k]);
}

BlockNormProfile block_sup_norm(std::span<const double> s, double weight_exponent, double q,
                                int n_max, BlockGrid grid) {
    if (n_max < 1) throw std::invalid_argument("block_sup_norm needs n_max >= 1");
    if (s.size() < 2 * static_cast<std::size_t>(n_max) + 1)
        throw std::invalid_argument("block_sup_norm: sequence shorter than 2 n_max + 1");
    const bool q_inf = q == std::numeric_limits<double>::infinity();
    BlockNormProfile out;
    auto block = [&](int n) {
        std::vector<double> terms;
        terms.reserve(static_cast<std::size_t>(n) + 1);
        for (int k = n; k <= 2 * n; ++k) {
            const double v = std::pow(k + 1.0, weight_exponent) * s[k];
            terms.push_back(q_inf ? v : v * std::pow(k + 1.0, -1.0 / q));
        }
        return lq_norm(terms, q);
    };
    for (int n = 1; n <= n_max; n = grid == BlockGrid::dyadic ? 2 * n : n + 1) {
        const double b = block(n);
        out.n_values.push_back(n);
        out.block_norms.push_back(b);
        out.sup = std::max(out.sup, b);
    }
    return out;
}

BlockNormProfile block_sup_norm(const RealSequence& s, double weight_exponent, const SpaceSpec& space,
                                int n_max, BlockGrid grid) {
    const auto values = s.materialize(2 * static_cast<std::size_t>(n_max) + 1);
    return block_sup_norm(values, weight_exponent, space.q(), n_max, grid);
}

WeightedSum weighted_difference_sum(const RealSequence& s, double order, double weight_exponent,
                                    double tol) {
    WeightedSum out;
    if (s.is_finite()) {
        const auto d = frac_diff_values(s.values(), order);
        for (std::size_t k = 0; k < d.size(); ++k)
            out.value += std::pow(k + 1.0, weight_exponent) * std::abs(d[k]);
        out.terms = d.size();
        return out;
    }
    if (!(tol > 0.0)) throw std::invalid_argument("weighted sum tol must be positive");

    constexpr std::size_t kMaxTerms = std::size_t{1} << 16;
    std::vector<double> terms;
    std::size_t checkpoint = 64;
    while (true) {
        for (std::size_t k = terms.size(); k < checkpoint; ++k) {
            const double inner_tol = 0.25 * tol * std::pow(k + 1.0, -weight_exponent - 2.0);
            const double d = frac_diff(s, order, k, std::max(inner_tol, 1e-300));
            terms.push_back(std::pow(k + 1.0, weight_exponent) * std::abs(d));
            out.value += terms.back();
        }
        out.terms = terms.size();

        // Power-law fit over the last octave estimates the remainder.
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int count = 0;
        for (std::size_t k = checkpoint / 2; k < checkpoint; ++k) {
            if (terms[k] <= 0.0) continue;
            const double x = std::log(k + 1.0), y = std::log(terms[k]);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            ++count;
        }
        if (count == 0) {
            out.tail_estimate = 0.0;
            return out;
        }
        const double slope = count > 1 ? (count * sxy - sx * sy) / (count * sxx - sx * sx) : 0.0;
        if (slope < -1.0) {
            const double last = terms.back();
            out.tail_estimate = last * static_cast<double>(checkpoint) / (-slope - 1.0);
            if (out.tail_estimate < 0.5 * tol) return out;
        } else {
            out.tail_estimate = std::numeric_limits<double>::infinity();
        }
        if (checkpoint >= kMaxTerms) {
            out.certified = false;
            return out;
        }
        checkpoint *= 2;
    }
}

WeightedSum thm31_K(const RealSequence& fseq, double delta, double alpha, double gamma, double tol) {
    const double threshold = 2.0 * gamma - alpha + 0.5;
    auto out = weighted_difference_sum(fseq, delta + 1.0, delta + alpha - gamma, tol);
    out.condition_holds = delta > threshold && threshold >= 0.0;
    return out;
}

WeightedSum thm32_lhs(const RealSequence& fhat, double alpha, double gamma, double tol) {
    auto out = weighted_difference_sum(fhat, 2.0 * gamma - alpha + 1.0 / 3.0, gamma - 2.0 / 3.0, tol);
    out.condition_holds = gamma > std::max(-1.0 / 3.0, alpha / 2.0 - 1.0 / 6.0);
    return out;
}

}  // namespace lagmult
