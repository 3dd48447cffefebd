#include "lagmult/transform.hpp"

#include "lagmult/quadrature.hpp"
#include "lagmult/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace lagmult {

int LaguerreExpansion::degree() const {
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
        if (coeffs[k] != 0.0) return k;
    return -1;
}

double LaguerreExpansion::operator()(double x) const { return evaluate_damped(*this, x, 0.0); }

double evaluate_damped(const LaguerreExpansion& f, double x, double damping) {
    const int deg = f.degree();
    if (deg < 0) return 0.0;
    constexpr double big = 0x1p400;
    const double log_big = 400.0 * std::numbers::ln2;
    double log_scale = 0.0;
    double prev = 0.0;
    double cur = 1.0;
    double sum = f.coeffs[0];
    const double alpha = f.alpha;
    for (int k = 0; k < deg; ++k) {
        const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
        if (std::abs(cur) > big) {
            cur /= big;
            prev /= big;
            sum /= big;
            log_scale += log_big;
        }
        sum += f.coeffs[k + 1] * cur;
    }
    if (sum == 0.0) return 0.0;
    if (log_scale == 0.0 && damping * x < 700.0) return sum * std::exp(-damping * x);
    return std::copysign(std::exp(std::log(std::abs(sum)) + log_scale - damping * x), sum);
}

double monomial_envelope(const LaguerreExpansion& f) {
    const int deg = f.degree();
    if (deg < 0) return 0.0;
    double prev = 0.0;
    double cur = 1.0;
    double sum = std::abs(f.coeffs[0]);
    for (int k = 0; k < deg; ++k) {
        const double next = ((2.0 * k + 2.0 + f.alpha) * cur - (k + f.alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
        sum += std::abs(f.coeffs[k + 1]) * cur;
    }
    return sum;
}

std::vector<double> analyze(const LaguerreExpansion& f, double alpha, int n_max) {
    if (n_max < 0) throw std::invalid_argument("analyze: n_max must be non-negative");
    const int deg = std::max(f.degree(), 0);
    const int order = std::min(kMaxQuadOrder, (deg + n_max) / 2 + 8);
    const QuadRule rule = gauss_laguerre(order, alpha);

    std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
    double a_n = 1.0;
    std::vector<double> inv_a(out.size());
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) a_n *= (n + alpha) / n;
        inv_a[n] = 1.0 / a_n;
    }
    // Each weight is split as sqrt(w) * sqrt(w) and attached to the two damped
    // factors, which keeps every product representable at large nodes.
    for (int i = 0; i < order; ++i) {
        const double x = rule.nodes[i];
        const double half_log_w = 0.5 * rule.log_weights[i] + 0.5 * x;
        const double fx = evaluate_damped(f, x, 0.5) * std::exp(half_log_w);
        if (fx == 0.0) continue;
        const auto damped = laguerre_batch_damped(alpha, n_max, x, 0.5);
        const double s = std::exp(half_log_w);
        for (int n = 0; n <= n_max; ++n) out[n] += fx * damped[n] * s * inv_a[n];
    }
    return out;
}

std::vector<double> analyze(const DecayingFunction& f, double alpha, int n_max, double tol) {
    if (!f.eval) throw std::invalid_argument("analyze: function callback is empty");
    if (!(f.decay_rate >= 0.5))
        throw std::invalid_argument("analyze: declared decay rate must be at least 1/2, got " +
                                    std::to_string(f.decay_rate));
    if (n_max < 0 || n_max > kMaxLaguerreDegree)
        throw std::invalid_argument("analyze: n_max out of range");

    std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
    LaguerreExpansion probe{alpha, {}};
    double a_n = 1.0;
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) a_n *= (n + alpha) / n;
        probe.coeffs.assign(static_cast<std::size_t>(n) + 1, 0.0);
        probe.coeffs[n] = 1.0;
        IntegrationOptions opt;
        opt.decay_rate = f.decay_rate + 0.5;
        opt.envelope_log_m = f.envelope_log_m + std::log(monomial_envelope(probe) / a_n);
        opt.envelope_power = f.envelope_power + n + std::max(alpha, 0.0);
        opt.endpoint_power = f.endpoint_power + alpha;
        opt.tol = tol;
        const double inv_a = 1.0 / a_n;
        auto integrand = [&](double x) {
            const double fx = f.eval(x) * std::exp(-0.5 * x);
            return fx * evaluate_damped(probe, x, 0.5) * inv_a * std::pow(x, alpha);
        };
        out[n] = integrate_weighted(integrand, opt).value;
    }
    return out;
}

std::vector<double> coefficients_of(const LaguerreExpansion& f) {
    const double g = std::exp(log_gamma(f.alpha + 1.0));
    std::vector<double> out(f.coeffs);
    for (double& c : out) c *= g;
    return out;
}

LaguerreExpansion synthesize(std::span<const double> m, double alpha) {
    const double inv_g = std::exp(-log_gamma(alpha + 1.0));
    LaguerreExpansion f{alpha, std::vector<double>(m.begin(), m.end())};
    for (double& c : f.coeffs) c *= inv_g;
    return f;
}

LaguerreExpansion apply_multiplier(const RealSequence& m, const LaguerreExpansion& f) {
    LaguerreExpansion g{f.alpha, f.coeffs};
    for (std::size_t k = 0; k < g.coeffs.size(); ++k)
        if (g.coeffs[k] != 0.0) g.coeffs[k] *= m(k);
    return g;
}

ParsevalSides parseval_sides(const LaguerreExpansion& f) {
    const int deg = std::max(f.degree(), 0);
    const double alpha = f.alpha;
    const auto fhat = analyze(f, alpha, deg);
    const double inv_g = std::exp(-log_gamma(alpha + 1.0));
    ParsevalSides sides;
    double a_k = 1.0;
    for (int k = 0; k <= deg; ++k) {
        if (k > 0) a_k *= (k + alpha) / k;
        sides.coefficient_side += a_k * inv_g * fhat[k] * fhat[k];
    }
    const QuadRule rule = gauss_laguerre(std::min(kMaxQuadOrder, deg + 2), alpha);
    for (int i = 0; i < rule.order; ++i) {
        const double x = rule.nodes[i];
        const double v = evaluate_damped(f, x, 0.5) * std::exp(0.5 * rule.log_weights[i] + 0.5 * x);
        sides.integral_side += v * v;
    }
    return sides;
}

TransferCheck transfer_identity_check(const LaguerreExpansion& f, double a, int k,
                                      std::size_t j_max) {
    const double alpha = f.alpha;
    if (!(a > -1.0) || !(alpha + a > -1.0))
        throw std::invalid_argument("transfer identity needs a > -1 and alpha + a > -1");
    if (k < 0) throw std::invalid_argument("transfer identity needs k >= 0");

    TransferCheck out;
    out.in_convergence_region = a > -(2.0 * alpha + 1.0) / 4.0;
    const int deg = f.degree();
    if (deg < 0 || k > deg) return out;

    const auto fhat = analyze(f, alpha, deg);
    BinomCoeffStream coeff(-a - 1.0);
    const std::size_t available = static_cast<std::size_t>(deg - k) + 1;
    const std::size_t used = std::min(available, j_max + 1);
    for (std::size_t j = 0; j < used; ++j) out.lhs += coeff[j] * fhat[k + j];
    for (std::size_t j = used; j < available; ++j) out.tail_bound += std::abs(coeff[j] * fhat[k + j]);

    const auto shifted = analyze(f, alpha + a, deg);
    out.rhs = std::exp(log_gamma(alpha + 1.0) - log_gamma(alpha + a + 1.0)) * shifted[k];
    out.gap = std::abs(out.lhs - out.rhs);
    return out;
}

}  // namespace lagmult
