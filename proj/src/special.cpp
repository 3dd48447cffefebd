#include "lagmult/special.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lagmult {

namespace {

void check_alpha(double alpha) {
    if (!(alpha > -1.0))
        throw std::invalid_argument("Laguerre parameter alpha must exceed -1, got " +
                                    std::to_string(alpha));
}

void check_degree(int n_max) {
    if (n_max < 0 || n_max > kMaxLaguerreDegree)
        throw std::invalid_argument("Laguerre degree must lie in [0, " +
                                    std::to_string(kMaxLaguerreDegree) + "], got " +
                                    std::to_string(n_max));
}

// Rescaling threshold for scaled recurrences: 2^400.
constexpr double kBig = 0x1p400;
constexpr double kBigInv = 0x1p-400;
const double kLogBig = 400.0 * std::log(2.0);

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("log_gamma requires x > 0, got " + std::to_string(x));
#if defined(__GLIBC__)
    int sign = 0;
    return ::lgamma_r(x, &sign);
#else
    return std::lgamma(x);
#endif
}

double binom_A(int n, double a) {
    if (n < 0) return 0.0;
    double value = 1.0;
    for (int j = 1; j <= n; ++j) value *= (j + a) / j;
    return value;
}

BinomCoeffStream::BinomCoeffStream(double a) : a_(a), values_{1.0} {}

double BinomCoeffStream::operator[](std::size_t j) { return prefix(j)[j]; }

const std::vector<double>& BinomCoeffStream::prefix(std::size_t j) {
    if (values_.size() <= j) {
        if (values_.capacity() <= j) values_.reserve(std::max(j + 1, 2 * values_.capacity()));
        for (std::size_t i = values_.size(); i <= j; ++i) {
            const double fi = static_cast<double>(i);
            values_.push_back(values_.back() * (fi + a_) / fi);
        }
    }
    return values_;
}

LaguerreEval laguerre_batch(double alpha, int n_max, double x) {
    check_alpha(alpha);
    check_degree(n_max);
    if (!(x >= 0.0))
        throw std::invalid_argument("Laguerre argument must be non-negative, got " +
                                    std::to_string(x));
    LaguerreEval out;
    out.alpha = alpha;
    out.n_max = n_max;
    out.x = x;
    out.values.resize(static_cast<std::size_t>(n_max) + 1);
    out.values[0] = 1.0;
    if (n_max >= 1) out.values[1] = 1.0 + alpha - x;
    for (int n = 1; n < n_max; ++n) {
        out.values[n + 1] =
            ((2.0 * n + 1.0 + alpha - x) * out.values[n] - (n + alpha) * out.values[n - 1]) /
            (n + 1.0);
    }
    return out;
}

std::vector<double> laguerre_batch_damped(double alpha, int n_max, double x, double damping) {
    check_alpha(alpha);
    check_degree(n_max);
    if (!(x >= 0.0))
        throw std::invalid_argument("Laguerre argument must be non-negative, got " +
                                    std::to_string(x));
    std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
    double log_scale = -damping * x;
    double prev = 0.0;
    double cur = 1.0;
    auto emit = [&](double v) {
        if (v == 0.0) return 0.0;
        return std::copysign(std::exp(std::log(std::abs(v)) + log_scale), v);
    };
    out[0] = emit(cur);
    for (int n = 0; n < n_max; ++n) {
        const double next = ((2.0 * n + 1.0 + alpha - x) * cur - (n + alpha) * prev) / (n + 1.0);
        prev = cur;
        cur = next;
        if (std::abs(cur) > kBig) {
            cur *= kBigInv;
            prev *= kBigInv;
            log_scale += kLogBig;
        }
        out[n + 1] = emit(cur);
    }
    return out;
}

std::vector<double> laguerre_normalized(double alpha, int n_max, double x) {
    auto values = laguerre_batch(alpha, n_max, x).values;
    double a_n = 1.0;
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) a_n *= (n + alpha) / n;
        values[n] /= a_n;
    }
    return values;
}

std::vector<double> script_L_batch(double alpha, int n_max, double t) {
    check_alpha(alpha);
    check_degree(n_max);
    if (!(t > 0.0))
        throw std::domain_error("script_L requires t > 0, got " + std::to_string(t));

    const double log_prefactor = -0.5 * log_gamma(alpha + 1.0) - 0.5 * t + 0.5 * alpha * std::log(t);
    std::vector<double> out(static_cast<std::size_t>(n_max) + 1);

    // Orthonormal recurrence
    // sqrt((n+1)(n+alpha+1)) p_{n+1} = (2n+1+alpha-t) p_n - sqrt(n(n+alpha)) p_{n-1}
    double log_scale = 0.0;
    double prev = 0.0;
    double cur = 1.0;
    auto emit = [&](double v) {
        if (v == 0.0) return 0.0;
        return std::copysign(std::exp(std::log(std::abs(v)) + log_prefactor + log_scale), v);
    };
    out[0] = emit(cur);
    for (int n = 0; n < n_max; ++n) {
        const double next =
            ((2.0 * n + 1.0 + alpha - t) * cur - std::sqrt(n * (n + alpha)) * prev) /
            std::sqrt((n + 1.0) * (n + alpha + 1.0));
        prev = cur;
        cur = next;
        if (std::abs(cur) > kBig) {
            cur *= kBigInv;
            prev *= kBigInv;
            log_scale += kLogBig;
        }
        out[n + 1] = emit(cur);
    }
    return out;
}

double script_L(int k, double alpha, double t) {
    if (k < 0) throw std::invalid_argument("script_L requires k >= 0");
    return script_L_batch(alpha, k, t).back();
}

double recurrence_residual(const LaguerreEval& eval) {
    double worst = 0.0;
    const auto& v = eval.values;
    for (int n = 2; n <= eval.n_max; ++n) {
        const double t1 = (2.0 * n - 1.0 + eval.alpha - eval.x) * v[n - 1] / n;
        const double t2 = (n - 1.0 + eval.alpha) * v[n - 2] / n;
        const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(v[n])});
        if (scale == 0.0) continue;
        worst = std::max(worst, std::abs(v[n] - (t1 - t2)) / scale);
    }
    return worst;
}

}  // namespace lagmult
