#include "lagmult/differences.hpp"

#include "lagmult/quadrature.hpp"
#include "lagmult/special.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lagmult {

namespace {

constexpr std::size_t kTermBudget = std::size_t{1} << 27;

std::vector<std::size_t> spot_check_indices() {
    std::vector<std::size_t> idx;
    for (int i = 0; i < 32; ++i)
        idx.push_back(i < 8 ? static_cast<std::size_t>(i)
                            : static_cast<std::size_t>(8.0 * std::pow(1.5, i - 8)));
    return idx;
}

void require_certifiable(const TailDescriptor& tail, double delta) {
    if (!(delta > -1.0))
        throw ConvergenceUndeclarable("fractional difference of order " + std::to_string(delta) +
                                      " on an infinite sequence needs order > -1");
    if (tail.alternating) {
        if (!(tail.exponent >= 0.0))
            throw ConvergenceUndeclarable("alternating tail needs a non-negative decay exponent");
        return;
    }
    if (!(tail.exponent > 0.0) || !(delta + tail.exponent > 0.0))
        throw ConvergenceUndeclarable(
            "tail |m_k| <= M (k+1)^-" + std::to_string(tail.exponent) +
            " does not certify convergence of Delta^" + std::to_string(delta) +
            " (need exponent > 0 and order + exponent > 0)");
}

SeriesValue parametric_monotone(const RealSequence& m, double delta, std::size_t k, double tol) {
    const auto& tail = m.tail();
    const double eps = tail.exponent;
    BinomCoeffStream coeff(-delta - 1.0);
    SeriesValue out;
    double sum = 0.0;
    std::size_t j = 0;
    std::size_t checkpoint = 64;
    const std::size_t first_monotone = static_cast<std::size_t>(std::max(0.0, std::floor(delta))) + 1;
    while (true) {
        for (; j < checkpoint; ++j) sum += coeff[j] * m(k + j);
        if (checkpoint > first_monotone) {
            const double J = static_cast<double>(checkpoint);
            const double a_J = std::abs(coeff[checkpoint]);
            const double lead = tail.bound * a_J * std::pow(J + 1.0, delta + 1.0);
            double bound = lead * std::pow(J, -delta - eps) / (delta + eps);
            if (delta > 0.0)
                bound = std::min(bound, lead * std::pow(k + J + 1.0, -eps) * std::pow(J, -delta) / delta);
            if (bound < tol || a_J == 0.0) {
                out.value = sum;
                out.tail_bound = a_J == 0.0 ? 0.0 : bound;
                out.terms = checkpoint;
                return out;
            }
        }
        if (checkpoint >= kTermBudget)
            throw ConvergenceError("frac_diff: tail bound above tol " + std::to_string(tol) +
                                   " after " + std::to_string(checkpoint) + " terms");
        checkpoint *= 2;
    }
}

SeriesValue parametric_alternating(const RealSequence& m, double delta, std::size_t k, double tol) {
    BinomCoeffStream coeff(-delta - 1.0);
    const std::size_t first = static_cast<std::size_t>(std::max(1.0, std::ceil(delta + 1.0)));
    double sum = 0.0;
    for (std::size_t j = 0; j < first; ++j) sum += coeff[j] * m(k + j);
    // Beyond `first` the coefficients keep one sign and shrink in magnitude, so
    // the terms alternate with decreasing size and the Leibniz remainder applies.
    for (std::size_t j = first; j < kTermBudget; j += 2) {
        const double t0 = coeff[j] * m(k + j);
        if (std::abs(t0) < tol) return {sum, std::abs(t0), j};
        sum += t0 + coeff[j + 1] * m(k + j + 1);
    }
    throw ConvergenceError("frac_diff: alternating tail above tol " + std::to_string(tol) +
                           " after " + std::to_string(kTermBudget) + " terms");
}

}  // namespace

RealSequence RealSequence::finite(std::vector<double> values) {
    RealSequence s;
    s.values_ = std::move(values);
    return s;
}

RealSequence RealSequence::parametric(Rule rule, TailDescriptor tail) {
    if (!rule) throw std::invalid_argument("parametric sequence needs a rule");
    if (!(tail.bound >= 0.0)) throw std::invalid_argument("tail bound must be non-negative");
    for (std::size_t k : spot_check_indices()) {
        const double v = rule(k);
        const double limit = tail.bound * std::pow(k + 1.0, -tail.exponent);
        if (!(std::abs(v) <= limit * (1.0 + 1e-9)))
            throw std::invalid_argument("sequence value at index " + std::to_string(k) +
                                        " exceeds its declared tail bound");
        if (tail.alternating) {
            const double w = rule(k + 1);
            if (v * w > 0.0 || std::abs(w) > std::abs(v) * (1.0 + 1e-12))
                throw std::invalid_argument("sequence declared alternating-monotone fails at index " +
                                            std::to_string(k));
        }
    }
    RealSequence s;
    s.rule_ = std::move(rule);
    s.tail_ = tail;
    return s;
}

std::vector<double> RealSequence::materialize(std::size_t count) const {
    std::vector<double> out(count);
    for (std::size_t k = 0; k < count; ++k) out[k] = (*this)(k);
    return out;
}

SeriesValue frac_diff_series(const RealSequence& m, double delta, std::size_t k, double tol) {
    if (m.is_finite()) {
        const auto v = m.values();
        if (k >= v.size()) return {0.0, 0.0, 0};
        BinomCoeffStream coeff(-delta - 1.0);
        const std::size_t n = v.size() - k;
        const auto& a = coeff.prefix(n - 1);
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) sum += a[j] * v[k + j];
        return {sum, 0.0, n};
    }
    require_certifiable(m.tail(), delta);
    if (!(tol > 0.0)) throw std::invalid_argument("frac_diff tol must be positive");
    return m.tail().alternating ? parametric_alternating(m, delta, k, tol)
                                : parametric_monotone(m, delta, k, tol);
}

double frac_diff(const RealSequence& m, double delta, std::size_t k, double tol) {
    return frac_diff_series(m, delta, k, tol).value;
}

std::vector<double> frac_diff_values(std::span<const double> m, double delta) {
    const std::size_t n = m.size();
    std::vector<double> out(n, 0.0);
    if (n == 0) return out;
    BinomCoeffStream coeff(-delta - 1.0);
    const auto& a = coeff.prefix(n - 1);
    for (std::size_t k = 0; k < n; ++k) {
        double sum = 0.0;
        for (std::size_t j = 0; k + j < n; ++j) sum += a[j] * m[k + j];
        out[k] = sum;
    }
    return out;
}

double delta2(const RealSequence& m, std::size_t k) { return m(k) - m(k + 2); }

double delta2_frac(const RealSequence& m, double a, std::size_t k, double tol) {
    return frac_diff(m, a + 1.0, k, tol) + frac_diff(m, a + 1.0, k + 1, tol);
}

std::vector<double> delta2_frac_values(std::span<const double> m, double a) {
    const auto d = frac_diff_values(m, a + 1.0);
    std::vector<double> out(d.size());
    for (std::size_t k = 0; k < d.size(); ++k)
        out[k] = d[k] + (k + 1 < d.size() ? d[k + 1] : 0.0);
    return out;
}

double compose_check(std::span<const double> m, double a, double b, std::size_t k) {
    std::vector<double> window(m.begin(), m.end());
    window.resize(m.size() + 64, 0.0);
    const auto inner = frac_diff_values(window, b);
    const auto outer = frac_diff_values(inner, a);
    const auto direct = frac_diff_values(window, a + b);
    if (k >= window.size()) return 0.0;
    return std::abs(outer[k] - direct[k]);
}

}  // namespace lagmult
