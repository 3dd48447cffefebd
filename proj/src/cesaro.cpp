#include "lagmult/cesaro.hpp"

#include "lagmult/norms.hpp"
#include "lagmult/quadrature.hpp"
#include "lagmult/special.hpp"

#include <cmath>
#include <string>

namespace lagmult {

void CesaroSpec::validate() const {
    if (n < 0 || n > kMaxLaguerreDegree)
        throw std::invalid_argument("Cesaro degree out of range: " + std::to_string(n));
    if (!(delta >= 0.0))
        throw std::invalid_argument("Cesaro order must be non-negative, got " + std::to_string(delta));
    if (!(alpha > -1.0))
        throw std::invalid_argument("Cesaro alpha must exceed -1, got " + std::to_string(alpha));
}

std::vector<double> cesaro_multiplier(const CesaroSpec& spec) {
    spec.validate();
    BinomCoeffStream a(spec.delta);
    const auto& values = a.prefix(spec.n);
    std::vector<double> m(static_cast<std::size_t>(spec.n) + 1);
    for (int k = 0; k <= spec.n; ++k) m[k] = values[spec.n - k] / values[spec.n];
    return m;
}

double cesaro_kernel(const CesaroSpec& spec, double x) {
    spec.validate();
    const double lead = laguerre_batch(spec.alpha + spec.delta + 1.0, spec.n, x).values.back();
    return lead / (binom_A(spec.n, spec.delta) * std::exp(log_gamma(spec.alpha + 1.0)));
}

double cesaro_kernel_summed(const CesaroSpec& spec, double x) {
    spec.validate();
    const auto l = laguerre_batch(spec.alpha, spec.n, x).values;
    BinomCoeffStream a(spec.delta);
    const auto& coeff = a.prefix(spec.n);
    double sum = 0.0;
    for (int k = 0; k <= spec.n; ++k) sum += coeff[spec.n - k] * l[k];
    return sum / (coeff[spec.n] * std::exp(log_gamma(spec.alpha + 1.0)));
}

LaguerreExpansion cesaro_kernel_expansion(const CesaroSpec& spec) {
    spec.validate();
    LaguerreExpansion f{spec.alpha + spec.delta + 1.0,
                        std::vector<double>(static_cast<std::size_t>(spec.n) + 1, 0.0)};
    f.coeffs[spec.n] = 1.0 / (binom_A(spec.n, spec.delta) * std::exp(log_gamma(spec.alpha + 1.0)));
    return f;
}

double kernel_l1_norm(const CesaroSpec& spec, double gamma, double tol) {
    const auto kernel = cesaro_kernel_expansion(spec);
    LpNormOptions opt;
    opt.tol = tol;
    opt.breakpoints = spec.n > 0 ? gauss_laguerre(spec.n, kernel.alpha).nodes : std::vector<double>{};
    return lp_norm(kernel, 1.0, gamma, opt);
}

}  // namespace lagmult
