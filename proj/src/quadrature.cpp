#include "lagmult/quadrature.hpp"

#include "lagmult/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace lagmult {

namespace {

constexpr double kEps = 1e-14;
constexpr int kMaxQlSweeps = 60;

// Eigenvalues of the symmetric tridiagonal matrix (diag, off) by implicit QL.
// off[i] couples rows i and i+1; off.back() is ignored.
void tridiagonal_eigenvalues(std::vector<double>& diag, std::vector<double> off, int order,
                             double alpha) {
    const int n = static_cast<int>(diag.size());
    off.push_back(0.0);
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m = l;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(diag[m]) + std::abs(diag[m + 1]);
                if (std::abs(off[m]) <= kEps * dd) break;
            }
            if (m == l) break;
            if (iter++ == kMaxQlSweeps)
                throw ConvergenceError("Gauss-Laguerre eigen-solve did not converge (order " +
                                       std::to_string(order) + ", alpha " +
                                       std::to_string(alpha) + ")");
            double g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
            double r = std::hypot(g, 1.0);
            g = diag[m] - diag[l] + off[l] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            int i = m - 1;
            bool deflated = false;
            for (; i >= l; --i) {
                const double f = s * off[i];
                const double b = c * off[i];
                r = std::hypot(f, g);
                off[i + 1] = r;
                if (r == 0.0) {
                    diag[i + 1] -= p;
                    off[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
            }
            if (deflated) continue;
            diag[l] -= p;
            off[l] = g;
            off[m] = 0.0;
        } while (m != l);
    }
    std::sort(diag.begin(), diag.end());
}

// Orthonormal Laguerre polynomial of degree n and its derivative, both
// multiplied by a common unknown positive scale. Only the ratio is meaningful.
std::pair<double, double> scaled_orthonormal_with_derivative(double alpha, int n, double x) {
    double p_prev = 0.0, p = 1.0;
    double d_prev = 0.0, d = 0.0;
    for (int k = 0; k < n; ++k) {
        const double norm = std::sqrt((k + 1.0) * (k + alpha + 1.0));
        const double back = std::sqrt(k * (k + alpha));
        const double a = 2.0 * k + 1.0 + alpha - x;
        const double p_next = (a * p - back * p_prev) / norm;
        const double d_next = (a * d - p - back * d_prev) / norm;
        p_prev = p;
        p = p_next;
        d_prev = d;
        d = d_next;
        const double mag = std::max(std::abs(p), std::abs(d));
        if (mag > 0x1p400) {
            p *= 0x1p-400;
            p_prev *= 0x1p-400;
            d *= 0x1p-400;
            d_prev *= 0x1p-400;
        }
    }
    return {p, d};
}

// ln sum_{k<n} p_k(x)^2 for the orthonormal polynomials of x^alpha e^{-x}.
double log_christoffel_sum(double alpha, int n, double x) {
    double log_scale = 0.0;  // p_k = q_k * exp(log_scale) * Gamma(alpha+1)^{-1/2}
    double q_prev = 0.0, q = 1.0;
    double sum = 1.0;
    for (int k = 0; k + 1 < n; ++k) {
        const double q_next =
            ((2.0 * k + 1.0 + alpha - x) * q - std::sqrt(k * (k + alpha)) * q_prev) /
            std::sqrt((k + 1.0) * (k + alpha + 1.0));
        q_prev = q;
        q = q_next;
        if (std::abs(q) > 0x1p400) {
            q *= 0x1p-400;
            q_prev *= 0x1p-400;
            sum *= 0x1p-800;
            log_scale += 400.0 * std::numbers::ln2;
        }
        sum += q * q;
    }
    return std::log(sum) + 2.0 * log_scale - log_gamma(alpha + 1.0);
}

// Pairwise sum in a fixed tree shape so that totals are reproducible.
double pairwise_sum(const double* v, std::size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

}  // namespace

QuadRule gauss_laguerre(int order, double alpha) {
    if (order < 1 || order > kMaxQuadOrder)
        throw std::invalid_argument("Gauss-Laguerre order must lie in [1, " +
                                    std::to_string(kMaxQuadOrder) + "], got " +
                                    std::to_string(order));
    if (!(alpha > -1.0))
        throw std::invalid_argument("Gauss-Laguerre alpha must exceed -1, got " +
                                    std::to_string(alpha));

    std::vector<double> diag(order);
    std::vector<double> off(order > 1 ? order - 1 : 0);
    for (int i = 0; i < order; ++i) diag[i] = 2.0 * i + alpha + 1.0;
    for (int i = 1; i < order; ++i) off[i - 1] = std::sqrt(i * (i + alpha));
    tridiagonal_eigenvalues(diag, std::move(off), order, alpha);

    QuadRule rule;
    rule.alpha = alpha;
    rule.order = order;
    rule.nodes = std::move(diag);
    for (double& x : rule.nodes) {
        for (int it = 0; it < 8; ++it) {
            const auto [p, dp] = scaled_orthonormal_with_derivative(alpha, order, x);
            if (dp == 0.0) break;
            const double step = p / dp;
            const double next = x - step;
            if (!(next > 0.0)) break;
            x = next;
            if (std::abs(step) <= 4e-16 * x) break;
        }
    }
    rule.log_weights.resize(order);
    rule.weights.resize(order);
    for (int i = 0; i < order; ++i) {
        rule.log_weights[i] = -log_christoffel_sum(alpha, order, rule.nodes[i]);
        rule.weights[i] = std::exp(rule.log_weights[i]);
    }
    return rule;
}

LegendreRule gauss_legendre(int order) {
    if (order < 1) throw std::invalid_argument("Gauss-Legendre order must be positive");
    LegendreRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    for (int i = 0; i < order; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double dp = 1.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double p = order == 1 ? x : p1;
            const double pm1 = order == 1 ? 1.0 : p0;
            dp = order * (x * p - pm1) / (x * x - 1.0);
            const double step = p / dp;
            x -= step;
            if (std::abs(step) < 1e-16) break;
        }
        rule.nodes[order - 1 - i] = x;
        rule.weights[order - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

double tail_cutoff(double decay_rate, double log_m, double power, double target,
                   double* tail_bound) {
    if (!(decay_rate > 0.0)) throw std::invalid_argument("decay_rate must be positive");
    if (!(target > 0.0)) throw std::invalid_argument("tail target must be positive");
    // For X >= 2 power / rate the envelope tail obeys
    //   int_X^inf x^s e^{-r x} dx <= X^s e^{-r X} / (r - s / X) <= 2 X^s e^{-r X} / r.
    double x = std::max({1.0, 2.0 * power / decay_rate, 1.0 / decay_rate});
    const double log_target = std::log(target);
    auto log_tail = [&](double X) {
        const double slack = power > 0.0 ? decay_rate - power / X : decay_rate;
        return log_m + power * std::log(X) - decay_rate * X - std::log(slack);
    };
    while (log_tail(x) > log_target) x *= 1.02;
    if (tail_bound) *tail_bound = std::exp(log_tail(x));
    return x;
}

IntegralResult integrate_weighted(const std::function<double(double)>& g,
                                  const IntegrationOptions& options) {
    if (!(options.tol > 0.0)) throw std::invalid_argument("integration tol must be positive");
    if (!(options.endpoint_power > -1.0))
        throw std::invalid_argument("endpoint power must exceed -1");

    double tail = 0.0;
    const double x_max = tail_cutoff(options.decay_rate, options.envelope_log_m,
                                     options.envelope_power, 0.5 * options.tol, &tail);

    std::vector<double> cuts;
    for (double b : options.breakpoints)
        if (b > 0.0 && b < x_max) cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    // Segment boundaries: geometric grading toward 0, then the breakpoints,
    // then the tail cut into pieces of length at most 1 / decay_rate.
    std::vector<double> edges{0.0};
    const double first = std::min({1.0, x_max, cuts.empty() ? 1.0 : cuts.front()});
    const double nu1 = options.endpoint_power + 1.0;
    const int grading =
        std::clamp(static_cast<int>(std::ceil(std::log(1e3 / options.tol) / (nu1 * std::log(4.0)))),
                   1, 400);
    for (int i = grading; i >= 1; --i) edges.push_back(first * std::pow(0.25, i));
    edges.push_back(first);
    for (double b : cuts)
        if (b > edges.back()) edges.push_back(b);
    const double step = std::min(1.0 / options.decay_rate, 4.0);
    while (edges.back() < x_max) {
        const double next = std::min(x_max, edges.back() + step);
        if (x_max - next < 1e-3 * step) {
            edges.push_back(x_max);
            break;
        }
        edges.push_back(next);
    }

    static const LegendreRule legendre = gauss_legendre(16);
    const std::size_t segments = edges.size() - 1;

    // Each segment doubles its own panel count until two successive values
    // agree to its share of tol/2; segments are then summed pairwise.
    const double seg_tol = 0.5 * options.tol / static_cast<double>(segments);
    std::vector<double> seg_values(segments);
    std::vector<double> panel_sums;
    auto segment_at = [&](std::size_t s, int level) {
        const int split = 1 << level;
        panel_sums.assign(split, 0.0);
        const double lo = edges[s];
        const double h = (edges[s + 1] - lo) / split;
        for (int j = 0; j < split; ++j) {
            const double half = 0.5 * h;
            const double mid = lo + j * h + half;
            double acc = 0.0;
            for (std::size_t q = 0; q < legendre.nodes.size(); ++q)
                acc += legendre.weights[q] * g(mid + half * legendre.nodes[q]);
            panel_sums[j] = acc * half;
        }
        return pairwise_sum(panel_sums.data(), panel_sums.size());
    };

    IntegralResult result;
    double change_total = 0.0;
    for (std::size_t s = 0; s < segments; ++s) {
        double previous = segment_at(s, 0);
        bool done = false;
        for (int level = 1; level <= options.max_doublings; ++level) {
            const double current = segment_at(s, level);
            const double change = std::abs(current - previous);
            previous = current;
            if (change < seg_tol) {
                seg_values[s] = current;
                change_total += change;
                result.panels_used += 1 << level;
                done = true;
                break;
            }
        }
        if (!done)
            throw ConvergenceError("integrate_weighted: panel doubling did not reach tol " +
                                   std::to_string(options.tol) + " on [" + std::to_string(edges[s]) +
                                   ", " + std::to_string(edges[s + 1]) +
                                   "] (integrand too rough or decay_rate " +
                                   std::to_string(options.decay_rate) + " misdeclared)");
    }
    result.value = pairwise_sum(seg_values.data(), seg_values.size());
    result.abs_error_estimate = change_total + tail;
    return result;
}

SupResult sup_scan(const std::function<double(double)>& g, int k_hint, double alpha) {
    constexpr int kGrid = 4096;
    const double lo = 1e-6;
    const double hi = 8.0 * (2.0 * std::max(k_hint, 0) + alpha + 2.0);
    const double ratio = std::pow(hi / lo, 1.0 / (kGrid - 1));
    std::vector<double> xs(kGrid);
    xs[0] = lo;
    for (int i = 1; i < kGrid; ++i) xs[i] = xs[i - 1] * ratio;
    xs.back() = hi;

    int best = 0;
    double best_value = -1.0;
    for (int i = 0; i < kGrid; ++i) {
        const double v = std::abs(g(xs[i]));
        if (v > best_value) {
            best_value = v;
            best = i;
        }
    }
    SupResult result{best_value, xs[best]};
    if (best == 0 || best == kGrid - 1) return result;

    // Golden-section search on the bracketing grid cell pair.
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = xs[best - 1], b = xs[best + 1];
    double c = b - phi * (b - a), d = a + phi * (b - a);
    double fc = std::abs(g(c)), fd = std::abs(g(d));
    for (int it = 0; it < 100 && (b - a) > 1e-13 * std::abs(b); ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = std::abs(g(c));
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = std::abs(g(d));
        }
    }
    const double x = 0.5 * (a + b);
    const double v = std::abs(g(x));
    if (v > result.value) result = {v, x};
    return result;
}

}  // namespace lagmult
