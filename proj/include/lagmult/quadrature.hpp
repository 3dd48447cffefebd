#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lagmult {

/// Raised when an iterative numerical procedure exhausts its budget.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Gauss rule for the weight x^alpha e^{-x} on (0, inf).
///
/// Nodes are ascending. For large orders the trailing weights fall below the
/// smallest normal double and are stored as 0; log_weights keeps them exact.
struct QuadRule {
    double alpha = 0.0;
    int order = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<double> log_weights;
};

inline constexpr int kMaxQuadOrder = 512;

/// Golub-Welsch construction: eigenvalues of the Jacobi matrix by implicit-shift
/// QL, then Newton polishing on the orthonormal polynomial of degree `order`
/// and Christoffel-number weights.
QuadRule gauss_laguerre(int order, double alpha);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct LegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
LegendreRule gauss_legendre(int order);

struct IntegralResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    int panels_used = 0;
};

/// Describes the integrand g handed to integrate_weighted. The caller asserts
///   |g(x)| <= exp(envelope_log_m) * x^envelope_power * exp(-decay_rate * x),  x >= 1,
/// and g(x) ~ x^endpoint_power near 0.
struct IntegrationOptions {
    double decay_rate = 1.0;
    double envelope_log_m = 0.0;
    double envelope_power = 0.0;
    double endpoint_power = 0.0;
    double tol = 1e-9;
    /// Points where g is not smooth (sign changes of an inner factor, kinks).
    std::vector<double> breakpoints;
    int max_doublings = 12;
};

/// Composite Gauss-Legendre integration of g over (0, inf). The range is cut at
/// the point where the envelope tail falls below tol/2, panels are graded
/// geometrically (ratio 1/4) toward the origin, and each segment's panel count
/// is doubled until two successive values agree to its share of tol/2. Throws
/// ConvergenceError when a segment exhausts the doubling budget.
IntegralResult integrate_weighted(const std::function<double(double)>& g,
                                  const IntegrationOptions& options);

/// Point where the analytic tail bound of the envelope drops below `target`.
double tail_cutoff(double decay_rate, double log_m, double power, double target,
                   double* tail_bound = nullptr);

struct SupResult {
    double value = 0.0;
    double argmax = 0.0;
};

/// max |g| over a logarithmic grid of 4096 points on
/// (1e-6, 8 (2 k_hint + alpha + 2)), refined by golden-section search around
/// the best grid point.
SupResult sup_scan(const std::function<double(double)>& g, int k_hint, double alpha = 0.0);

}  // namespace lagmult
