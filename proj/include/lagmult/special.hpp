#pragma once

#include <cstddef>
#include <vector>

namespace lagmult {

/// Largest polynomial degree for which Laguerre evaluation is supported in
/// double precision.
inline constexpr int kMaxLaguerreDegree = 512;

/// ln Gamma(x) for x > 0. Throws std::domain_error for x <= 0.
double log_gamma(double x);

/// Generalized binomial coefficient A_n^a = binom(n + a, n), evaluated by the
/// multiplicative recurrence A_j = A_{j-1} (j + a) / j. Defined for every real
/// a, including negative integers where the sequence terminates with zeros.
double binom_A(int n, double a);

/// Lazily extended table of A_j^a, j = 0, 1, 2, ...
///
/// Memoization makes a stream object unsafe to share between threads; give
/// each worker its own instance.
class BinomCoeffStream {
public:
    explicit BinomCoeffStream(double a);

    double order() const noexcept { return a_; }

    /// A_j^a, extending the table as needed.
    double operator[](std::size_t j);

    /// Ensures values 0..j are materialized and returns a view of them.
    const std::vector<double>& prefix(std::size_t j);

private:
    double a_;
    std::vector<double> values_;
};

/// L_0^alpha(x) .. L_{n_max}^alpha(x) at a single point.
struct LaguerreEval {
    double alpha = 0.0;
    int n_max = 0;
    double x = 0.0;
    std::vector<double> values;
};

/// Forward three-term recurrence
/// (n+1) L_{n+1} = (2n + 1 + alpha - x) L_n - (n + alpha) L_{n-1}.
/// Throws std::invalid_argument for alpha <= -1, x < 0, or n_max outside
/// [0, kMaxLaguerreDegree].
LaguerreEval laguerre_batch(double alpha, int n_max, double x);

/// L_n^alpha(x) e^{-damping x} for n = 0..n_max, with a rescaled recurrence so
/// that large x does not overflow the polynomial values.
std::vector<double> laguerre_batch_damped(double alpha, int n_max, double x, double damping);

/// R_n^alpha(x) = L_n^alpha(x) / A_n^alpha for n = 0..n_max.
std::vector<double> laguerre_normalized(double alpha, int n_max, double x);

/// Orthonormal Laguerre functions
///   Lcal_k^alpha(t) = (A_k^alpha / Gamma(alpha+1))^{1/2} R_k^alpha(t) e^{-t/2} t^{alpha/2}
/// for k = 0..n_max. The recurrence runs on the orthonormal polynomials with
/// a separately tracked power-of-two scale, so neither A_k^alpha nor e^{t/2}
/// is ever formed explicitly. Requires t > 0 (std::domain_error otherwise).
std::vector<double> script_L_batch(double alpha, int n_max, double t);

/// Single value Lcal_k^alpha(t).
double script_L(int k, double alpha, double t);

/// Checks L_n = ((2n-1+alpha-x) L_{n-1} - (n-1+alpha) L_{n-2}) / n for every
/// stored n >= 2 and returns the largest relative deviation, measured against
/// the magnitude of the terms being combined.
double recurrence_residual(const LaguerreEval& eval);

}  // namespace lagmult
