#pragma once

#include "lagmult/differences.hpp"

#include <functional>
#include <span>
#include <vector>

namespace lagmult {

/// f(x) = sum_k coeffs[k] L_k^alpha(x), the raw-L basis. The
/// (Gamma(alpha+1))^{-1} normalization of the formal Laguerre series only
/// enters at synthesize().
struct LaguerreExpansion {
    double alpha = 0.0;
    std::vector<double> coeffs;

    /// Largest k with a nonzero coefficient, or -1 for the zero function.
    int degree() const;
    double operator()(double x) const;
};

/// f(x) e^{-damping x}, evaluated with a rescaled forward recurrence so that
/// large x neither overflows L_k nor underflows the exponential prematurely.
double evaluate_damped(const LaguerreExpansion& f, double x, double damping);

/// sum_k |c_k| L_k^alpha(-1): for x >= 1 it bounds |f(x)| by this value times
/// x^degree (the monomial coefficients of L_k^alpha(-x) are all positive).
double monomial_envelope(const LaguerreExpansion& f);

/// A function given as a callback with a declared decay
///   |f(x) e^{-x/2}| <= exp(envelope_log_m) x^envelope_power e^{-decay_rate x},  x >= 1,
/// and f(x) ~ x^endpoint_power near 0.
struct DecayingFunction {
    std::function<double(double)> eval;
    double decay_rate = 0.5;
    double envelope_log_m = 0.0;
    double envelope_power = 0.0;
    double endpoint_power = 0.0;
};

/// Fourier-Laguerre coefficients fhat_alpha(n) = int f R_n^alpha x^alpha e^{-x} dx
/// for n = 0..n_max, by a Gauss-Laguerre rule of order >= (deg f + n_max)/2 + 8
/// so every inner product is integrated exactly. The rule parameter is
/// `alpha`, which may differ from f.alpha.
std::vector<double> analyze(const LaguerreExpansion& f, double alpha, int n_max);

/// Same for a black-box function; decay_rate must be at least 1/2.
std::vector<double> analyze(const DecayingFunction& f, double alpha, int n_max, double tol = 1e-9);

/// Closed form of analyze for f in its own basis: fhat(k) = Gamma(alpha+1) c_k.
std::vector<double> coefficients_of(const LaguerreExpansion& f);

/// g = (Gamma(alpha+1))^{-1} sum_k m_k L_k^alpha.
LaguerreExpansion synthesize(std::span<const double> m, double alpha);

/// sum_k m_k fhat(k) L_k^alpha up to the shared (Gamma(alpha+1))^{-1}: the
/// raw coefficients are multiplied entrywise by m_k.
LaguerreExpansion apply_multiplier(const RealSequence& m, const LaguerreExpansion& f);

/// Both sides of the Parseval relation
///   sum_k (A_k^alpha / Gamma(alpha+1)) fhat(k)^2 = int |f|^2 t^alpha e^{-t} dt,
/// the left from analyze() and the right from a direct Gauss-Laguerre rule.
struct ParsevalSides {
    double coefficient_side = 0.0;
    double integral_side = 0.0;
};
ParsevalSides parseval_sides(const LaguerreExpansion& f);

struct TransferCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;
    double tail_bound = 0.0;
    /// a > -(2 alpha + 1)/4 and alpha + a > -1 (absolute convergence region).
    bool in_convergence_region = true;
};

/// Coefficient form of the transfer identity
///   Delta^a fhat_alpha(k) = Gamma(alpha+1)/Gamma(alpha+a+1) fhat_{alpha+a}(k).
/// The left side differences the analyzed coefficients at f.alpha (truncated
/// at j_max terms); the right side reanalyzes f with rule parameter alpha + a.
TransferCheck transfer_identity_check(const LaguerreExpansion& f, double a, int k,
                                      std::size_t j_max = 10000);

}  // namespace lagmult
