#pragma once

#include "lagmult/differences.hpp"
#include "lagmult/transform.hpp"

#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace lagmult {

/// The weighted space L^p_{w(gamma)} together with the expansion index alpha.
/// p ranges over [1, 2]; the theorem checks themselves further require p < 2.
class SpaceSpec {
public:
    SpaceSpec(double p, double gamma, double alpha);

    double p() const noexcept { return p_; }
    double gamma() const noexcept { return gamma_; }
    double alpha() const noexcept { return alpha_; }
    /// Conjugate exponent p/(p-1); infinity for p = 1.
    double q() const noexcept { return q_; }
    bool q_is_infinite() const noexcept { return q_ == std::numeric_limits<double>::infinity(); }

private:
    double p_;
    double gamma_;
    double alpha_;
    double q_;
};

struct LpNormOptions {
    double tol = 1e-7;
    /// Sign changes of f; located by sampling and bisection when absent.
    std::optional<std::vector<double>> breakpoints;
};

/// (int_0^inf |f(x) e^{-x/2}|^p x^gamma dx)^{1/p}.
double lp_norm(const LaguerreExpansion& f, double p, double gamma, const LpNormOptions& options = {});
double lp_norm(const LaguerreExpansion& f, const SpaceSpec& space, double tol = 1e-7);
/// Black-box version; the declared decay of f e^{-x/2} must be positive.
double lp_norm(const DecayingFunction& f, const SpaceSpec& space, double tol = 1e-7);

/// Real sign changes of f on (0, x_hi], by sampling on a quadratic grid and
/// bisection.
std::vector<double> sign_changes(const LaguerreExpansion& f, double x_hi, int samples);

/// Weighted l^q norm of k -> (k+1)^{(gamma+1)/p - 1/2} Delta_2 Delta^a fhat(k);
/// an exact maximum when q is infinite.
double thm11_lhs(std::span<const double> fhat, const SpaceSpec& space, double a);

/// The single k-th term (k+1)^{(gamma+1)/p - 1/2} |Delta_2 Delta^a fhat(k)|.
double thm11_term(std::span<const double> fhat, const SpaceSpec& space, double a, std::size_t k);

/// Dyadic (or every-n) profile of
///   (sum_{k=n}^{2n} |(k+1)^w s_k|^q / (k+1))^{1/q}   (max over the block for q = inf).
struct BlockNormProfile {
    std::vector<int> n_values;
    std::vector<double> block_norms;
    double sup = 0.0;
};

enum class BlockGrid { dyadic, every_n };

/// s must hold at least 2 n_max + 1 entries.
BlockNormProfile block_sup_norm(std::span<const double> s, double weight_exponent, double q,
                                int n_max, BlockGrid grid = BlockGrid::dyadic);
BlockNormProfile block_sup_norm(const RealSequence& s, double weight_exponent, const SpaceSpec& space,
                                int n_max, BlockGrid grid = BlockGrid::dyadic);

/// Weighted l^1 sum of fractional differences, possibly of an infinite sequence.
/// When the tail estimate cannot be brought under tol, `certified` is false and
/// `value` is the partial sum reached so far, a lower bound.
struct WeightedSum {
    double value = 0.0;
    double tail_estimate = 0.0;
    std::size_t terms = 0;
    bool certified = true;
    /// Whether the theorem's parameter condition holds (reported, not enforced).
    bool condition_holds = true;
};

/// sum_k (k+1)^{delta+alpha-gamma} |Delta^{delta+1} f_k|; condition
/// delta > 2 gamma - alpha + 1/2 >= 0.
WeightedSum thm31_K(const RealSequence& fseq, double delta, double alpha, double gamma,
                    double tol = 1e-8);

/// sum_k (k+1)^{gamma-2/3} |Delta^{2 gamma - alpha + 1/3} fhat(k)|; condition
/// gamma > max{-1/3, alpha/2 - 1/6}.
WeightedSum thm32_lhs(const RealSequence& fhat, double alpha, double gamma, double tol = 1e-8);

/// sum_k (k+1)^{weight_exponent} |Delta^order s_k| with a power-law tail
/// estimate for infinite sequences.
WeightedSum weighted_difference_sum(const RealSequence& s, double order, double weight_exponent,
                                    double tol);

}  // namespace lagmult
