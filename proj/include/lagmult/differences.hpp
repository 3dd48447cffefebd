#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace lagmult {

/// Raised when a parametric sequence's tail descriptor cannot certify that a
/// fractional-difference series converges.
class ConvergenceUndeclarable : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Declared tail behaviour of a parametric sequence:
///   |m_k| <= bound * (k+1)^{-exponent}.
/// With `alternating` set the sequence is additionally declared to have the
/// form m_k = (-1)^k u_k with u_k >= 0 nonincreasing.
struct TailDescriptor {
    double bound = 1.0;
    double exponent = 0.0;
    bool alternating = false;
};

/// A real sequence m_0, m_1, ... that is either finitely supported (stored
/// values, zero beyond) or given by a rule with a tail descriptor. Parametric
/// sequences are spot-checked against their descriptor at 32 indices on
/// construction.
class RealSequence {
public:
    using Rule = std::function<double(std::size_t)>;

    static RealSequence finite(std::vector<double> values);
    static RealSequence parametric(Rule rule, TailDescriptor tail);

    bool is_finite() const noexcept { return !rule_; }
    /// Number of stored values; size_t max for parametric sequences.
    std::size_t support() const noexcept {
        return rule_ ? std::numeric_limits<std::size_t>::max() : values_.size();
    }
    double operator()(std::size_t k) const {
        if (rule_) return rule_(k);
        return k < values_.size() ? values_[k] : 0.0;
    }
    /// Stored values of a finite sequence (empty for parametric).
    std::span<const double> values() const noexcept { return values_; }
    const TailDescriptor& tail() const noexcept { return tail_; }

    /// m_0 .. m_{count-1}.
    std::vector<double> materialize(std::size_t count) const;

private:
    RealSequence() = default;
    std::vector<double> values_;
    Rule rule_;
    TailDescriptor tail_;
};

/// A truncated series value together with a bound on what was dropped.
struct SeriesValue {
    double value = 0.0;
    double tail_bound = 0.0;
    std::size_t terms = 0;
};

/// Delta^delta m_k = sum_{j>=0} A_j^{-delta-1} m_{k+j}.
///
/// Finite sequences: exact finite sum. Parametric sequences require
/// delta > -1 and either a declared alternating tail (bounded by the Leibniz
/// remainder, summed pairwise) or exponent > 0 with delta + exponent > 0
/// (bounded through the monotone decay of |A_j^{-delta-1}|). Throws
/// ConvergenceUndeclarable otherwise and ConvergenceError when tol is not met
/// within the term budget.
SeriesValue frac_diff_series(const RealSequence& m, double delta, std::size_t k,
                             double tol = 1e-12);
double frac_diff(const RealSequence& m, double delta, std::size_t k, double tol = 1e-12);

/// Delta^delta m_k for k = 0..size-1 of a finite sequence, sharing one
/// coefficient table. Entries beyond the support vanish and are not stored.
std::vector<double> frac_diff_values(std::span<const double> m, double delta);

/// Delta_2 m_k = m_k - m_{k+2}.
double delta2(const RealSequence& m, std::size_t k);

/// Delta_2 Delta^a m_k = Delta^{a+1} m_k + Delta^{a+1} m_{k+1}.
double delta2_frac(const RealSequence& m, double a, std::size_t k, double tol = 1e-12);

/// Delta_2 Delta^a applied to a finite sequence; result has the same length.
std::vector<double> delta2_frac_values(std::span<const double> m, double a);

/// |Delta^a(Delta^b m)_k - Delta^{a+b} m_k| for a finite sequence, with the inner
/// difference materialized on a window of support + 64 entries.
double compose_check(std::span<const double> m, double a, double b, std::size_t k);

}  // namespace lagmult
