#pragma once

#include "lagmult/differences.hpp"
#include "lagmult/norms.hpp"
#include "lagmult/transform.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lagmult {

/// Least-squares line through (ln n, ln value).
struct ExponentFit {
    double slope = 0.0;
    double intercept = 0.0;
    double max_residual = 0.0;
    double n_lo = 0.0;
    double n_hi = 0.0;
    int points = 0;
};

/// Fits only the points with n >= n_hi / 8; at least four must remain.
/// Throws std::invalid_argument for non-positive n or values.
ExponentFit fit_exponent(std::span<const std::pair<double, double>> points);

enum class Verdict { consistent, violated, inconclusive };
const char* to_string(Verdict v);

/// Column-named numeric table; every row has one entry per column.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

struct VerificationReport {
    std::string theorem;
    std::vector<std::pair<std::string, double>> parameters;
    bool admissible = true;
    std::string branch;
    Table table;
    double ratio_sup = 0.0;
    std::vector<std::pair<std::string, ExponentFit>> fits;
    Verdict verdict = Verdict::inconclusive;
    std::vector<std::pair<std::string, double>> notes;
    std::string message;

    const ExponentFit* fit(const std::string& name) const;
    std::optional<double> note(const std::string& name) const;
    std::vector<double> column(const std::string& name) const;
};

/// Necessary conditions only assert bounded ratios, so a run is called
/// violated only when the ratio rises monotonically over the top two octaves
/// of n and at least doubles there. Requires n_hi/4, n_hi/2 and n_hi to be
/// present; otherwise the data are treated as consistent.
Verdict bounded_ratio_verdict(std::span<const double> n, std::span<const double> ratio);

struct Admissibility {
    bool admissible = false;
    std::string branch;
    std::string reason;
};

Admissibility thm11_admissible(double p, double gamma, double alpha, double a);
Admissibility thm12_admissible(double p, double gamma, double alpha, double a);

/// Test-function families. Every degree n in a run gets the single mode L_n,
/// `random_trials` expansions with seeded uniform +-1 coefficients (placed only
/// at degree random_degree when that is positive), the power profiles
/// c_k = (k+1)^{-s}, the Dirichlet profile c_k = 1 and, optionally, the
/// Cesaro-kernel profile c_k = A_{n-k}^kappa / A_n^kappa.
struct FamilySpec {
    bool single_modes = true;
    int random_trials = 16;
    int random_degree = 0;
    std::vector<double> power_exponents{0.6, 1.0, 2.0};
    bool dirichlet = true;
    std::vector<double> kernel_orders;
};

struct FamilyMember {
    std::string label;
    LaguerreExpansion f;
};

std::vector<FamilyMember> family_members(const FamilySpec& spec, double alpha, int degree,
                                         std::uint64_t seed);

/// Run-wide knobs shared by all verifications.
struct RunOptions {
    std::uint64_t seed = 1;
    int threads = 1;
    double tol = 1e-7;
};

/// Dyadic grid {1, 2, 4, ..., n_max} (n_max itself appended if not a power of 2).
std::vector<int> dyadic_grid(int n_max, int n_min = 1);

/// Runs fn(i) for i in [0, count) on up to `threads` workers. Results must be
/// written to per-index slots; the caller reduces them in index order.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

/// Bounded-ratio check of the weighted l^q inequality for the Fourier-Laguerre
/// coefficients: ratio = thm11_lhs(fhat) / ||f||, maximized per degree.
VerificationReport verify_thm11(const FamilySpec& family, const SpaceSpec& space, double a,
                                std::span<const int> n_grid, const RunOptions& run);

/// Empirical lower bound of the multiplier norm: sup ||T_m f|| / ||f|| over the
/// fixed families at the given degree (random members seeded), single modes at
/// dyadic degrees below it, and order-2 Cesaro kernels of degree n, 2n and 4n
/// (capped at 512), which act as approximate identities on [0, n].
struct MultiplierBound {
    double value = 0.0;
    std::string argmax;
};
MultiplierBound multiplier_lower_bound(const RealSequence& m, const SpaceSpec& space, int trials,
                                       int degree, const RunOptions& run);

enum class Cor14Variant { a, b };

/// Cohen-type single-coefficient bound for a finite multiplier of length n+1:
/// lhs = (n+1)^e |m_n|, rhs = multiplier_lower_bound, ratio = lhs / rhs as an
/// over-estimate of the constant. `space` carries p and alpha; gamma is set by
/// the variant (alpha, resp. alpha p / 2).
VerificationReport verify_cor14(const RealSequence& m, double p, double alpha, Cor14Variant variant,
                                int trials, const RunOptions& run);

/// verify_cor14 swept over n with m = make_m(n).
VerificationReport sweep_cor14(const std::function<RealSequence(int)>& make_m, double p, double alpha,
                               Cor14Variant variant, std::span<const int> n_grid, int trials,
                               const RunOptions& run, const std::string& family_label);

/// Necessary block condition for a finite multiplier family m = make_m(n):
/// lhs = sup of the dyadic block norms of (k+1)^w Delta_2 Delta^a m_k,
/// rhs = multiplier_lower_bound. weight_exponent overrides
/// (2 gamma + 1)/p - (2 alpha + 1)/2 when given.
VerificationReport verify_block_condition(const std::string& theorem,
                                          const std::function<RealSequence(int)>& make_m,
                                          const SpaceSpec& space, double a, double weight_exponent,
                                          bool admissible, const std::string& branch,
                                          std::span<const int> n_grid, int trials,
                                          const RunOptions& run);

VerificationReport verify_thm12(const std::function<RealSequence(int)>& make_m, const SpaceSpec& space,
                                double a, std::span<const int> n_grid, int trials, const RunOptions& run);

enum class Cor13Variant { a, b };
VerificationReport verify_cor13(const std::function<RealSequence(int)>& make_m, double p, double alpha,
                                Cor13Variant variant, std::span<const int> n_grid, int trials,
                                const RunOptions& run);

/// Weight exponent (2 gamma + 1)/p - (2 alpha + 1)/2 of the block condition.
double block_weight_exponent(double p, double gamma, double alpha);

/// lambda = (2 alpha + 1)(1/p - 1/2).
double cor13_lambda(double p, double alpha);

/// Block profiles for m_k = (-1)^k (k+1)^{-eps} (or the constant-sign
/// (k+1)^{-eps} when alternating is false), gamma = alpha:
///   plain:  (k+1)   Delta m_k
///   delta2: (k+1)^lambda Delta_2 Delta^{lambda-1} m_k
/// each at the q induced by p and at q = inf.
struct Remark3Result {
    double lambda = 0.0;
    double q = 0.0;
    bool illustrative = false;
    BlockNormProfile plain;
    BlockNormProfile delta2;
    BlockNormProfile plain_qinf;
    BlockNormProfile delta2_qinf;
    ExponentFit plain_fit;
    ExponentFit delta2_fit;
    ExponentFit plain_qinf_fit;
    ExponentFit delta2_qinf_fit;
};
Remark3Result counterexample_remark3(double epsilon, double alpha, double p, int n_max,
                                     bool alternating = true, int threads = 1);
VerificationReport remark3_report(const Remark3Result& r, double epsilon, double alpha, double p,
                                  int n_max, bool alternating);

/// Sufficient l^1 condition: ||f||_{L^1_{w(gamma)}} against K for the function
/// with fhat_alpha(k) = f_k (k <= n_synth), plus the Cesaro kernel norms over
/// n_grid and their fitted growth exponent (expected alpha - gamma).
VerificationReport verify_thm31(const RealSequence& fseq, double delta, double alpha, double gamma,
                                int n_synth, std::span<const int> kernel_grid, const RunOptions& run);

/// Kernel L^1 norms over n_grid with the reference (n+1)^{alpha-gamma}.
VerificationReport kernel_norms(double delta, double alpha, double gamma, std::span<const int> n_grid,
                                const RunOptions& run);

/// Bounded-ratio check of the weighted l^1 necessary condition for L^1_{w(gamma)}.
/// paired_delta is the Cesaro order of the sufficient condition it is compared
/// with (defaults to its infimum 2 gamma - alpha + 1/2).
VerificationReport verify_thm32(const FamilySpec& family, double alpha, double gamma,
                                std::span<const int> n_grid, const RunOptions& run,
                                std::optional<double> paired_delta = std::nullopt);

/// Lower bound of a multiplier norm across n: rows (n, bound, reference, ratio).
VerificationReport multiplier_lower_sweep(const std::function<RealSequence(int)>& make_m,
                                          const SpaceSpec& space, std::span<const int> n_grid,
                                          int trials, double reference_exponent,
                                          const RunOptions& run, const std::string& family_label);

}  // namespace lagmult
