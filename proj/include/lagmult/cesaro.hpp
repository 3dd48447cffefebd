#pragma once

#include "lagmult/transform.hpp"

#include <vector>

namespace lagmult {

/// Cesaro means of order delta >= 0 and degree n for Laguerre expansions of
/// index alpha.
struct CesaroSpec {
    int n = 0;
    double delta = 0.0;
    double alpha = 0.0;

    void validate() const;
};

/// m_{k,n}^delta = A_{n-k}^delta / A_n^delta for k = 0..n.
std::vector<double> cesaro_multiplier(const CesaroSpec& spec);

/// chi_n^{alpha,delta}(x) = L_n^{alpha+delta+1}(x) / (A_n^delta Gamma(alpha+1)).
double cesaro_kernel(const CesaroSpec& spec, double x);

/// The defining sum (A_n^delta Gamma(alpha+1))^{-1} sum_k A_{n-k}^delta L_k^alpha(x).
/// Kept as an independent check of the closed form.
double cesaro_kernel_summed(const CesaroSpec& spec, double x);

/// The kernel as an expansion in L^{alpha+delta+1} (a single mode).
LaguerreExpansion cesaro_kernel_expansion(const CesaroSpec& spec);

/// ||chi_n^{alpha,delta}||_{L^1_{w(gamma)}}; panels are split at the zeros of
/// L_n^{alpha+delta+1}, which are the Gauss-Laguerre nodes of that index.
double kernel_l1_norm(const CesaroSpec& spec, double gamma, double tol = 1e-9);

}  // namespace lagmult
