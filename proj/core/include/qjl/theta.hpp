#pragma once

#include "qjl/x_series.hpp"

namespace qjl {

// theta(tau, z) = q^(1/8) (-i)(zeta - 1/zeta) prod_{l>=1} (1-q^l)(1-q^l zeta^2)(1-q^l zeta^-2),
// weight 0, trunc N.
QYSeries theta(long N);
// theta'(0) = (1/2)(zeta d/dzeta theta) at zeta = 1, weight 1.
QYSeries theta_prime0(long N);

// Taylor coefficients of w -> theta(w/(2 pi i) + z) at w = 0 with zeta replaced
// by zeta^k, i.e. the expansion of theta(x/(2 pi i) + k z) in x. The x^j
// coefficient is (zeta d/dzeta)^j theta / (2^j j!) and carries weight j.
XSeries theta_taylor(long nx, long N, long k = 1);

// x theta'(0) / theta(x / (2 pi i)); zeta-independent, x^0 coefficient 1.
XSeries x_over_theta(long nx, long N);

// Exact Bernoulli number B_k (B_1 = -1/2).
Rational bernoulli(long k);
// G_k = -B_k/(2k) + sum sigma_{k-1}(n) q^n, k even >= 2, weight k.
QYSeries g_k(long k, long N);
// e_k / (2 pi i)^k = 2 G_k / (k-1)! for even k, zero for odd k.
QYSeries ebar_e(long k, long N);

struct PhiExpansion {
    XSeries coeffs; // coefficient of x^j has weight j
    long nx = 0;
};

// Normalized Phi(x) = x theta(x/(2 pi i) + z) theta'(0) / (theta(x/(2 pi i)) theta(z)).
PhiExpansion phi(long nx, long N);

// Twisted Eisenstein series E_n / (2 pi i)^n, weight n. Cached per (n, N).
QYSeries ebar(long n, long N);

} // namespace qjl
