#pragma once

#include <functional>
#include <optional>

#include "qjl/laurent.hpp"
#include "qjl/q_series.hpp"
#include "qjl/variety.hpp"
#include "qjl/x_series.hpp"

namespace qjl {

// Characteristic series R(x) = sum a_j x^j with a_0 = 1, kept together with
// its logarithm (which is what the multiplicative sequence consumes).
struct CharSeries {
    XSeries coeffs;
    XSeries log_coeffs;
    // Multiplied in dim times after integration (theta(-z)/theta'(0) for the
    // elliptic genus).
    std::optional<QYSeries> root_factor;
    // Factor contributed by a divisor with coefficient delta; empty when the
    // series has no pair version.
    std::function<XSeries(long delta)> divisor_factor;

    long nx() const { return coeffs.nx(); }
    static CharSeries from_coeffs(XSeries coeffs);
    static CharSeries from_log(XSeries log_coeffs);
};

// x theta(x/(2 pi i) - z) theta'(0) / (theta(-z) theta(x/(2 pi i))), with the
// theta(-z)/theta'(0) root factor and the pair divisor factors attached.
CharSeries char_series_elliptic(long nx, long N);

// theta(x/(2 pi i) - (delta+1) z) theta(-z) / (theta(x/(2 pi i) - z) theta(-(delta+1) z)).
// delta = -1 raises DegenerateDivisorError.
XSeries divisor_factor(long delta, long nx, long N);

// (x/2)/sinh(x/2) prod_n [(1-q^n)^2 / ((1-q^n e^x)(1-q^n e^-x))]^((-1)^n),
// zeta-independent, weight 0.
CharSeries char_series_ochanine(long nx, long N);

// integral over [X] of prod_l R(x_l) prod_k F_{delta_k}(d_k), times
// root_factor^dim. PrecisionError if cs.nx() < dim.
QYSeries genus(const VarietyModel &model, const CharSeries &cs, bool use_divisors);

// Ell(X) (or Ell(X, D) with use_divisors), weight 0, polynomial in zeta.
QYSeries elliptic_genus(const VarietyModel &model, long N, bool use_divisors = false);
// (theta'(0)/theta(z))^dim, weight dim.
QYSeries elliptic_normalizer(int dim, long N);
// normalizer * Ell: the quasi-Jacobi form of weight dim.
QYSeries normalized_elliptic_genus(const VarietyModel &model, long N, bool use_divisors = false);

// q^0 coefficient of zeta^dim Ell(X) as a polynomial in y = zeta^2.
LaurentPoly q0_layer(const VarietyModel &model);
// Hirzebruch chi_y = sum_p chi(Omega^p) y^p, i.e. q0_layer with y -> -y.
LaurentPoly chi_y(const VarietyModel &model);

QSeries ochanine_direct(const VarietyModel &model, long N);
// The constant relating zeta^dim Ell at zeta = i to the Ochanine genus.
GQ ochanine_dimension_factor(int dim);
QSeries ochanine_via_specialization(const VarietyModel &model, long N);

QYSeries sqrt_elliptic_class(const QYSeries &s);

} // namespace qjl
