#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qjl/laurent.hpp"
#include "qjl/qy_series.hpp"

namespace qjl {

// Fourier coefficients c(m, l) of zeta^normalizer * s, y = zeta^2.
struct DmvvTable {
    std::map<std::pair<long, long>, GQ> c;
    long normalizer = 0;
    // c(m, l) is known for m < known_m.
    long known_m = 0;

    GQ at(long m, long l) const;
    // q^m layer as a Laurent polynomial in y.
    LaurentPoly layer(long m) const;
    std::string to_csv() const;
};

// Throws NormalizationError when zeta^normalizer * s has an odd zeta power or a
// fractional q power, and DomainError for non-polynomial coefficients.
DmvvTable extract_cml(const QYSeries &s, long normalizer = 0);
// Inverse of extract_cml, with the normalizer removed again.
QYSeries table_series(const DmvvTable &t);

// Polynomial in q (index m <= M) with Laurent-polynomial coefficients in y.
using QYPoly = std::vector<LaurentPoly>;

struct TripleSeries {
    long P = 0, M = 0, L = 0;
    // layers[n][m] is the coefficient of p^n q^m, exact in y.
    std::vector<QYPoly> layers;

    GQ coeff(long n, long m, long l) const;
    // Columns n,m,l,value over |l| <= L.
    std::string to_csv() const;
};

// prod_{i>=1, m>=0, l} (1 - p^i y^l q^m)^(-c(mi, l)) through p^P q^M, expanded
// as the exponential of its logarithm. Needs c(m, l) for m <= P*M, otherwise
// RangeError.
TripleSeries borcherds_product(const DmvvTable &t, long P, long M, long L);

// The p^n layer, terms with |l| > L dropped.
QYPoly sym_product_genus(const DmvvTable &t, long n, long M, long L);

} // namespace qjl
