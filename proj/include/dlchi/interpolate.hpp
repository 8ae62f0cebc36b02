#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dlchi/bigint.hpp"
#include "dlchi/errors.hpp"
#include "dlchi/polynomial.hpp"

namespace dlchi {

/* Exact Lagrange interpolation through all given points. */
inline RatPolynomial lagrange_fit(const std::vector<std::pair<BigRat, BigRat>>& points) {
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw usage_error("interpolation nodes must be distinct");
    RatPolynomial acc;
    for (size_t i = 0; i < points.size(); ++i) {
        RatPolynomial basis = RatPolynomial::constant(1);
        BigRat denom = 1;
        for (size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * RatPolynomial({-points[j].first, BigRat(1)});
            denom *= points[i].first - points[j].first;
        }
        acc = acc + basis * (points[i].second / denom);
    }
    return acc;
}

/* Fits a polynomial of degree <= degree_bound through the first
   degree_bound + 1 samples and demands that every remaining sample lies on
   it exactly. A held-out mismatch means the bound was too small and is
   recoverable; non-integer coefficients after all samples matched would be
   a genuine bug. */
inline IntPolynomial fit_polynomial(const std::vector<std::pair<BigRat, BigRat>>& samples,
                                    int degree_bound) {
    if (degree_bound < 0) throw usage_error("degree bound must be non-negative");
    size_t nodes = static_cast<size_t>(degree_bound) + 1;
    if (samples.size() < nodes + 1)
        throw usage_error("need at least degree_bound + 2 samples, one to hold out");
    std::vector<std::pair<BigRat, BigRat>> head(samples.begin(),
                                                samples.begin() + static_cast<long>(nodes));
    RatPolynomial fit = lagrange_fit(head);
    for (size_t i = nodes; i < samples.size(); ++i) {
        BigRat predicted = fit(samples[i].first);
        if (predicted != samples[i].second) {
            std::ostringstream os;
            os << "held-out sample at x=" << samples[i].first
               << " disagrees with the degree-" << degree_bound << " fit: predicted "
               << predicted << ", counted " << samples[i].second;
            throw degree_bound_error(os.str());
        }
    }
    if (!fit.is_integral())
        throw internal_error("fitted point count polynomial has non-integer coefficients");
    return fit.to_int_polynomial();
}

} // namespace dlchi
