#pragma once

#include <stdexcept>
#include <string>

namespace dlchi {

/* Bad arguments: malformed partitions, non-bijective maps, out-of-domain
   requests. Maps to CLI exit code 2. */
class usage_error : public std::invalid_argument {
public:
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

/* A computation would exceed an explicit budget (flag enumeration size,
   coset count, sample points). Also exit code 2. */
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/* An internal consistency check failed. These are hard assertions about
   mathematical facts (integrality of interpolated coefficients, exact
   divisibility, no negative exponents); reaching one is a bug. */
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

/* The degree bound handed to the polynomial fitter was too small: the
   held-out samples disagree with the fitted polynomial. Recoverable by
   refitting with a larger bound. */
class degree_bound_error : public std::runtime_error {
public:
    explicit degree_bound_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dlchi
