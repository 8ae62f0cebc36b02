#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "dlchi/assignment.hpp"
#include "dlchi/bigint.hpp"
#include "dlchi/errors.hpp"
#include "dlchi/flag.hpp"
#include "dlchi/gf.hpp"
#include "dlchi/group_element.hpp"
#include "dlchi/interpolate.hpp"
#include "dlchi/partition.hpp"
#include "dlchi/permutation.hpp"
#include "dlchi/point_count.hpp"
#include "dlchi/polynomial.hpp"

namespace dlchi {

/* cross_size samples the count at the smallest admissible prime powers;
   power_tower samples along q, q^2, q^3, ... for a fixed prime q, where the
   eigenvalues stay in the bottom field. */
enum class SampleMode { cross_size, power_tower };

inline std::string to_string(SampleMode m) {
    return m == SampleMode::cross_size ? "cross-size" : "power-tower";
}

struct PipelineOptions {
    SampleMode mode = SampleMode::cross_size;
    int power_base = 2;
    uint64_t flag_budget = kDefaultFlagBudget;
    int threads = 0;                   // 0: DLCHI_THREADS or hardware
    std::vector<uint16_t> eigenvalues; // empty: field elements 1..num_slots
    int degree_bound = -1;             // -1: l(w)
};

struct CountSample {
    int p = 0;
    int k = 0;
    uint32_t q = 0;
    uint64_t count = 0;
};

struct PointCountSeries {
    PermutationW w;
    GroupElementSpec spec;
    SampleMode mode = SampleMode::cross_size;
    int degree_bound = 0;
    std::vector<CountSample> samples;
};

namespace detail {

inline bool is_prime_power(long long q, int& p, int& k) {
    if (q < 2) return false;
    long long d = 2;
    while (d * d <= q && q % d != 0) ++d;
    if (d * d > q) d = q;
    long long t = q;
    k = 0;
    while (t % d == 0) { t /= d; ++k; }
    if (t != 1) return false;
    p = static_cast<int>(d);
    return true;
}

} // namespace detail

/* The `needed` smallest field sizes usable for this spec and mode, as
   (characteristic, degree) pairs. Explicit eigenvalue indices raise the
   unit requirement: index e only exists in fields with at least e units. */
inline std::vector<std::pair<int, int>> admissible_field_sizes(int n, const GroupElementSpec& spec,
                                                               const PipelineOptions& opts,
                                                               int needed,
                                                               int extra_eigenvalues = 0) {
    int min_units = spec.num_slots();
    for (uint16_t e : opts.eigenvalues) min_units = std::max(min_units, static_cast<int>(e));
    min_units += extra_eigenvalues;
    std::vector<std::pair<int, int>> out;
    std::ostringstream feasible;
    if (opts.mode == SampleMode::cross_size) {
        for (long long q = 2; static_cast<int>(out.size()) < needed && q <= 65536; ++q) {
            int p = 0, k = 0;
            if (!detail::is_prime_power(q, p, k)) continue;
            if (q - 1 < min_units) continue;
            if (flag_count(n, static_cast<uint32_t>(q)) > opts.flag_budget) break;
            out.emplace_back(p, k);
            feasible << ' ' << q;
        }
    } else {
        if (!detail::is_prime(opts.power_base))
            throw usage_error("power tower base must be prime");
        if (opts.power_base - 1 < min_units)
            throw usage_error("power tower base " + std::to_string(opts.power_base) +
                              " cannot host " + std::to_string(min_units) +
                              " distinct nonzero eigenvalues");
        long long q = 1;
        for (int m = 1; static_cast<int>(out.size()) < needed; ++m) {
            q *= opts.power_base;
            if (q > 65536) break;
            if (flag_count(n, static_cast<uint32_t>(q)) > opts.flag_budget) break;
            out.emplace_back(opts.power_base, m);
            feasible << ' ' << q;
        }
    }
    if (static_cast<int>(out.size()) < needed)
        throw resource_error("need " + std::to_string(needed) +
                             " sample fields within budget; feasible sizes:" +
                             (out.empty() ? " none" : feasible.str()));
    return out;
}

/* Memoizes full position counts per (spec, eigenvalues, field). A single
   enumeration of the flags of one field serves every w. */
class PositionCountCache {
public:
    const PositionCounts& get(const GroupElementSpec& spec, const std::vector<uint16_t>& eig,
                              int p, int k, uint64_t flag_budget, int threads) {
        auto key = std::make_tuple(spec.to_string(), eig, p, k);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        FiniteField f(p, k);
        MatrixGF g = build_group_element(spec, f, eig);
        PositionCounts counts = count_all_positions(g, flag_budget, threads);
        return cache_.emplace(std::move(key), std::move(counts)).first->second;
    }

private:
    std::map<std::tuple<std::string, std::vector<uint16_t>, int, int>, PositionCounts> cache_;
};

namespace detail {

inline void check_power_tower_eigenvalues(const PipelineOptions& opts) {
    if (opts.mode != SampleMode::power_tower) return;
    for (uint16_t e : opts.eigenvalues)
        if (e >= static_cast<uint16_t>(opts.power_base))
            throw usage_error("power tower eigenvalues must be constants of the base field");
}

inline PointCountSeries count_series_impl(const PermutationW& w, const GroupElementSpec& spec,
                                          const PipelineOptions& opts, int degree_bound,
                                          PositionCountCache& cache) {
    if (w.n() != spec.n())
        throw usage_error("w and the group element have different sizes");
    check_power_tower_eigenvalues(opts);
    PointCountSeries series;
    series.w = w;
    series.spec = spec;
    series.mode = opts.mode;
    series.degree_bound = degree_bound;
    auto sizes = admissible_field_sizes(spec.n(), spec, opts, degree_bound + 2);
    for (auto [p, k] : sizes) {
        const PositionCounts& counts =
            cache.get(spec, opts.eigenvalues, p, k, opts.flag_budget, opts.threads);
        CountSample s;
        s.p = p;
        s.k = k;
        s.q = counts.q;
        s.count = counts.at(w);
        series.samples.push_back(s);
    }
    return series;
}

} // namespace detail

/* Point counts of the twisted variety for w over the degree_bound + 2
   smallest admissible fields. */
inline PointCountSeries count_series(const PermutationW& w, const GroupElementSpec& spec,
                                     const PipelineOptions& opts = {}) {
    PositionCountCache cache;
    int d = opts.degree_bound >= 0 ? opts.degree_bound : w.length();
    return detail::count_series_impl(w, spec, opts, d, cache);
}

/* Exact fit of a count series; the last sample is held out. */
inline IntPolynomial fit_polynomial(const PointCountSeries& series) {
    std::vector<std::pair<BigRat, BigRat>> pts;
    pts.reserve(series.samples.size());
    for (const CountSample& s : series.samples)
        pts.emplace_back(BigRat(s.q), BigRat(s.count));
    return fit_polynomial(pts, series.degree_bound);
}

struct EulerResult {
    PointCountSeries series;
    IntPolynomial poly;
    BigInt chi;
};

/* Interpolate the point count polynomial and evaluate at q = 1. The initial
   degree bound l(w) is correct for generic g but can undershoot (the variety
   for w = id and central g is the whole flag variety); a held-out mismatch
   restarts with the bound doubled, clamped to the dimension bound
   n(n-1)/2, beyond which a further mismatch is impossible. */
inline EulerResult euler_characteristic(const PermutationW& w, const GroupElementSpec& spec,
                                        const PipelineOptions& opts = {},
                                        PositionCountCache* shared_cache = nullptr) {
    PositionCountCache local;
    PositionCountCache& cache = shared_cache ? *shared_cache : local;
    int n = spec.n();
    int d = opts.degree_bound >= 0 ? opts.degree_bound : w.length();
    int d_max = n * (n - 1) / 2;
    if (d > d_max) d = d_max;
    for (;;) {
        PointCountSeries series = detail::count_series_impl(w, spec, opts, d, cache);
        try {
            IntPolynomial poly = fit_polynomial(series);
            return EulerResult{std::move(series), poly, poly(1)};
        } catch (const degree_bound_error&) {
            if (d >= d_max)
                throw internal_error("count series does not fit a polynomial of the "
                                     "dimension bound degree");
            d = std::min(std::max(1, 2 * d), d_max);
        }
    }
}

struct ClosedFormResult {
    int sign = 1;              // (-1)^{n - #parts}
    RationalFunction fn;       // reduced quotient; always a polynomial
    IntPolynomial poly;
    BigInt value_at_1 = 0;
};

/* Closed form sign * prod_{i<=n}(q^i - 1) / prod_j(q^{rho_j} - 1). The
   denominator always divides the numerator (compare cyclotomic
   multiplicities), and at q = 1 the reduced polynomial evaluates to n! when
   rho = (1^n) and to 0 otherwise. */
inline ClosedFormResult closed_form_chi(int n, const Partition& rho) {
    if (rho.weight() != n) throw usage_error("rho must be a partition of n");
    auto q_power_minus_one = [](int e) {
        IntPolynomial p = IntPolynomial::monomial(e, 1);
        return p - IntPolynomial::constant(1);
    };
    ClosedFormResult out;
    out.sign = (n - rho.num_parts()) % 2 == 0 ? 1 : -1;
    IntPolynomial num = IntPolynomial::constant(out.sign);
    for (int i = 1; i <= n; ++i) num = num * q_power_minus_one(i);
    IntPolynomial den = IntPolynomial::constant(1);
    for (int p : rho.parts()) den = den * q_power_minus_one(p);
    out.fn = RationalFunction(RatPolynomial::from_int(num), RatPolynomial::from_int(den));
    if (!out.fn.is_polynomial())
        throw internal_error("closed form did not reduce to a polynomial");
    out.poly = out.fn.as_polynomial().to_int_polynomial();
    out.value_at_1 = out.poly(1);
    return out;
}

} // namespace dlchi
