#pragma once

#include <map>
#include <utility>

#include "dlchi/bigint.hpp"
#include "dlchi/character_table.hpp"
#include "dlchi/errors.hpp"
#include "dlchi/partition.hpp"
#include "dlchi/polynomial.hpp"
#include "dlchi/tableau.hpp"

namespace dlchi {

/* Kostka-Foulkes polynomial K_{mu,lambda}(t) = sum of t^charge over the
   semistandard tableaux of shape mu and content lambda. */
inline IntPolynomial kostka_foulkes(const Partition& mu, const Partition& lambda) {
    IntPolynomial k;
    for (const Tableau& t : ssyt_enumerate(mu, lambda)) {
        int c = charge(t);
        k.set_coefficient(c, k.coefficient(c) + 1);
    }
    return k;
}

/* Kostka number: tableau count, K_{mu,lambda}(1). */
inline BigInt kostka_number(const Partition& mu, const Partition& lambda) {
    return BigInt(ssyt_enumerate(mu, lambda).size());
}

/* Green polynomial for GL_n, normalized so that

     Q(rho, lambda)(q) = q^{n(lambda)} * sum_mu chi^mu(rho) K_{mu,lambda}(q^{-1}).

   Since deg K_{mu,lambda} <= n(lambda), clearing q^{-1} leaves a genuine
   polynomial; a negative exponent would mean the charge computation broke,
   so it is a hard error. Fixed points of this normalization:
   Q((1^n), (1^n))(q) has degree n(lambda) and Q(rho, (n)) = 1. */
inline IntPolynomial green_polynomial(const Partition& rho, const Partition& lambda,
                                      const CharacterTable& table) {
    if (rho.weight() != lambda.weight())
        throw usage_error("rho and lambda must have equal weight");
    if (rho.weight() != table.n())
        throw usage_error("character table size does not match the partitions");
    int shift = lambda.n_stat();
    IntPolynomial q;
    for (const Partition& mu : table.labels()) {
        int64_t chi = table.at(mu, rho);
        if (chi == 0) continue;
        IntPolynomial k = kostka_foulkes(mu, lambda);
        for (int d = 0; d <= k.degree(); ++d) {
            const BigInt& c = k.coefficient(d);
            if (c == 0) continue;
            if (d > shift)
                throw internal_error("Kostka-Foulkes degree exceeds n(lambda)");
            q.set_coefficient(shift - d, q.coefficient(shift - d) + c * chi);
        }
    }
    return q;
}

inline IntPolynomial green_polynomial(const Partition& rho, const Partition& lambda) {
    CharacterTable table(rho.weight());
    return green_polynomial(rho, lambda, table);
}

/* Caches the character table and the Kostka-Foulkes polynomials across
   repeated evaluations at the same n. */
class GreenCalculator {
public:
    explicit GreenCalculator(int n) : table_(n) {}

    const CharacterTable& table() const { return table_; }

    const IntPolynomial& kostka_foulkes_cached(const Partition& mu, const Partition& lambda) {
        auto key = std::make_pair(mu, lambda);
        auto it = kf_.find(key);
        if (it == kf_.end()) it = kf_.emplace(key, kostka_foulkes(mu, lambda)).first;
        return it->second;
    }

    IntPolynomial q_polynomial(const Partition& rho, const Partition& lambda) {
        if (rho.weight() != table_.n() || lambda.weight() != table_.n())
            throw usage_error("partition weight does not match the calculator size");
        int shift = lambda.n_stat();
        IntPolynomial q;
        for (const Partition& mu : table_.labels()) {
            int64_t chi = table_.at(mu, rho);
            if (chi == 0) continue;
            const IntPolynomial& k = kostka_foulkes_cached(mu, lambda);
            for (int d = 0; d <= k.degree(); ++d) {
                const BigInt& c = k.coefficient(d);
                if (c == 0) continue;
                if (d > shift)
                    throw internal_error("Kostka-Foulkes degree exceeds n(lambda)");
                q.set_coefficient(shift - d, q.coefficient(shift - d) + c * chi);
            }
        }
        return q;
    }

private:
    CharacterTable table_;
    std::map<std::pair<Partition, Partition>, IntPolynomial> kf_;
};

} // namespace dlchi
