#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dlchi/assignment.hpp"
#include "dlchi/bigint.hpp"
#include "dlchi/errors.hpp"
#include "dlchi/partition.hpp"

namespace dlchi {

namespace detail {

/* Beta set of mu padded to length L: strictly decreasing first-column hook
   lengths beta_i = mu_i + (L - 1 - i), 0-based. */
inline std::vector<int> beta_set(const Partition& mu, int L) {
    std::vector<int> beta(static_cast<size_t>(L));
    for (int i = 0; i < L; ++i) {
        int part = i < mu.num_parts() ? mu.part(i) : 0;
        beta[static_cast<size_t>(i)] = part + (L - 1 - i);
    }
    return beta;
}

inline Partition partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    int L = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < L; ++i) {
        int p = beta[static_cast<size_t>(i)] - (L - 1 - i);
        if (p < 0) throw internal_error("beta set does not describe a partition");
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

/* Murnaghan-Nakayama, consuming class parts largest first. Removing a border
   strip of size r moves one beta number down by r; the strip height parity is
   the number of beta numbers jumped over. */
inline int64_t mn_recurse(const Partition& mu, const Partition& rho,
                          std::map<std::pair<Partition, Partition>, int64_t>& memo) {
    if (rho.empty()) return 1;
    auto key = std::make_pair(mu, rho);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int r = rho.part(0);
    std::vector<int> rest_parts(rho.parts().begin() + 1, rho.parts().end());
    Partition rest(std::move(rest_parts));

    int L = mu.num_parts();
    std::vector<int> beta = beta_set(mu, L);
    int64_t total = 0;
    for (int i = 0; i < L; ++i) {
        int lowered = beta[static_cast<size_t>(i)] - r;
        if (lowered < 0) continue;
        bool occupied = false;
        int jumped = 0;
        for (int j = 0; j < L; ++j) {
            if (j == i) continue;
            int b = beta[static_cast<size_t>(j)];
            if (b == lowered) { occupied = true; break; }
            if (b > lowered && b < beta[static_cast<size_t>(i)]) ++jumped;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[static_cast<size_t>(i)] = lowered;
        int64_t sign = (jumped % 2 == 0) ? 1 : -1;
        total += sign * mn_recurse(partition_from_beta(std::move(nb)), rest, memo);
    }
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace detail

/* Irreducible character chi^mu evaluated on the class rho. */
inline int64_t mn_character(const Partition& mu, const Partition& rho) {
    if (mu.weight() != rho.weight())
        throw usage_error("mu and rho must have equal weight");
    std::map<std::pair<Partition, Partition>, int64_t> memo;
    return detail::mn_recurse(mu, rho, memo);
}

/* Full character table of S_n. Rows and columns are indexed by partitions
   of n in reverse lexicographic order. */
class CharacterTable {
public:
    explicit CharacterTable(int n) : n_(n), labels_(all_partitions(n)) {
        std::map<std::pair<Partition, Partition>, int64_t> memo;
        values_.resize(labels_.size());
        for (size_t m = 0; m < labels_.size(); ++m) {
            values_[m].resize(labels_.size());
            for (size_t r = 0; r < labels_.size(); ++r)
                values_[m][r] = detail::mn_recurse(labels_[m], labels_[r], memo);
        }
        for (size_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i], i);
    }

    int n() const { return n_; }
    const std::vector<Partition>& labels() const { return labels_; }

    int64_t at(const Partition& mu, const Partition& rho) const {
        return values_[index_of(mu)][index_of(rho)];
    }

    int64_t dimension(const Partition& mu) const {
        std::vector<int> ones(static_cast<size_t>(n_), 1);
        return at(mu, Partition(std::move(ones)));
    }

    size_t index_of(const Partition& p) const {
        auto it = index_.find(p);
        if (it == index_.end()) throw usage_error("partition is not a label of this table");
        return it->second;
    }

private:
    int n_;
    std::vector<Partition> labels_;
    std::vector<std::vector<int64_t>> values_;
    std::map<Partition, size_t> index_;
};

struct OrthogonalityReport {
    bool ok = true;
    std::string detail;
};

/* Column orthogonality: sum_mu chi^mu(rho) chi^mu(sigma) = delta * z_rho. */
inline OrthogonalityReport column_orthogonality_check(const CharacterTable& table) {
    OrthogonalityReport rep;
    const auto& labels = table.labels();
    for (const Partition& rho : labels) {
        for (const Partition& sigma : labels) {
            BigInt sum = 0;
            for (const Partition& mu : labels)
                sum += BigInt(table.at(mu, rho)) * table.at(mu, sigma);
            BigInt expected = (rho == sigma) ? rho.centralizer_order() : BigInt(0);
            if (sum != expected) {
                rep.ok = false;
                std::ostringstream os;
                os << "column orthogonality fails at rho=" << rho.to_string()
                   << " sigma=" << sigma.to_string() << ": got " << sum.str()
                   << " expected " << expected.str();
                rep.detail = os.str();
                return rep;
            }
        }
    }
    return rep;
}

/* Multiplicities of the irreducibles in the character induced from the
   trivial character of S_lambda, via the inner product
   K_mu = (1/n!) sum_rho (n!/z_rho) X(rho, lambda) chi^mu(rho).
   All arithmetic is exact; divisibility by n! is asserted. */
inline std::map<Partition, BigInt> youngs_rule_decomposition(const Partition& lambda,
                                                             const CharacterTable& table) {
    if (lambda.weight() != table.n())
        throw usage_error("lambda must be a partition of the table size");
    int n = table.n();
    BigInt nfact = big_factorial(n);
    std::map<Partition, BigInt> out;
    std::vector<std::pair<Partition, BigInt>> class_terms;
    for (const Partition& rho : table.labels()) {
        BigInt class_size = nfact / rho.centralizer_order();
        class_terms.emplace_back(rho, class_size * x_count(rho, lambda));
    }
    for (const Partition& mu : table.labels()) {
        BigInt sum = 0;
        for (const auto& [rho, weight] : class_terms)
            sum += weight * table.at(mu, rho);
        if (sum % nfact != 0)
            throw internal_error("induced character multiplicity is not integral");
        BigInt k = sum / nfact;
        if (k < 0) throw internal_error("induced character multiplicity is negative");
        if (k != 0) out.emplace(mu, k);
    }
    return out;
}

} // namespace dlchi
